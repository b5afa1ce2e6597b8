#ifndef JSOB_OPERATOR_HPP
#define JSOB_OPERATOR_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "jsob/poly.hpp"

namespace jsob {

/// Linear differential operator sum_j coeffs[j](x) (d/dx)^j with polynomial
/// coefficients.
class DiffOp {
   public:
    DiffOp() = default;
    explicit DiffOp(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static DiffOp identity() { return DiffOp({Poly(1)}); }
    static DiffOp scalar(const BigRational& c) { return DiffOp({Poly(c)}); }
    static DiffOp multiply_by(const Poly& f) { return DiffOp({f}); }
    static DiffOp derivative() { return DiffOp({Poly(), Poly(1)}); }

    const std::vector<Poly>& coeffs() const noexcept { return coeffs_; }
    Poly coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Poly(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Highest derivative with a nonzero coefficient; the zero operator has order -1.
    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// Membership in the algebra of operators that do not raise degree:
    /// deg coeffs[j] <= j for every j.
    bool in_algebra() const {
        for (std::size_t j = 0; j < coeffs_.size(); ++j)
            if (!coeffs_[j].is_zero() && coeffs_[j].degree() > static_cast<int>(j)) return false;
        return true;
    }

    Poly operator()(const Poly& p) const {
        Poly acc;
        Poly d = p;
        for (std::size_t j = 0; j < coeffs_.size() && !d.is_zero(); ++j) {
            if (!coeffs_[j].is_zero()) acc += coeffs_[j] * d;
            d = d.derivative();
        }
        return acc;
    }

    DiffOp& operator+=(const DiffOp& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
        trim();
        return *this;
    }
    DiffOp& operator-=(const DiffOp& o) { return *this += o * BigRational(-1); }
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(DiffOp a, const BigRational& s) {
        for (auto& c : a.coeffs_) c *= s;
        a.trim();
        return a;
    }
    friend DiffOp operator*(const BigRational& s, DiffOp a) { return std::move(a) * s; }

    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Poly> coeffs_;
};

/// Composition a o b by the Leibniz rule:
/// d^i (f d^j) = sum_k C(i,k) f^(k) d^(i-k+j).
inline DiffOp compose(const DiffOp& a, const DiffOp& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Poly> out(ac.size() + bc.size() - 1);
    for (std::size_t j = 0; j < bc.size(); ++j) {
        if (bc[j].is_zero()) continue;
        // Derivatives of b_j, computed once per j.
        std::vector<Poly> derivs{bc[j]};
        for (std::size_t i = 0; i < ac.size(); ++i) {
            if (ac[i].is_zero()) continue;
            while (derivs.size() <= i) derivs.push_back(derivs.back().derivative());
            for (std::size_t k = 0; k <= i; ++k) {
                if (derivs[k].is_zero()) break;
                out[i - k + j] += ac[i] * (derivs[k] * binomial(static_cast<long>(i), static_cast<long>(k)));
            }
        }
    }
    return DiffOp(std::move(out));
}

/// p(op) = sum_k p_k op^k, evaluated by Horner's rule.
inline DiffOp poly_of_operator(const Poly& p, const DiffOp& op) {
    DiffOp acc;
    const auto& co = p.coeffs();
    for (std::size_t k = co.size(); k-- > 0;) acc = compose(acc, op) + DiffOp::scalar(co[k]);
    return acc;
}

}  // namespace jsob

#endif  // JSOB_OPERATOR_HPP
