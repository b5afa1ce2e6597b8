#ifndef JSOB_POLY_HPP
#define JSOB_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jsob/rational.hpp"

namespace jsob {

/// Degree reported for the zero polynomial. Never participates in
/// arithmetic; callers test is_zero() first.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial over BigRational, coefficients indexed by
/// power with trailing zeros trimmed.
class Poly {
   public:
    Poly() = default;
    Poly(const BigRational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) coeffs_.push_back(c);
    }
    Poly(long c) : Poly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<long> coeffs) {
        for (long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static Poly x() { return Poly(std::vector<BigRational>{0, 1}); }
    static Poly monomial(std::size_t k, const BigRational& c = 1) {
        std::vector<BigRational> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }
    /// a*x + b
    static Poly linear(const BigRational& a, const BigRational& b) {
        return Poly(std::vector<BigRational>{b, a});
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept {
        return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
    }
    const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
    BigRational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRational(0); }
    BigRational leading() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    BigRational operator()(const BigRational& at) const {
        BigRational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= at;
            acc += *it;
        }
        return acc;
    }

    /// p(q(x)).
    Poly compose(const Poly& inner) const {
        Poly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly(*it);
        return acc;
    }

    /// p(x + c).
    Poly shift(const BigRational& c) const { return compose(linear(1, c)); }

    Poly derivative(unsigned order = 1) const {
        if (coeffs_.size() <= order) return {};
        std::vector<BigRational> d(coeffs_.size() - order);
        for (std::size_t k = order; k < coeffs_.size(); ++k) {
            BigRational f(1);
            for (unsigned i = 0; i < order; ++i) f *= static_cast<long>(k - i);
            d[k - order] = coeffs_[k] * f;
        }
        return Poly(std::move(d));
    }

    /// Antiderivative with zero constant term.
    Poly integral() const {
        std::vector<BigRational> v(coeffs_.size() + 1);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k + 1] = coeffs_[k] / static_cast<long>(k + 1);
        return Poly(std::move(v));
    }

    BigRational integrate(const BigRational& from, const BigRational& to) const {
        Poly g = integral();
        return g(to) - g(from);
    }

    Poly monic() const {
        if (is_zero()) return {};
        return *this * (BigRational(1) / leading());
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const BigRational& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const BigRational& s) { return a *= s; }
    friend Poly operator*(const BigRational& s, Poly a) { return a *= s; }
    friend Poly operator*(Poly a, long s) { return a *= BigRational(s); }
    friend Poly operator*(long s, Poly a) { return a *= BigRational(s); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(v));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const char* var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const BigRational& c = coeffs_[k];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            BigRational a = abs(c);
            if (a != 1 || k == 0) os << a.get_str();
            if (k > 0) {
                if (a != 1) os << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

inline Poly pow(const Poly& base, unsigned exponent) {
    Poly acc(1);
    Poly b = base;
    while (exponent != 0) {
        if (exponent & 1U) acc *= b;
        b *= b;
        exponent >>= 1;
    }
    return acc;
}

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero() || a.degree() < b.degree()) return {Poly(), a};
    std::vector<BigRational> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<BigRational> quo(rem.size() - db);
    BigRational inv_lead = BigRational(1) / bc.back();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0) continue;
        BigRational f = rem[k] * inv_lead;
        quo[k - db] = f;
        for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= f * bc[i];
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

/// Exact quotient; throws NotDivisible if the remainder is nonzero.
inline Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw NotDivisible("polynomial division leaves remainder " + r.str());
    return q;
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// theta_x = x(x + alpha + beta + 1) as a polynomial in x.
inline Poly theta_poly(const BigRational& alpha, const BigRational& beta) {
    return Poly(std::vector<BigRational>{0, alpha + beta + 1, 1});
}

}  // namespace jsob

#endif  // JSOB_POLY_HPP
