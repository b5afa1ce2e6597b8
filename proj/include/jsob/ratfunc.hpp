#ifndef JSOB_RATFUNC_HPP
#define JSOB_RATFUNC_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "jsob/poly.hpp"

namespace jsob {

/// Reduced quotient num/den of polynomials: den is monic and coprime to num.
/// The zero function is 0/1.
class RationalFunction {
   public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const BigRational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    /// The numerator when the denominator is 1; throws NotDivisible otherwise.
    const Poly& as_poly() const {
        if (!is_polynomial()) throw NotDivisible("rational function is not a polynomial: " + str());
        return num_;
    }

    bool defined_at(const BigRational& at) const { return den_(at) != 0; }

    BigRational operator()(const BigRational& at) const {
        BigRational d = den_(at);
        if (d == 0) throw std::domain_error("rational function has a pole at " + to_string(at));
        return num_(at) / d;
    }

    /// f(a*x + b).
    RationalFunction substitute_linear(const BigRational& a, const BigRational& b) const {
        Poly lin = Poly::linear(a, b);
        return {num_.compose(lin), den_.compose(lin)};
    }
    RationalFunction shift(const BigRational& c) const { return substitute_linear(1, c); }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
        // Cross-cancel first to keep intermediate degrees small.
        Poly g1 = gcd(a.num_, b.den_);
        Poly g2 = gcd(b.num_, a.den_);
        Poly n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
        Poly d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
        RationalFunction r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        r.normalize_lead();
        return r;
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by the zero rational function");
        return a * RationalFunction(b.den_, b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

   private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        if (den_.degree() > 0) {
            Poly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        normalize_lead();
    }
    void normalize_lead() {
        BigRational lc = den_.leading();
        if (lc != 1) {
            BigRational inv = BigRational(1) / lc;
            num_ *= inv;
            den_ *= inv;
        }
    }

    Poly num_;
    Poly den_;
};

}  // namespace jsob

#endif  // JSOB_RATFUNC_HPP
