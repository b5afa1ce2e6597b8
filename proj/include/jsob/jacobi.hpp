#ifndef JSOB_JACOBI_HPP
#define JSOB_JACOBI_HPP

// Jacobi polynomials in the normalization
//   J_n = (-1)^n (a+b+1)_n / (2^n (b+1)_n) sum_j C(n+a, j) C(n+b, n-j) (x-1)^(n-j) (x+1)^j,
// which relates to the textbook P_n by J_n = (-1)^n (a+b+1)_n / (b+1)_n P_n.

#include <stdexcept>

#include "jsob/operator.hpp"
#include "jsob/poly.hpp"
#include "jsob/transforms.hpp"

namespace jsob {

class JacobiContext {
   public:
    JacobiContext(BigRational alpha, BigRational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
        auto bad = [](const BigRational& v) { return is_integer(v) && v <= -1; };
        if (bad(alpha_) || bad(beta_) || bad(alpha_ + beta_))
            throw ParameterOutOfRange("Jacobi parameters must avoid -1, -2, ...");
    }
    JacobiContext(long alpha, long beta) : JacobiContext(BigRational(alpha), BigRational(beta)) {}

    const BigRational& alpha() const noexcept { return alpha_; }
    const BigRational& beta() const noexcept { return beta_; }

    /// theta_n = n(n+a+b+1).
    BigRational theta(const BigRational& n) const { return n * (n + alpha_ + beta_ + 1); }
    /// sigma_n = 2n+a+b-1.
    BigRational sigma(const BigRational& n) const { return 2 * n + alpha_ + beta_ - 1; }

    Poly theta_x() const { return theta_poly(alpha_, beta_); }
    /// sigma_{x+shift} as a polynomial in x.
    Poly sigma_x(const BigRational& shift = 0) const { return Poly::linear(2, 2 * shift + alpha_ + beta_ - 1); }

   private:
    BigRational alpha_;
    BigRational beta_;
};

/// J_n^{a,b}; the zero polynomial for n < 0.
inline Poly jacobi_poly(const JacobiContext& ctx, long n) {
    if (n < 0) return {};
    const BigRational& a = ctx.alpha();
    const BigRational& b = ctx.beta();
    const Poly xm1 = Poly::linear(1, -1);
    const Poly xp1 = Poly::linear(1, 1);
    Poly sum;
    for (long j = 0; j <= n; ++j) {
        BigRational c = binomial(BigRational(n) + a, j) * binomial(BigRational(n) + b, n - j);
        if (c == 0) continue;
        sum += pow(xm1, static_cast<unsigned>(n - j)) * pow(xp1, static_cast<unsigned>(j)) * c;
    }
    BigRational scale = BigRational(sign_power(n)) * rising(a + b + 1, n) /
                        (pow(BigRational(2), n) * rising(b + 1, n));
    return sum * scale;
}

/// D_{a,b} = (x^2-1) d^2 + ((a+b+2)x - b + a) d, with D(J_n) = theta_n J_n.
inline DiffOp classical_operator(const JacobiContext& ctx) {
    const BigRational& a = ctx.alpha();
    const BigRational& b = ctx.beta();
    return DiffOp({Poly(), Poly::linear(a + b + 2, a - b), Poly({-1, 0, 1})});
}

/// Integral over (-1, 1) of p(x) (1-x)^a (1+x)^b for nonnegative integers a, b.
inline BigRational weighted_integral(const Poly& p, long a, long b) {
    if (a < 0 || b < 0) throw ParameterOutOfRange("weight exponents must be nonnegative integers");
    Poly w = pow(Poly({1, -1}), static_cast<unsigned>(a)) * pow(Poly({1, 1}), static_cast<unsigned>(b));
    return (w * p).integrate(-1, 1);
}

/// Integral over (-1, 1) of (1-x)^a (1+x)^b x^k.
inline BigRational weight_moment(long a, long b, long k) {
    if (k < 0) throw ParameterOutOfRange("moment index must be nonnegative");
    return weighted_integral(Poly::monomial(static_cast<std::size_t>(k)), a, b);
}

/// i-th derivative of J_n at x = -1 or x = +1 from the closed binomial forms.
/// C(n+a+b, a)/C(a+b, b) is written as (a+b+1)_n/(b+1)_n so that rational
/// parameters stay exact.
inline BigRational endpoint_jet(const JacobiContext& ctx, long n, int point, long order) {
    if (point != -1 && point != 1) throw std::invalid_argument("endpoint_jet: point must be -1 or +1");
    if (order < 0) throw std::invalid_argument("endpoint_jet: negative derivative order");
    if (n < 0) return 0;
    const BigRational& a = ctx.alpha();
    const BigRational& b = ctx.beta();
    BigRational common = factorial(order) / pow(BigRational(2), order) * rising(a + b + 1, n) / rising(b + 1, n) *
                         binomial(BigRational(n) + a + b + order, order);
    if (point == -1) return common * sign_power(order) * binomial(BigRational(n) + b, n - order);
    return common * sign_power(n) * binomial(BigRational(n) + a, n - order);
}

/// D-operator of the first kind: -(a+b+1)/2 + (1-x) d/dx.
inline DiffOp d_operator_first(const JacobiContext& ctx) {
    return DiffOp({Poly(-(ctx.alpha() + ctx.beta() + 1) / 2), Poly({1, -1})});
}

/// D-operator of the second kind: (a+b+1)/2 + (1+x) d/dx.
inline DiffOp d_operator_second(const JacobiContext& ctx) {
    return DiffOp({Poly((ctx.alpha() + ctx.beta() + 1) / 2), Poly({1, 1})});
}

/// The first m1 entries are the first-kind operator, the remaining m2 the second.
inline std::vector<DiffOp> d_operators(const JacobiContext& ctx, int m1, int m2) {
    std::vector<DiffOp> ops;
    for (int h = 0; h < m1; ++h) ops.push_back(d_operator_first(ctx));
    for (int h = 0; h < m2; ++h) ops.push_back(d_operator_second(ctx));
    return ops;
}

/// Sequence pairs (epsilon_n, sigma_n) defining the two D-operators.
inline BigRational d_epsilon(const JacobiContext& ctx, int kind, long n) {
    if (kind == 1) return -(BigRational(n) + ctx.alpha()) / (BigRational(n) + ctx.beta());
    return 1;
}
inline BigRational d_sigma(const JacobiContext& ctx, int kind, long n) {
    BigRational s = ctx.sigma(n);
    return kind == 1 ? s : BigRational(-s);
}

}  // namespace jsob

#endif  // JSOB_JACOBI_HPP
