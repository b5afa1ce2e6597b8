#ifndef JSOB_TRANSFORMS_HPP
#define JSOB_TRANSFORMS_HPP

// Structural transforms on polynomials used throughout the construction:
// Pochhammer products, Gamma quotients with integer-spaced arguments,
// the backward anti-difference, the involution x -> -(x+g+1) and the
// change of variable to theta_x = x(x+a+b+1).

#include <optional>
#include <utility>

#include "jsob/errors.hpp"
#include "jsob/poly.hpp"
#include "jsob/ratfunc.hpp"

namespace jsob {

/// (base)_count = base (base+1) ... (base+count-1); empty product is 1.
inline Poly pochhammer(const Poly& base, long count) {
    if (count < 0) throw std::domain_error("pochhammer: negative count");
    Poly acc(1);
    for (long i = 0; i < count; ++i) acc *= base + Poly(BigRational(i));
    return acc;
}

inline BigRational pochhammer(const BigRational& base, long count) { return rising(base, count); }

/// (x + shift)_count as a polynomial in x.
inline Poly pochhammer_x(const BigRational& shift, long count) {
    return pochhammer(Poly::linear(1, shift), count);
}

namespace detail {

inline std::optional<long> integer_difference(const BigRational& a, const BigRational& b) {
    BigRational d = a - b;
    if (!is_integer(d) || !d.get_num().fits_slong_p()) return std::nullopt;
    return d.get_num().get_si();
}

/// Gamma(x+a+1)/Gamma(x+c+1) for integer a-c.
inline RationalFunction gamma_quotient(const BigRational& a, const BigRational& c, long a_minus_c) {
    if (a_minus_c >= 0) return RationalFunction(pochhammer_x(c + 1, a_minus_c));
    return RationalFunction(Poly(1), pochhammer_x(a + 1, -a_minus_c));
}

}  // namespace detail

/// Gamma(x+a+1)Gamma(x+b+1) / (Gamma(x+c+1)Gamma(x+d+1)) as a reduced
/// rational function of x. Requires a-c and b-d integers, or a-d and b-c.
inline RationalFunction gamma_ratio(const BigRational& a, const BigRational& b, const BigRational& c,
                                    const BigRational& d) {
    auto ac = detail::integer_difference(a, c);
    auto bd = detail::integer_difference(b, d);
    if (ac && bd) return detail::gamma_quotient(a, c, *ac) * detail::gamma_quotient(b, d, *bd);
    auto ad = detail::integer_difference(a, d);
    auto bc = detail::integer_difference(b, c);
    if (ad && bc) return detail::gamma_quotient(a, d, *ad) * detail::gamma_quotient(b, c, *bc);
    throw std::invalid_argument("gamma_ratio: parameters admit no integer pairing");
}

/// g with g(x) - g(x-1) = f(x) and g(0) = 0.
inline Poly anti_difference(const Poly& f) {
    Poly g;
    Poly residual = f;
    const Poly back = Poly::linear(1, -1);
    while (!residual.is_zero()) {
        auto k = static_cast<std::size_t>(residual.degree());
        Poly term = Poly::monomial(k + 1, residual.leading() / static_cast<long>(k + 1));
        g += term;
        residual -= term - term.compose(back);
    }
    return g;
}

/// f(-(x + shift + 1)).
inline Poly involute(const Poly& f, const BigRational& shift) {
    return f.compose(Poly::linear(-1, -shift - 1));
}
inline RationalFunction involute(const RationalFunction& f, const BigRational& shift) {
    return f.substitute_linear(-1, -shift - 1);
}

namespace detail {

/// Coefficients of f(y - c), with c = (alpha+beta+1)/2, so that
/// theta_x = y^2 - c^2 and sigma_{x+1} = 2y.
inline Poly centered(const Poly& f, const BigRational& alpha, const BigRational& beta) {
    BigRational c = (alpha + beta + 1) / 2;
    return f.shift(-c);
}

}  // namespace detail

/// g with g(theta_x) = f(x), theta_x = x(x+alpha+beta+1).
/// Throws NotInvariant unless f is fixed by the involution with shift alpha+beta.
inline Poly to_theta_basis(const Poly& f, const BigRational& alpha, const BigRational& beta) {
    Poly h = detail::centered(f, alpha, beta);
    const auto& co = h.coeffs();
    for (std::size_t k = 1; k < co.size(); k += 2)
        if (co[k] != 0) throw NotInvariant("polynomial is not a polynomial in theta_x: " + f.str());
    BigRational c = (alpha + beta + 1) / 2;
    Poly y2 = Poly::linear(1, c * c);
    Poly acc;
    for (std::size_t k = co.size(); k-- > 0;) {
        if (k % 2 != 0) continue;
        acc = acc * y2 + Poly(co[k]);
    }
    return acc;
}

/// g with f(x) = sigma_{x+1} g(theta_x), sigma_{x+1} = 2x+alpha+beta+1.
/// Throws NotSkew unless f is negated by the involution with shift alpha+beta.
inline Poly divide_skew_by_sigma(const Poly& f, const BigRational& alpha, const BigRational& beta) {
    Poly h = detail::centered(f, alpha, beta);
    const auto& co = h.coeffs();
    for (std::size_t k = 0; k < co.size(); k += 2)
        if (co[k] != 0) throw NotSkew("polynomial is not skew invariant: " + f.str());
    BigRational c = (alpha + beta + 1) / 2;
    Poly y2 = Poly::linear(1, c * c);
    Poly acc;
    for (std::size_t k = co.size(); k-- > 0;) {
        if (k % 2 != 1) continue;
        acc = acc * y2 + Poly(co[k] / 2);
    }
    return acc;
}

/// g(theta_x) as a polynomial in x.
inline Poly from_theta(const Poly& g, const BigRational& alpha, const BigRational& beta) {
    return g.compose(theta_poly(alpha, beta));
}

/// g(theta_{x+shift}) as a polynomial in x.
inline Poly from_theta_shifted(const Poly& g, const BigRational& alpha, const BigRational& beta,
                               const BigRational& shift) {
    return g.compose(theta_poly(alpha, beta).shift(shift));
}

}  // namespace jsob

#endif  // JSOB_TRANSFORMS_HPP
