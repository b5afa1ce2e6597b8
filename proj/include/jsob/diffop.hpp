#ifndef JSOB_DIFFOP_HPP
#define JSOB_DIFFOP_HPP

// Differential operator having the Jacobi-Sobolev polynomials as
// eigenfunctions:
//
//   D = 1/2 P_S(D_p) + sum_h M~_h(D_p) o D_h o Y_h(D_p),
//
// built from a rational function S, the quasi Casorati determinant Omega, the
// functions M_h, and the anti-difference lambda_x of S(x) Omega(x).

#include <optional>
#include <string>
#include <vector>

#include "jsob/construct.hpp"
#include "jsob/operator.hpp"
#include "jsob/rank.hpp"

namespace jsob {

/// xi^h_{x,j}: (-1)^j (x-j+a+1)_j / (x-j+b+1)_j for h <= m1, else 1; for
/// j < 0 it is 1 / xi^h_{x-j,-j}.
inline RationalFunction xi(const SobolevConfig& cfg, int h, long j) {
    if (h > cfg.m1 || j == 0) return RationalFunction(1);
    const BigRational a(cfg.alpha);
    const BigRational b(cfg.beta);
    if (j > 0) return RationalFunction(pochhammer_x(a - j + 1, j) * BigRational(sign_power(j)), pochhammer_x(b - j + 1, j));
    RationalFunction inv = xi(cfg, h, -j).shift(BigRational(-j));
    return RationalFunction(inv.den(), inv.num());
}

/// xi^h_{x+shift,j}.
inline RationalFunction xi_at(const SobolevConfig& cfg, int h, long shift, long j) {
    return xi(cfg, h, j).shift(BigRational(shift));
}

namespace detail {

/// Entry xi^l_{x+s,k} Y_l(theta_{x+s}) with Y_l(theta_{x+s}) = z_l(x+s).
inline RationalFunction casorati_entry(const SobolevConfig& cfg, const ZSystem& sys, int l, long s, long k) {
    return xi_at(cfg, l, s, k) * RationalFunction(sys.z[static_cast<std::size_t>(l - 1)].shift(BigRational(s)));
}

inline RationalFunction det_rf(const Matrix<RationalFunction>& a) { return det_laplace(a); }

}  // namespace detail

/// Omega(x) = det(xi^l_{x-j,m-j} Y_l(theta_{x-j}))_{l,j=1..m}, with Y_l
/// evaluated through its theta-basis coefficients.
inline RationalFunction omega_from_y(const SobolevConfig& cfg, const ZSystem& sys) {
    const int m = cfg.m();
    const JacobiContext ctx = cfg.jacobi();
    Matrix<RationalFunction> a(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int l = 1; l <= m; ++l)
        for (int j = 1; j <= m; ++j) {
            Poly y = from_theta_shifted(sys.Y[static_cast<std::size_t>(l - 1)], ctx.alpha(), ctx.beta(), BigRational(-j));
            a(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(j - 1)) =
                xi_at(cfg, l, -j, m - j) * RationalFunction(y);
        }
    return detail::det_rf(a);
}

/// Omega(x) = det(xi^l_{x-j,m-j} z_l(x-j))_{l,j=1..m}.
inline RationalFunction omega_from_z(const SobolevConfig& cfg, const ZSystem& sys) {
    const int m = cfg.m();
    Matrix<RationalFunction> a(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int l = 1; l <= m; ++l)
        for (int j = 1; j <= m; ++j)
            a(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(j - 1)) = detail::casorati_entry(cfg, sys, l, -j, m - j);
    return detail::det_rf(a);
}

/// S(x) = sigma_{x-(m-1)/2} Xi(x) ((x+b-m+1)_{m-1})^{m1} / (p(x) q(x)).
inline RationalFunction default_s(const SobolevConfig& cfg, const ZSystem& sys) {
    const JacobiContext ctx = cfg.jacobi();
    const int m = cfg.m();
    Poly num = ctx.sigma_x(BigRational(-(m - 1), 2)) * cfg.xi *
               pow(pochhammer_x(ctx.beta() - m + 1, m - 1), static_cast<unsigned>(cfg.m1));
    return RationalFunction(num, sys.p * sys.q);
}

/// User-supplied S = num / den, where an absent den stands for Omega.
struct CustomS {
    Poly num;
    std::optional<Poly> den;
};

inline RationalFunction resolve_custom_s(const CustomS& s, const RationalFunction& omega) {
    if (s.den) {
        if (s.den->is_zero()) throw InputError("custom S has a zero denominator");
        return RationalFunction(s.num, *s.den);
    }
    if (omega.is_zero()) throw InputError("custom S with the Omega denominator needs Omega != 0");
    return RationalFunction(s.num) / omega;
}

/// M_h(x) = sum_j (-1)^{h+j} xi^h_{x,m-j} S(x+j) det(xi^l_{x+j-r,m-r} Y_l(theta_{x+j-r}))_{l != h, r != j}.
inline RationalFunction m_function(const SobolevConfig& cfg, const ZSystem& sys, const RationalFunction& S, int h) {
    const int m = cfg.m();
    RationalFunction acc;
    for (int j = 1; j <= m; ++j) {
        Matrix<RationalFunction> minor(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(m - 1));
        std::size_t ri = 0;
        for (int l = 1; l <= m; ++l) {
            if (l == h) continue;
            std::size_t ci = 0;
            for (int r = 1; r <= m; ++r) {
                if (r == j) continue;
                minor(ri, ci++) = detail::casorati_entry(cfg, sys, l, j - r, m - r);
            }
            ++ri;
        }
        RationalFunction term = xi(cfg, h, m - j) * S.shift(BigRational(j)) * detail::det_rf(minor);
        if (sign_power(h + j) > 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

/// sigma^h_{x+1}: sigma_{x+1} for h <= m1 and -sigma_{x+1} otherwise.
inline Poly sigma_h(const SobolevConfig& cfg, int h) {
    Poly s = cfg.jacobi().sigma_x(1);
    return h <= cfg.m1 ? s : -s;
}

struct OperatorBundle {
    RationalFunction S;
    RationalFunction Omega;
    Poly SOmega;
    std::vector<Poly> Mh;       // M_h(x)
    std::vector<Poly> MhTilde;  // M~_h in the theta basis
    Poly lambda;                // lambda_x with lambda_0 = 0
    Poly PS;                    // P_S in the theta basis
    DiffOp D;
    BigRational predicted_order;
};

/// Assembles D from S. Throws AssumptionFailed(k) when
/// k = 0: S Omega is not a polynomial;
/// k = 1: some M_h is not sigma^h_{x+1} times a polynomial in theta_x;
/// k = 2: 2 lambda_x + sum_h Y_h(theta_x) M_h(x) is not a polynomial in theta_x.
inline OperatorBundle build_bundle(const SobolevConfig& cfg, const ZSystem& sys,
                                   const std::optional<CustomS>& custom = std::nullopt) {
    const JacobiContext ctx = cfg.jacobi();
    const BigRational& a = ctx.alpha();
    const BigRational& b = ctx.beta();
    const int m = cfg.m();
    OperatorBundle bundle;
    bundle.Omega = omega_from_z(cfg, sys);
    bundle.S = custom ? resolve_custom_s(*custom, bundle.Omega) : default_s(cfg, sys);

    RationalFunction so = bundle.S * bundle.Omega;
    if (!so.is_polynomial()) throw AssumptionFailed(0, "S(x) Omega(x) is not a polynomial");
    bundle.SOmega = so.num();
    bundle.lambda = anti_difference(bundle.SOmega);

    Poly q = bundle.lambda * BigRational(2);
    for (int h = 1; h <= m; ++h) {
        RationalFunction mh = m_function(cfg, sys, bundle.S, h);
        if (!mh.is_polynomial()) throw AssumptionFailed(1, "M_" + std::to_string(h) + " is not a polynomial");
        Poly mhp = mh.num();
        Poly tilde;
        try {
            tilde = divide_skew_by_sigma(mhp, a, b);
        } catch (const NotSkew&) {
            throw AssumptionFailed(1, "M_" + std::to_string(h) + " is not sigma_{x+1} times a polynomial in theta");
        }
        if (h > cfg.m1) tilde = -tilde;
        bundle.Mh.push_back(mhp);
        bundle.MhTilde.push_back(std::move(tilde));
        q += sys.z[static_cast<std::size_t>(h - 1)] * mhp;
    }
    try {
        bundle.PS = to_theta_basis(q, a, b);
    } catch (const NotInvariant&) {
        throw AssumptionFailed(2, "2 lambda_x + sum Y_h M_h is not a polynomial in theta");
    }

    const DiffOp dp = classical_operator(ctx);
    const std::vector<DiffOp> dh = d_operators(ctx, cfg.m1, cfg.m2);
    DiffOp d = poly_of_operator(bundle.PS, dp) * BigRational(1, 2);
    for (int h = 1; h <= m; ++h) {
        const auto k = static_cast<std::size_t>(h - 1);
        if (bundle.MhTilde[k].is_zero()) continue;
        d += compose(compose(poly_of_operator(bundle.MhTilde[k], dp), dh[k]), poly_of_operator(sys.Y[k], dp));
    }
    bundle.D = std::move(d);
    bundle.predicted_order = predicted_order(cfg);
    return bundle;
}

inline int operator_order(const OperatorBundle& bundle) { return bundle.D.order(); }

/// Measured order equals deg Xi + 2 (beta-wr(M) + alpha-wr(N) + 1).
inline bool check_order(const OperatorBundle& bundle, const SobolevConfig& cfg) {
    return BigRational(operator_order(bundle)) == predicted_order(cfg);
}

/// Candidate closed form for the eigenvalue of q_n, up to one additive
/// constant: lambda_n (the anti-difference of S Omega) or P_S(theta_n).
enum class EigenForm { Lambda, ThetaPolynomial };

inline const char* to_string(EigenForm f) { return f == EigenForm::Lambda ? "lambda_n" : "P_S(theta_n)"; }

struct EigenReport {
    EigenForm form = EigenForm::Lambda;
    BigRational constant;                  // c fixed at n = 0
    std::vector<BigRational> eigenvalues;  // index n
};

/// Checks D(q_n) = (f(n) + c) q_n for n = 0..n_max, where f is the chosen
/// form and c is fixed at n = 0. Throws EigenMismatch on the first failure.
inline EigenReport verify_eigen(const OperatorBundle& bundle, const CasoratiSystem& cs, long n_max,
                                EigenForm form = EigenForm::Lambda) {
    const JacobiContext ctx = cs.config().jacobi();
    EigenReport rep;
    rep.form = form;
    for (long n = 0; n <= n_max; ++n) {
        Poly qn = cs.sobolev_poly(n);
        Poly dq = bundle.D(qn);
        BigRational f = form == EigenForm::Lambda ? bundle.lambda(BigRational(n)) : bundle.PS(ctx.theta(BigRational(n)));
        if (n == 0) {
            BigRational observed = dq.is_zero() ? BigRational(0) : BigRational(dq.leading() / qn.leading());
            rep.constant = observed - f;
        }
        BigRational e = f + rep.constant;
        Poly residual = dq - qn * e;
        if (!residual.is_zero())
            throw EigenMismatch(n, std::string("D(q_n) - (") + to_string(form) + " + c) q_n = " + residual.str());
        rep.eigenvalues.push_back(e);
    }
    return rep;
}

/// P_S(theta_x) - P_S(theta_{x-1}) = S(x) Omega(x) + S(x+m) Omega(x+m).
inline bool check_ps_difference(const OperatorBundle& bundle, const SobolevConfig& cfg) {
    const JacobiContext ctx = cfg.jacobi();
    Poly ps = from_theta(bundle.PS, ctx.alpha(), ctx.beta());
    return ps - ps.shift(-1) == bundle.SOmega + bundle.SOmega.shift(BigRational(cfg.m()));
}

/// I^{a+b}(M_h) = -M_h for every h.
inline bool check_mh_skew(const OperatorBundle& bundle, const SobolevConfig& cfg) {
    const BigRational shift(cfg.alpha + cfg.beta);
    for (const auto& mh : bundle.Mh)
        if (involute(mh, shift) != -mh) return false;
    return true;
}

/// I^{a+b-1}(S Omega)(x) = -(S Omega)(x+m).
inline bool check_somega_symmetry(const OperatorBundle& bundle, const SobolevConfig& cfg) {
    return involute(bundle.SOmega, BigRational(cfg.alpha + cfg.beta - 1)) ==
           -bundle.SOmega.shift(BigRational(cfg.m()));
}

/// Polynomial P built from an m-tuple of theta-polynomials Y_i through the
/// N1 N2 determinant divided by p q, together with the degree and leading
/// coefficient predicted from deg Y_i and the Vandermonde products.
struct DegreeLawResult {
    Poly P;
    bool is_polynomial = false;
    long expected_degree = 0;
    BigRational expected_leading;
    bool holds = false;
};

inline DegreeLawResult degree_of_p_check(const BigRational& a, const BigRational& b, int m1, int m2,
                                         const std::vector<Poly>& Y) {
    const int m = m1 + m2;
    if (static_cast<int>(Y.size()) != m) throw InputError("degree_of_p_check: need m polynomials");
    const JacobiContext ctx(a, b);
    Matrix<Poly> mat(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            Poly y = from_theta_shifted(Y[static_cast<std::size_t>(i - 1)], a, b, BigRational(-j));
            if (i <= m1) y = n1_poly(a, BigRational(-j), m - j) * n2_poly(b, BigRational(-1), j - 1) * y;
            mat(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = y;
        }
    DegreeLawResult res;
    Poly num = determinant(mat);
    Poly den = p_poly_from_n(ctx, m1, m2) * q_poly_from_sigma(ctx, m1, m2);
    auto [quot, rem] = divmod(num, den);
    res.is_polynomial = rem.is_zero();
    res.P = quot;

    long sum_u = 0;
    BigRational lead(1);
    for (const auto& y : Y) {
        if (y.is_zero()) throw InputError("degree_of_p_check: Y_i must be nonzero");
        sum_u += y.degree();
        lead *= y.leading();
    }
    auto vandermonde = [&](int from, int to) {
        BigRational v(1);
        for (int i = from; i < to; ++i)
            for (int j = i + 1; j < to; ++j)
                v *= BigRational(Y[static_cast<std::size_t>(j)].degree() - Y[static_cast<std::size_t>(i)].degree());
        return v;
    };
    res.expected_degree = 2 * sum_u - (static_cast<long>(m1) * (m1 - 1) + static_cast<long>(m2) * (m2 - 1));
    res.expected_leading = vandermonde(0, m1) * vandermonde(m1, m) * lead;
    res.holds = res.is_polynomial && !res.P.is_zero() && res.P.degree() == res.expected_degree &&
                res.P.leading() == res.expected_leading;
    return res;
}

}  // namespace jsob

#endif  // JSOB_DIFFOP_HPP
