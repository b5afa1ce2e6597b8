#ifndef JSOB_CONSTRUCT_HPP
#define JSOB_CONSTRUCT_HPP

// Explicit left-orthogonal polynomials for the discrete Jacobi-Sobolev form:
//
//   q_n(x) = det [ J_n(x)  -J_{n-1}(x)  ...  (-1)^m J_{n-m}(x) ]
//                [ rho^h_{n,j} z_h(n-j) ]_{h=1..m, j=0..m}        / (p(n) q(n))
//
// The z_h are polynomials in theta_x when alpha, beta are integers with
// alpha >= m2 and beta >= m1; Y_h denotes z_h written in that variable.

#include <algorithm>
#include <utility>
#include <vector>

#include "jsob/jacobi.hpp"
#include "jsob/matrix.hpp"
#include "jsob/sobolev.hpp"
#include "jsob/transforms.hpp"

namespace jsob {

/// N1_{x+shift}^{alpha;j} = (-1)^j (x + shift - j + alpha + 1)_j.
inline Poly n1_poly(const BigRational& alpha, const BigRational& shift, long j) {
    return pochhammer_x(shift - j + alpha + 1, j) * BigRational(sign_power(j));
}

/// N2_{x+shift}^{beta;j} = (x + shift - j + beta + 1)_j.
inline Poly n2_poly(const BigRational& beta, const BigRational& shift, long j) {
    return pochhammer_x(shift - j + beta + 1, j);
}

/// u_j^lambda(x) = (x + alpha - lambda + 1)_j (x + beta + lambda - j + 1)_j.
inline Poly u_poly(const JacobiContext& ctx, const BigRational& lambda, long j) {
    return pochhammer_x(ctx.alpha() - lambda + 1, j) * pochhammer_x(ctx.beta() + lambda - j + 1, j);
}

/// u_j^lambda as a polynomial in theta: prod_{i=1..j} [(a-lambda+i)(b+lambda-i+1) + theta].
inline Poly u_theta(const JacobiContext& ctx, const BigRational& lambda, long j) {
    Poly acc(1);
    for (long i = 1; i <= j; ++i)
        acc *= Poly::linear(1, (ctx.alpha() - lambda + i) * (ctx.beta() + lambda - i + 1));
    return acc;
}

/// p(x) = prod_{i=1}^{m1-1} (-1)^{m1-i} (x+a-m+1)_{m1-i} (x+b-m1+i)_{m1-i}.
inline Poly p_poly(const JacobiContext& ctx, int m1, int m2) {
    const int m = m1 + m2;
    Poly acc(1);
    for (int i = 1; i <= m1 - 1; ++i)
        acc *= pochhammer_x(ctx.alpha() - m + 1, m1 - i) * pochhammer_x(ctx.beta() - m1 + i, m1 - i) *
               BigRational(sign_power(m1 - i));
    return acc;
}

/// Same polynomial through the N-function products.
inline Poly p_poly_from_n(const JacobiContext& ctx, int m1, int m2) {
    Poly acc(1);
    for (int i = 1; i <= m1 - 1; ++i)
        acc *= n1_poly(ctx.alpha(), -m2 - i, m1 - i) * n2_poly(ctx.beta(), -1, m1 - i);
    return acc;
}

/// q(x) = (-1)^C(m,2) prod_{h=1}^{m-1} prod_{i=1}^{h} (2(x-m) + a + b + i + h).
inline Poly q_poly(const JacobiContext& ctx, int m1, int m2) {
    const long m = m1 + m2;
    Poly acc(1);
    for (long h = 1; h <= m - 1; ++h)
        for (long i = 1; i <= h; ++i) acc *= Poly::linear(2, -2 * m + ctx.alpha() + ctx.beta() + i + h);
    return acc * BigRational(sign_power(m * (m - 1) / 2));
}

/// Same polynomial as a product of sigma_{x-m+(i+h+1)/2}.
inline Poly q_poly_from_sigma(const JacobiContext& ctx, int m1, int m2) {
    const long m = m1 + m2;
    Poly acc(1);
    for (long h = 1; h <= m - 1; ++h)
        for (long i = 1; i <= h; ++i) acc *= ctx.sigma_x(BigRational(-m) + BigRational(i + h + 1, 2));
    return acc * BigRational(sign_power(m * (m - 1) / 2));
}

/// rho^h_{x,j} for h = 1..m (1-based) and j = 0..m.
inline RationalFunction rho(const SobolevConfig& cfg, int h, int j) {
    if (h > cfg.m1) return RationalFunction(1);
    const BigRational a(cfg.alpha);
    const BigRational b(cfg.beta);
    const int m = cfg.m();
    return gamma_ratio(a - j, b - 1, a - m, b - j) * RationalFunction(BigRational(sign_power(m - j)));
}

/// z_l, Y_l and the normalizing polynomials p, q of one configuration.
struct ZSystem {
    std::vector<Poly> z;  // z[l-1] = z_l(x)
    std::vector<Poly> Y;  // Y[l-1](theta_x) = z_l(x)
    Poly p;
    Poly q;
    std::vector<std::vector<RationalFunction>> rho;  // rho[h-1][j] = rho^h_{x,j}
};

namespace detail {

/// Coefficient multiplying u^0_{beta+i} / (beta+i)! in z_l, l <= m1 (before the 2^m2 factor).
inline BigRational mass_coefficient_left(const SobolevConfig& cfg, int l, int i) {
    BigRational acc(0);
    for (int j = l; j <= std::min(l + cfg.m2, cfg.m1); ++j) {
        const BigRational& mij = cfg.M(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1));
        if (mij == 0) continue;
        acc += factorial(j - 1) * binomial(cfg.m2, j - l) * mij / pow(BigRational(-2), i + j - l);
    }
    return acc;
}

/// Coefficient multiplying u^{a-b}_{a+i} / (a+i)! in z_l, l > m1.
inline BigRational mass_coefficient_right(const SobolevConfig& cfg, int l, int i) {
    BigRational acc(0);
    for (int j = l - cfg.m1; j <= std::min(l, cfg.m2); ++j) {
        const BigRational& nij = cfg.N(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1));
        if (nij == 0) continue;
        acc += factorial(j - 1) * binomial(cfg.m1, l - j) * nij /
               (BigRational(sign_power(l - cfg.m1 - 1)) * pow(BigRational(2), i + j - l));
    }
    return acc;
}

/// Builds z_l (in x) or Y_l (in theta) depending on the u-evaluator passed in.
template <class UFn>
Poly z_component(const SobolevConfig& cfg, int l, UFn&& u) {
    const long a = cfg.alpha;
    const long b = cfg.beta;
    const int m1 = cfg.m1;
    const int m = cfg.m();
    Poly acc;
    if (l <= m1) {
        BigRational lead = pow(BigRational(2), a + b - m1 + l) * factorial(b - m1 + l - 1) / factorial(m1 - l);
        acc = u(BigRational(a), m1 - l) * lead;
        for (int i = 0; i < m1; ++i) {
            BigRational c = mass_coefficient_left(cfg, l, i);
            if (c == 0) continue;
            acc += u(BigRational(0), b + i) * (pow(BigRational(2), cfg.m2) * c / factorial(b + i));
        }
    } else {
        BigRational lead = pow(BigRational(2), a + b - m + l) * factorial(a - m + l - 1) / factorial(m - l);
        acc = u(BigRational(a), m - l) * lead;
        for (int i = 0; i < cfg.m2; ++i) {
            BigRational c = mass_coefficient_right(cfg, l, i);
            if (c == 0) continue;
            acc += u(BigRational(a - b), a + i) * (c / factorial(a + i));
        }
    }
    return acc;
}

}  // namespace detail

inline ZSystem build_z(const SobolevConfig& cfg) {
    cfg.validate();
    const JacobiContext ctx = cfg.jacobi();
    ZSystem sys;
    for (int l = 1; l <= cfg.m(); ++l) {
        sys.z.push_back(detail::z_component(
            cfg, l, [&](const BigRational& lam, long j) { return u_poly(ctx, lam, j); }));
        sys.Y.push_back(detail::z_component(
            cfg, l, [&](const BigRational& lam, long j) { return u_theta(ctx, lam, j); }));
    }
    for (int h = 1; h <= cfg.m(); ++h) {
        std::vector<RationalFunction> row;
        for (int j = 0; j <= cfg.m(); ++j) row.push_back(rho(cfg, h, j));
        sys.rho.push_back(std::move(row));
    }
    sys.p = p_poly(ctx, cfg.m1, cfg.m2);
    sys.q = q_poly(ctx, cfg.m1, cfg.m2);
    return sys;
}

/// Casorati data of one configuration. Holds, for j = 0..m, the cofactor
/// c_j(x) = det(rows h, columns != j)/(p(x) q(x)) as reduced rational
/// functions, so that q_n = sum_j c_j(n) J_{n-j} and Lambda(n) = c_0(n).
class CasoratiSystem {
   public:
    CasoratiSystem(SobolevConfig cfg, ZSystem sys) : cfg_(std::move(cfg)), sys_(std::move(sys)) {
        build_symbolic();
    }
    explicit CasoratiSystem(const SobolevConfig& cfg) : CasoratiSystem(cfg, build_z(cfg)) {}

    const SobolevConfig& config() const noexcept { return cfg_; }
    const ZSystem& z_system() const noexcept { return sys_; }
    const std::vector<RationalFunction>& symbolic_cofactors() const noexcept { return cofactors_; }

    /// Entry rho^h_{n,j} z_h(n-j) of the m x (m+1) Casorati matrix (h 1-based).
    BigRational entry(int h, int j, long n) const {
        return sys_.rho[static_cast<std::size_t>(h - 1)][static_cast<std::size_t>(j)](BigRational(n)) * sys_.z[static_cast<std::size_t>(h - 1)](BigRational(n - j));
    }

    /// c_j(n) through the symbolic cofactors (valid for every n >= 0).
    std::vector<BigRational> coefficients_symbolic(long n) const {
        std::vector<BigRational> out;
        for (const auto& c : cofactors_) {
            if (!c.defined_at(BigRational(n)))
                throw NotDivisible("Casorati cofactor does not cancel against p*q at n = " + std::to_string(n));
            out.push_back(c(BigRational(n)));
        }
        return out;
    }

    /// c_j(n) by evaluating the entries first; requires p(n) q(n) != 0.
    std::vector<BigRational> coefficients_numeric(long n) const {
        const int m = cfg_.m();
        BigRational pq = sys_.p(BigRational(n)) * sys_.q(BigRational(n));
        if (pq == 0) throw std::domain_error("p(n) q(n) vanishes; use the symbolic path");
        RationalMatrix full(static_cast<std::size_t>(m), static_cast<std::size_t>(m + 1));
        for (int h = 1; h <= m; ++h)
            for (int j = 0; j <= m; ++j)
                full(static_cast<std::size_t>(h - 1), static_cast<std::size_t>(j)) = entry(h, j, n);
        std::vector<BigRational> out;
        for (int j = 0; j <= m; ++j) out.push_back(determinant(drop_column(full, j)) / pq);
        return out;
    }

    /// Numeric path for n >= m, symbolic path below.
    std::vector<BigRational> coefficients(long n) const {
        if (n >= cfg_.m()) return coefficients_numeric(n);
        return coefficients_symbolic(n);
    }

    BigRational lambda(long n) const {
        if (n >= cfg_.m()) return coefficients_numeric(n).front();
        return coefficients_symbolic(n).front();
    }

    /// q_n = sum_j c_j(n) J_{n-j}; throws DegenerateConfig if Lambda(k) = 0 for some k <= n.
    Poly sobolev_poly(long n) const {
        for (long k = 0; k <= n; ++k)
            if (lambda(k) == 0)
                throw DegenerateConfig(k, "Casorati determinant vanishes at n = " + std::to_string(k));
        return combine(n, coefficients(n));
    }

    /// Sum_j c_j J_{n-j} without the nonvanishing check.
    Poly combine(long n, const std::vector<BigRational>& c) const {
        const JacobiContext ctx = cfg_.jacobi();
        Poly acc;
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            acc += jacobi_poly(ctx, n - static_cast<long>(j)) * c[j];
        }
        return acc;
    }

    /// Largest N such that Lambda(k) != 0 for all k <= N (checked up to n_max);
    /// -1 if Lambda(0) = 0.
    long nonvanishing_prefix(long n_max) const {
        for (long k = 0; k <= n_max; ++k)
            if (lambda(k) == 0) return k - 1;
        return n_max;
    }

   private:
    static RationalMatrix drop_column(const RationalMatrix& a, int j) {
        std::vector<std::size_t> rs(a.rows()), cs;
        for (std::size_t i = 0; i < rs.size(); ++i) rs[i] = i;
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (static_cast<int>(c) != j) cs.push_back(c);
        return a.select(rs, cs);
    }

    void build_symbolic() {
        const int m = cfg_.m();
        const bool scaled = cfg_.m1 > 0;
        // rho^h_{x,0} = (-1)^m (x+a-m+1)_m / (x+b) for h <= m1; the column j = 0
        // is multiplied by (x+b) so that every entry is a polynomial.
        const Poly col0_scale = scaled ? Poly::linear(1, cfg_.beta) : Poly(1);
        Matrix<Poly> full(static_cast<std::size_t>(m), static_cast<std::size_t>(m + 1));
        for (int h = 1; h <= m; ++h) {
            const Poly& zh = sys_.z[static_cast<std::size_t>(h - 1)];
            for (int j = 0; j <= m; ++j) {
                RationalFunction r = sys_.rho[static_cast<std::size_t>(h - 1)][static_cast<std::size_t>(j)];
                if (j == 0) r = r * RationalFunction(col0_scale);
                full(static_cast<std::size_t>(h - 1), static_cast<std::size_t>(j)) =
                    r.as_poly() * zh.shift(BigRational(-j));
            }
        }
        const Poly pq = sys_.p * sys_.q;
        std::vector<std::size_t> rs(static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < rs.size(); ++i) rs[i] = i;
        cofactors_.clear();
        for (int j = 0; j <= m; ++j) {
            std::vector<std::size_t> cs;
            for (int c = 0; c <= m; ++c)
                if (c != j) cs.push_back(static_cast<std::size_t>(c));
            Poly d = determinant(full.select(rs, cs));
            Poly den = (j == 0) ? pq : pq * col0_scale;
            cofactors_.emplace_back(d, den);
        }
    }

    SobolevConfig cfg_;
    ZSystem sys_;
    std::vector<RationalFunction> cofactors_;
};

/// R_l(n) assembled from the integrals w^1, w^2 and endpoint derivatives of
/// J_n (first), and the prefactor times z_l(n) (second). l is 1-based.
inline std::pair<BigRational, BigRational> rl_cross_check(const SobolevConfig& cfg, const ZSystem& sys, int l,
                                                          long n) {
    if (n < 0) throw std::invalid_argument("rl_cross_check: n must be nonnegative");
    if (cfg.weight_a() < 0 || cfg.weight_b() < 0)
        throw ParameterOutOfRange("weight exponents must be nonnegative");
    const JacobiContext ctx = cfg.jacobi();
    const Poly jn = jacobi_poly(ctx, n);
    const int m1 = cfg.m1;
    const int m2 = cfg.m2;
    const long a = cfg.alpha;
    const long b = cfg.beta;
    const Poly one_plus_x({1, 1});
    const Poly one_minus_x({1, -1});

    BigRational direct;
    BigRational prefactor;
    if (l <= m1) {
        Poly basis = pow(one_plus_x, static_cast<unsigned>(l - 1)) * pow(one_minus_x, static_cast<unsigned>(m2));
        direct = weighted_integral(jn * basis, cfg.weight_a(), cfg.weight_b());
        Jet jt = jet(jn, -1, m1);
        for (int i = 0; i < m1; ++i) {
            BigRational inner(0);
            for (int j = l; j <= std::min(l + m2, m1); ++j) {
                const BigRational& mij = cfg.M(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1));
                inner += factorial(j - 1) * binomial(m2, j - l) * mij /
                         (BigRational(sign_power(m2)) * pow(BigRational(-2), j - l - m2));
            }
            direct += inner * jt[static_cast<std::size_t>(i)];
        }
        prefactor = factorial(b) * factorial(n + a) / (factorial(a + b) * factorial(n + b));
    } else {
        Poly basis =
            pow(one_plus_x, static_cast<unsigned>(m1)) * pow(one_minus_x, static_cast<unsigned>(l - m1 - 1));
        direct = weighted_integral(jn * basis, cfg.weight_a(), cfg.weight_b());
        Jet jt = jet(jn, 1, m2);
        for (int i = 0; i < m2; ++i) {
            BigRational inner(0);
            for (int j = l - m1; j <= std::min(l, m2); ++j) {
                const BigRational& nij = cfg.N(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1));
                inner += factorial(j - 1) * binomial(m1, l - j) * nij /
                         (BigRational(sign_power(l - m1 - 1)) * pow(BigRational(2), j - l));
            }
            direct += inner * jt[static_cast<std::size_t>(i)];
        }
        prefactor = BigRational(sign_power(n)) * factorial(b) / factorial(a + b);
    }
    BigRational via_z = prefactor * sys.z[static_cast<std::size_t>(l - 1)](BigRational(n));
    return {direct, via_z};
}

namespace detail {

/// 1/C(a+b-k-l, a-k) up to a factor independent of l:
/// (a+b-k-l+1)_l / (b-l+1)_l.
inline BigRational inverse_binomial_shape(const BigRational& a, const BigRational& b, long k, long l) {
    return rising(a + b - k - l + 1, l) / rising(b - l + 1, l);
}

}  // namespace detail

/// Left side of the first combinatorial identity for one (k, h), scaled by a
/// nonzero l-independent constant.
inline BigRational comb1_sum(const BigRational& a, const BigRational& b, int m1, long k, long h) {
    BigRational acc(0);
    for (long l = 0; l <= m1 - 1; ++l) {
        BigRational t = binomial(h, m1 - l) * binomial(BigRational(l - k), l);
        if (t == 0) continue;
        acc += BigRational(sign_power(l)) * t / (pow(BigRational(2), l) * (b - l)) *
               detail::inverse_binomial_shape(a, b, k, l);
    }
    return acc;
}

/// Left side of the second combinatorial identity for one k, scaled by a
/// nonzero constant.
inline BigRational comb2_sum(const BigRational& a, const BigRational& b, int m1, int m2, long k) {
    const long m = m1 + m2;
    // Ratio of the l-independent constants of the two sums.
    BigRational first_scale = rising(b - k + 1, k) / rising(a - k + 1, k);
    BigRational first(0);
    for (long l = 0; l <= m1 - 1; ++l) {
        BigRational t = binomial(m - l - 2, m2 - 1) * binomial(BigRational(l - k), l);
        if (t == 0) continue;
        first += t / (b - l) * detail::inverse_binomial_shape(a, b, k, l);
    }
    BigRational second(0);
    for (long l = 0; l <= m2 - 1; ++l) {
        BigRational t = binomial(m - l - 2, m1 - 1) * binomial(BigRational(l - k), l);
        if (t == 0) continue;
        second += t / (a - l) * detail::inverse_binomial_shape(b, a, k, l);
    }
    return BigRational(sign_power(k)) * first_scale * first + second;
}

/// True iff both combinatorial identities evaluate to exactly zero for every
/// admissible (k, h). Requires a, b, a+b non-integers.
inline bool verify_comb_identities(const BigRational& a, const BigRational& b, int m1, int m2) {
    if (is_integer(a) || is_integer(b) || is_integer(a + b))
        throw ParameterOutOfRange("combinatorial identities need non-integer alpha, beta, alpha+beta");
    for (long h = 0; h <= m1 - 2; ++h)
        for (long k = 1; k <= m1 - h - 1; ++k)
            if (comb1_sum(a, b, m1, k, h) != 0) return false;
    for (long k = 1; k <= m1 + m2 - 1; ++k)
        if (comb2_sum(a, b, m1, m2, k) != 0) return false;
    return true;
}

}  // namespace jsob

#endif  // JSOB_CONSTRUCT_HPP
