#ifndef JSOB_SOBOLEV_HPP
#define JSOB_SOBOLEV_HPP

// Discrete Jacobi-Sobolev bilinear form
//   B(p, q) = int_{-1}^{1} p q (1-x)^(a-m2) (1+x)^(b-m1) dx
//             + T_{-1}^{m1}(p) M T_{-1}^{m1}(q)^T + T_{1}^{m2}(p) N T_{1}^{m2}(q)^T
// where T_c^k(p) = (p(c), p'(c), ..., p^(k-1)(c)), and a Gram-matrix oracle
// for its left-orthogonal polynomials.

#include <optional>
#include <string>
#include <vector>

#include "jsob/jacobi.hpp"
#include "jsob/matrix.hpp"
#include "jsob/transforms.hpp"

namespace jsob {

struct SobolevConfig {
    long alpha = 0;
    long beta = 0;
    int m1 = 0;
    int m2 = 0;
    RationalMatrix M;  // m1 x m1, indices 0..m1-1
    RationalMatrix N;  // m2 x m2
    Poly xi = Poly(1);

    int m() const noexcept { return m1 + m2; }
    JacobiContext jacobi() const { return {alpha, beta}; }
    /// Exponents of the weight (1-x)^(a-m2) (1+x)^(b-m1).
    long weight_a() const noexcept { return alpha - m2; }
    long weight_b() const noexcept { return beta - m1; }

    /// Throws InputError describing the first violated requirement.
    void validate() const {
        if (m1 < 0 || m2 < 0) throw InputError("m1 and m2 must be nonnegative");
        if (m() < 1) throw InputError("m = m1 + m2 must be at least 1");
        if (alpha < 0 || beta < 0) throw InputError("alpha and beta must be nonnegative integers");
        if (alpha < m2) throw InputError("alpha must be at least m2");
        if (beta < m1) throw InputError("beta must be at least m1");
        if (M.rows() != static_cast<std::size_t>(m1) || M.cols() != static_cast<std::size_t>(m1))
            throw InputError("M must be an m1 x m1 matrix");
        if (N.rows() != static_cast<std::size_t>(m2) || N.cols() != static_cast<std::size_t>(m2))
            throw InputError("N must be an m2 x m2 matrix");
        if (xi.is_zero()) throw InputError("Xi must be a nonzero polynomial");
        BigRational shift = BigRational(alpha + beta - m() - 1);
        if (involute(xi, shift) != xi)
            throw InputError("Xi must be invariant under x -> -(x + alpha + beta - m)");
    }
};

/// (p(c), p'(c), ..., p^(k-1)(c)).
using Jet = std::vector<BigRational>;

inline Jet jet(const Poly& p, const BigRational& at, int k) {
    if (k < 0) throw std::invalid_argument("jet: negative length");
    Jet out;
    out.reserve(static_cast<std::size_t>(k));
    Poly d = p;
    for (int i = 0; i < k; ++i) {
        out.push_back(d(at));
        d = d.derivative();
    }
    return out;
}

namespace detail {

inline BigRational quadratic_form(const Jet& u, const RationalMatrix& A, const Jet& v) {
    BigRational acc(0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < A.cols(); ++j) acc += u[i] * A(i, j) * v[j];
    }
    return acc;
}

}  // namespace detail

inline BigRational bilinear(const SobolevConfig& cfg, const Poly& p, const Poly& q) {
    if (cfg.weight_a() < 0 || cfg.weight_b() < 0)
        throw ParameterOutOfRange("weight exponents alpha-m2 and beta-m1 must be nonnegative");
    if (p.is_zero() || q.is_zero()) return 0;
    BigRational acc = weighted_integral(p * q, cfg.weight_a(), cfg.weight_b());
    if (cfg.m1 > 0) acc += detail::quadratic_form(jet(p, -1, cfg.m1), cfg.M, jet(q, -1, cfg.m1));
    if (cfg.m2 > 0) acc += detail::quadratic_form(jet(p, 1, cfg.m2), cfg.N, jet(q, 1, cfg.m2));
    return acc;
}

/// H_n = (B(x^k, x^j))_{j,k=0..n-1}.
inline RationalMatrix moment_matrix(const SobolevConfig& cfg, int n) {
    if (n < 0) throw std::invalid_argument("moment_matrix: negative size");
    const auto size = static_cast<std::size_t>(n);
    RationalMatrix H(size, size);
    for (std::size_t j = 0; j < size; ++j) {
        Poly xj = Poly::monomial(j);
        for (std::size_t k = 0; k < size; ++k) H(j, k) = bilinear(cfg, Poly::monomial(k), xj);
    }
    return H;
}

/// det H_n; nonzero iff a unique monic q_n with B(q_n, x^j) = 0, j < n, exists.
inline BigRational moment_determinant(const SobolevConfig& cfg, int n) { return det_gauss(moment_matrix(cfg, n)); }

/// Monic q_n with B(q_n, x^j) = 0 for j < n, from the n x n moment system.
/// nullopt when the system is singular or B(q_n, q_n) = 0.
inline std::optional<Poly> gram_orthogonal_oracle(const SobolevConfig& cfg, int n) {
    if (n < 0) throw std::invalid_argument("gram_orthogonal_oracle: negative degree");
    const auto size = static_cast<std::size_t>(n);
    std::vector<BigRational> rhs(size);
    for (std::size_t j = 0; j < size; ++j) rhs[j] = -bilinear(cfg, Poly::monomial(size), Poly::monomial(j));
    auto sol = solve(moment_matrix(cfg, n), std::move(rhs));
    if (!sol) return std::nullopt;
    std::vector<BigRational> coeffs = std::move(*sol);
    coeffs.emplace_back(1);
    Poly q(std::move(coeffs));
    if (bilinear(cfg, q, q) == 0) return std::nullopt;
    return q;
}

}  // namespace jsob

#endif  // JSOB_SOBOLEV_HPP
