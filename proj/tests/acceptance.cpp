// Acceptance suite. Every check is exact. Prints one PASS/FAIL line per
// criterion; exit status is 0 iff the set of failing criteria equals the set
// given by --expect-fail (empty by default).

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "example_configs.hpp"
#include "test_support.hpp"

namespace {

using namespace jsob;
using namespace jsob::testing;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;  // 0 for none
    std::function<Outcome()> run;
};

struct Shape {
    long alpha, beta;
    int m1, m2;
};

constexpr Shape kShapes[] = {{2, 1, 1, 1}, {2, 2, 1, 1}, {3, 2, 2, 1}, {3, 3, 2, 2}};
constexpr int kPairsPerShape = 5;
constexpr long kOrthogonalityMax = 10;
constexpr long kOracleMax = 8;
constexpr long kEigenMax = 8;
constexpr unsigned kSeed = 20240611;

std::string shape_name(const SobolevConfig& c) {
    std::ostringstream os;
    os << "(" << c.alpha << "," << c.beta << "," << c.m1 << "," << c.m2 << ")";
    return os.str();
}

/// The random configurations shared by several criteria; Lambda(k) != 0 for
/// k <= kOrthogonalityMax + 1, so every q_n up to kOrthogonalityMax exists.
const std::vector<SobolevConfig>& random_configs() {
    static const std::vector<SobolevConfig> configs = [] {
        std::mt19937 g(kSeed);
        std::vector<SobolevConfig> out;
        for (const Shape& s : kShapes)
            for (int i = 0; i < kPairsPerShape; ++i)
                out.push_back(random_nondegenerate_config(g, s.alpha, s.beta, s.m1, s.m2, kOrthogonalityMax));
        return out;
    }();
    return configs;
}

/// x(x + alpha + beta - m) + 1, invariant under the involution Xi must respect.
Poly invariant_quadratic(const SobolevConfig& cfg) {
    return Poly({0, 1}) * Poly::linear(1, cfg.alpha + cfg.beta - cfg.m()) + Poly(1);
}

Outcome classical_sanity() {
    Outcome o;
    const std::pair<long, long> params[] = {{0, 0}, {2, 1}, {3, 3}, {5, 2}};
    int checked = 0;
    for (auto [a, b] : params) {
        JacobiContext ctx(a, b);
        DiffOp d = classical_operator(ctx);
        for (long n = 0; n <= 15; ++n) {
            Poly j = jacobi_poly(ctx, n);
            ++checked;
            if (d(j) != j * ctx.theta(BigRational(n))) {
                o.pass = false;
                o.detail = "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ") n=" + std::to_string(n);
                return o;
            }
        }
    }
    o.detail = std::to_string(checked) + " eigen-identities";
    return o;
}

Outcome orthogonality() {
    Outcome o;
    long checks = 0;
    for (const auto& cfg : random_configs()) {
        CasoratiSystem cs(cfg);
        for (long n = 0; n <= kOrthogonalityMax; ++n) {
            Poly q = cs.sobolev_poly(n);
            for (long j = 0; j < n; ++j, ++checks)
                if (bilinear(cfg, q, Poly::monomial(static_cast<std::size_t>(j))) != 0) {
                    o.pass = false;
                    o.detail = shape_name(cfg) + " B(q_" + std::to_string(n) + ", x^" + std::to_string(j) + ") != 0";
                    return o;
                }
            if (bilinear(cfg, q, q) == 0) {
                o.pass = false;
                o.detail = shape_name(cfg) + " B(q_" + std::to_string(n) + ", q_n) = 0";
                return o;
            }
        }
    }
    o.detail = std::to_string(random_configs().size()) + " configs, " + std::to_string(checks) + " vanishing products";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    for (const auto& cfg : random_configs()) {
        CasoratiSystem cs(cfg);
        for (long n = 0; n <= kOracleMax; ++n) {
            Poly q = cs.sobolev_poly(n);
            auto oracle = gram_orthogonal_oracle(cfg, static_cast<int>(n));
            if (!oracle || q.degree() != n || q != *oracle * q.leading()) {
                o.pass = false;
                o.detail = shape_name(cfg) + " n=" + std::to_string(n);
                return o;
            }
        }
    }
    o.detail = std::to_string(random_configs().size()) + " configs, n <= " + std::to_string(kOracleMax);
    return o;
}

Outcome eigenfunction() {
    Outcome o;
    int theta_ok = 0;
    int lambda_ok = 0;
    std::string first_failure;
    for (const auto& cfg : random_configs()) {
        CasoratiSystem cs(cfg);
        OperatorBundle b = build_bundle(cfg, cs.z_system(), std::nullopt);
        try {
            verify_eigen(b, cs, kEigenMax, EigenForm::ThetaPolynomial);
            ++theta_ok;
        } catch (const EigenMismatch& e) {
            if (first_failure.empty()) first_failure = shape_name(cfg) + " first mismatch at n=" + std::to_string(e.n());
        }
        try {
            verify_eigen(b, cs, kEigenMax, EigenForm::Lambda);
            ++lambda_ok;
        } catch (const EigenMismatch&) {
        }
    }
    const int total = static_cast<int>(random_configs().size());
    o.pass = theta_ok == total;
    o.detail = "(P_S(theta_n)+c) q_n: " + std::to_string(theta_ok) + "/" + std::to_string(total) + " configs";
    if (!first_failure.empty()) o.detail += " [" + first_failure + "]";
    o.detail += "; (lambda_n+c) q_n: " + std::to_string(lambda_ok) + "/" + std::to_string(total);
    return o;
}

Outcome order_formula() {
    Outcome o;
    int checked = 0;
    for (const auto& base : random_configs()) {
        for (int variant = 0; variant < 2; ++variant) {
            SobolevConfig cfg = base;
            if (variant == 1) cfg.xi = invariant_quadratic(cfg);
            cfg.validate();
            ZSystem sys = build_z(cfg);
            OperatorBundle b = build_bundle(cfg, sys, std::nullopt);
            ++checked;
            if (!check_order(b, cfg)) {
                o.pass = false;
                o.detail = shape_name(cfg) + (variant ? " quadratic Xi" : " Xi=1") + ": order " +
                           std::to_string(operator_order(b)) + " vs predicted " + to_string(predicted_order(cfg));
                return o;
            }
            if (variant == 0 && cfg.m1 == 1 && cfg.m2 == 1 && cfg.M(0, 0) != 0 && cfg.N(0, 0) != 0 &&
                operator_order(b) != 2 * (cfg.alpha + cfg.beta + 1)) {
                o.pass = false;
                o.detail = shape_name(cfg) + " scalar masses: order != 2(alpha+beta+1)";
                return o;
            }
        }
    }
    for (long alpha = 1; alpha <= 3; ++alpha) {
        SobolevConfig cfg = symmetric_scalar_config(alpha, 1);
        OperatorBundle b = build_bundle(cfg, build_z(cfg), std::nullopt);
        ++checked;
        if (operator_order(b) != 4 * alpha + 2 || predicted_order(cfg) != 4 * alpha + 2) {
            o.pass = false;
            o.detail = "alpha=beta=" + std::to_string(alpha) + ", M=N: order " + std::to_string(operator_order(b)) +
                       " != 4 alpha + 2";
            return o;
        }
    }
    o.detail = std::to_string(checked) + " operators";
    return o;
}

Outcome symmetric_scalar_example() {
    Outcome o;
    const BigRational mass(1);
    for (long alpha = 1; alpha <= 3; ++alpha) {
        const std::string tag = "alpha=" + std::to_string(alpha) + ": ";
        SobolevConfig cfg = symmetric_scalar_config(alpha, mass);
        CasoratiSystem cs(cfg);
        const ZSystem& sys = cs.z_system();
        Poly z = symmetric_scalar_z(alpha, mass);
        if (sys.z[0] != z || sys.z[1] != z) return {false, tag + "z_1, z_2 differ from the closed form"};
        RationalFunction omega = omega_from_z(cfg, sys);
        if (omega != RationalFunction(z.shift(-1) * z.shift(-2) * BigRational(-2)))
            return {false, tag + "Omega != -2 z_1(x-1) z_1(x-2)"};
        OperatorBundle b = build_bundle(cfg, sys, symmetric_scalar_custom_s(alpha, mass));
        Poly quarter_sigma = cfg.jacobi().sigma_x(1) * make_rational(1, 4);
        if (b.Mh[0] != quarter_sigma || b.Mh[1] != quarter_sigma) return {false, tag + "M_h != sigma_{x+1}/4"};
        if (b.lambda != symmetric_scalar_lambda(alpha, mass)) return {false, tag + "lambda_x differs"};
        if (operator_order(b) != 2 * alpha + 2)
            return {false, tag + "order " + std::to_string(operator_order(b)) + " != 2 alpha + 2"};
        try {
            verify_eigen(b, cs, kEigenMax);
        } catch (const EigenMismatch& e) {
            return {false, tag + "not an eigenoperator at n=" + std::to_string(e.n())};
        }
    }
    o.detail = "alpha in {1,2,3}: order 2 alpha + 2, z, Omega, M_h, lambda exact";
    return o;
}

Outcome two_by_two_example() {
    Outcome o;
    const BigRational m0(3);
    const BigRational m1(2);
    bool tilde_sign_flipped = false;
    for (long alpha = 2; alpha <= 3; ++alpha) {
        const std::string tag = "alpha=" + std::to_string(alpha) + ": ";
        SobolevConfig cfg = two_by_two_config(alpha, m0, m1);
        CasoratiSystem cs(cfg);
        const ZSystem& sys = cs.z_system();
        Poly z_odd = two_by_two_z_odd(alpha, m0, m1);
        Poly z_even = two_by_two_z_even(alpha, m1);
        if (sys.z[0] != z_odd || sys.z[2] != z_odd || sys.z[1] != z_even || sys.z[3] != z_even)
            return {false, tag + "z_h differ from the closed forms"};
        OperatorBundle b = build_bundle(cfg, sys, two_by_two_custom_s(alpha, m0, m1));
        const JacobiContext ctx = cfg.jacobi();
        const Poly sigma = ctx.sigma_x(1);
        const Poly mt[] = {two_by_two_mtilde_odd(alpha, m1), two_by_two_mtilde_even(alpha, m0, m1)};
        for (int h = 0; h < 4; ++h) {
            const Poly& shown = mt[h % 2];
            if (b.Mh[static_cast<std::size_t>(h)] != sigma * shown)
                return {false, tag + "M_" + std::to_string(h + 1) + " differs"};
            Poly tilde = from_theta(b.MhTilde[static_cast<std::size_t>(h)], ctx.alpha(), ctx.beta());
            // M_h = sigma^h_{x+1} M~_h(theta_x), and sigma^h_{x+1} = -sigma_{x+1} for the second kind.
            const Poly expected = h < cfg.m1 ? shown : Poly(-shown);
            if (tilde != expected) return {false, tag + "M~_" + std::to_string(h + 1) + " differs"};
            if (h >= cfg.m1 && tilde != shown) tilde_sign_flipped = true;
        }
        if (b.lambda != two_by_two_lambda(alpha, m0, m1)) return {false, tag + "lambda_x differs"};
        if (operator_order(b) != 2 * alpha + 2)
            return {false, tag + "order " + std::to_string(operator_order(b)) + " != 2 alpha + 2"};
        if (b.PS.degree() != alpha + 1) return {false, tag + "deg P_S != alpha + 1"};
        try {
            verify_eigen(b, cs, kEigenMax);
        } catch (const EigenMismatch& e) {
            return {false, tag + "not an eigenoperator at n=" + std::to_string(e.n())};
        }
    }
    o.detail = "alpha in {2,3}: order 2 alpha + 2, deg P_S = alpha + 1, M_h, lambda exact";
    if (tilde_sign_flipped) o.detail += "; M~_3, M~_4 carry the sign of sigma^h";
    return o;
}

Outcome order_corollaries() {
    Outcome o;
    int checked = 0;
    const long alpha = 3;
    const long beta = 3;
    const std::pair<int, int> full_mass[] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
    for (auto [m1, m2] : full_mass) {
        auto hankel = [](int size, long sign) {
            RationalMatrix h(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i)
                for (int j = 0; i + j <= size - 1; ++j) h(i, j) = sign * (i + j + 1);
            return h;
        };
        SobolevConfig cfg = make_config(alpha, beta, m1, m2, hankel(m1, 1), hankel(m2, -1));
        OperatorBundle b = build_bundle(cfg, build_z(cfg), std::nullopt);
        const long bound = 2 * (m1 * beta + m2 * alpha + 1);
        const long order = operator_order(b);
        const bool equality = (m1 == 1 && m2 == 1) || (m1 == 2 && m2 == 1);
        ++checked;
        if (order > bound || (equality && order != bound))
            return {false, "full mass (" + std::to_string(m1) + "," + std::to_string(m2) + "): order " +
                               std::to_string(order) + " vs 2(m1 beta + m2 alpha + 1) = " + std::to_string(bound)};
    }
    const std::pair<int, int> diagonal[] = {{1, 1}, {2, 1}, {2, 2}};
    for (auto [m1, m2] : diagonal) {
        RationalMatrix M(static_cast<std::size_t>(m1), static_cast<std::size_t>(m1));
        RationalMatrix N(static_cast<std::size_t>(m2), static_cast<std::size_t>(m2));
        M(m1 - 1, m1 - 1) = 2;
        N(m2 - 1, m2 - 1) = -1;
        SobolevConfig cfg = make_config(alpha, beta, m1, m2, M, N);
        OperatorBundle b = build_bundle(cfg, build_z(cfg), std::nullopt);
        const long expected = 2 * (alpha + beta + m1 + m2 - 1);
        ++checked;
        if (operator_order(b) != expected)
            return {false, "diagonal (" + std::to_string(m1) + "," + std::to_string(m2) + "): order " +
                               std::to_string(operator_order(b)) + " != " + std::to_string(expected)};
    }
    o.detail = std::to_string(checked) + " configurations";
    return o;
}

BigRational random_non_integer(std::mt19937& g) {
    const int dens[] = {3, 5, 7, 9};
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> num(1, 40);
    for (;;) {
        BigRational r{num(g), dens[pick(g)]};
        r.canonicalize();
        if (!is_integer(r)) return r;
    }
}

Outcome combinatorial_identities() {
    Outcome o;
    std::mt19937 g(kSeed + 9);
    int pairs = 0;
    while (pairs < 20) {
        BigRational a = random_non_integer(g);
        BigRational b = random_non_integer(g);
        if (is_integer(a + b)) continue;
        ++pairs;
        for (int m1 = 0; m1 <= 3; ++m1)
            for (int m2 = 0; m2 <= 3; ++m2) {
                if (m1 + m2 == 0) continue;
                if (!verify_comb_identities(a, b, m1, m2))
                    return {false, "(" + to_string(a) + ", " + to_string(b) + ") m1=" + std::to_string(m1) +
                                       " m2=" + std::to_string(m2)};
            }
    }
    o.detail = "20 parameter pairs, m1, m2 <= 3";
    return o;
}

Outcome degree_law() {
    Outcome o;
    std::mt19937 g(kSeed + 10);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> pick_m(2, 4);
        const int m = pick_m(g);
        std::uniform_int_distribution<int> pick_m1(0, m);
        const int m1 = pick_m1(g);
        const int m2 = m - m1;
        std::uniform_int_distribution<long> pick_param(m, m + 3);
        const long a = pick_param(g);
        const long b = pick_param(g);
        std::vector<Poly> Y;
        auto block = [&](int size) {
            std::vector<int> degrees{0, 1, 2, 3, 4};
            std::shuffle(degrees.begin(), degrees.end(), g);
            for (int i = 0; i < size; ++i) {
                std::vector<BigRational> co;
                for (int k = 0; k <= degrees[static_cast<std::size_t>(i)]; ++k) co.emplace_back(coef(g));
                if (co.back() == 0) co.back() = 1;
                Y.emplace_back(std::move(co));
            }
        };
        block(m1);
        block(m2);
        DegreeLawResult r = degree_of_p_check(a, b, m1, m2, Y);
        if (!r.holds) {
            std::ostringstream os;
            os << "trial " << trial << " (a=" << a << ", b=" << b << ", m1=" << m1 << ", m2=" << m2
               << "): polynomial=" << r.is_polynomial << " degree " << r.P.degree() << " vs " << r.expected_degree;
            if (!r.P.is_zero()) os << ", leading " << to_string(r.P.leading()) << " vs " << to_string(r.expected_leading);
            return {false, os.str()};
        }
    }
    o.detail = "10 random tuples, m <= 4";
    return o;
}

Outcome rl_cross_checks() {
    Outcome o;
    int checks = 0;
    for (const auto& cfg : random_configs()) {
        ZSystem sys = build_z(cfg);
        for (int l = 1; l <= cfg.m(); ++l)
            for (long n = cfg.m(); n <= cfg.m() + 6; ++n, ++checks) {
                auto [direct, via_z] = rl_cross_check(cfg, sys, l, n);
                if (direct != via_z)
                    return {false, shape_name(cfg) + " l=" + std::to_string(l) + " n=" + std::to_string(n)};
            }
    }
    o.detail = std::to_string(checks) + " equalities";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::vector<int> expect_fail;
    app.add_option("--expect-fail", expect_fail, "Criteria known to fail");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "classical Jacobi eigen-identity", 5, classical_sanity},
        {2, "left orthogonality of q_n", 60, orthogonality},
        {3, "agreement with the moment-matrix oracle", 0, oracle_equivalence},
        {4, "eigenvalue P_S(theta_n) + c", 0, eigenfunction},
        {5, "operator order formula", 0, order_formula},
        {6, "symmetric scalar masses, lowered order", 30, symmetric_scalar_example},
        {7, "2x2 masses, lowered order", 0, two_by_two_example},
        {8, "closed-form order corollaries", 0, order_corollaries},
        {9, "combinatorial identities", 0, combinatorial_identities},
        {10, "determinant degree law", 0, degree_law},
        {11, "moment sequence cross-check", 0, rl_cross_checks},
    };

    std::set<int> failed;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
            o.pass = false;
            o.detail += "; exceeded " + std::to_string(static_cast<int>(c.time_limit_s)) + " s";
        }
        if (!o.pass) failed.insert(c.id);
        std::printf("[%s] criterion %2d: %s -- %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }

    const std::set<int> expected(expect_fail.begin(), expect_fail.end());
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
    if (failed != expected) {
        std::printf("failing set differs from the expected set\n");
        return 1;
    }
    return 0;
}
