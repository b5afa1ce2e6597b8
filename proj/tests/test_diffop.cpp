#include <gtest/gtest.h>

#include <random>

#include "example_configs.hpp"
#include "test_support.hpp"

using namespace jsob;
using namespace jsob::testing;

namespace {

std::vector<SobolevConfig> sample_configs() {
    std::mt19937 g(101);
    return {random_nondegenerate_config(g, 2, 1, 1, 1, 8), random_nondegenerate_config(g, 3, 2, 2, 1, 8),
            random_nondegenerate_config(g, 3, 3, 2, 2, 8), random_nondegenerate_config(g, 2, 3, 0, 2, 8),
            random_nondegenerate_config(g, 2, 2, 2, 0, 8)};
}

}  // namespace

TEST(ComposeTest, MatchesSequentialApplication) {
    std::mt19937 g(103);
    for (int i = 0; i < 20; ++i) {
        DiffOp a({random_poly(g, 1), random_poly(g, 2), random_poly(g, 0)});
        DiffOp b({random_poly(g, 2), random_poly(g, 1)});
        Poly p = random_poly(g, 6);
        EXPECT_EQ(compose(a, b)(p), a(b(p)));
    }
    EXPECT_EQ(compose(DiffOp::derivative(), DiffOp::multiply_by(Poly::x())), DiffOp({Poly(1), Poly::x()}));
    EXPECT_TRUE(compose(DiffOp(), DiffOp::derivative()).is_zero());
    EXPECT_EQ(DiffOp().order(), -1);
}

TEST(ComposeTest, PolynomialOfOperator) {
    JacobiContext ctx(2, 1);
    DiffOp dp = classical_operator(ctx);
    Poly p({3, -1, 2});
    DiffOp op = poly_of_operator(p, dp);
    EXPECT_TRUE(op.in_algebra());
    for (long n = 0; n <= 6; ++n) {
        Poly j = jacobi_poly(ctx, n);
        EXPECT_EQ(op(j), j * p(ctx.theta(BigRational(n))));
    }
}

TEST(XiTest, Values) {
    SobolevConfig cfg = make_config(3, 2, 1, 1, scalar_matrix(1), scalar_matrix(1));
    EXPECT_EQ(xi(cfg, 2, 3), RationalFunction(1));
    EXPECT_EQ(xi(cfg, 1, 0), RationalFunction(1));
    EXPECT_EQ(xi(cfg, 1, 1), RationalFunction(Poly({-3, -1}), Poly({2, 1})));
    for (long j = 1; j <= 3; ++j) EXPECT_EQ(xi(cfg, 1, -j) * xi_at(cfg, 1, j, j), RationalFunction(1));
    SobolevConfig sym = symmetric_scalar_config(3, 1);
    for (long j = -3; j <= 3; ++j) {
        EXPECT_EQ(xi(sym, 1, j), RationalFunction(BigRational(sign_power(j))));
        EXPECT_EQ(xi(sym, 2, j), RationalFunction(1));
    }
}

TEST(DefaultSTest, SymmetricScalarMasses) {
    for (long alpha = 1; alpha <= 3; ++alpha) {
        SobolevConfig cfg = symmetric_scalar_config(alpha, 2);
        EXPECT_EQ(default_s(cfg, build_z(cfg)), RationalFunction(Poly({1 - alpha, -1})));
    }
}

TEST(BundleTest, StructuralIdentities) {
    for (const auto& cfg : sample_configs()) {
        CasoratiSystem cs(cfg);
        const ZSystem& sys = cs.z_system();
        OperatorBundle b = build_bundle(cfg, sys);
        EXPECT_EQ(omega_from_y(cfg, sys), omega_from_z(cfg, sys));
        EXPECT_TRUE(b.D.in_algebra());
        EXPECT_TRUE(check_mh_skew(b, cfg));
        EXPECT_TRUE(check_somega_symmetry(b, cfg));
        EXPECT_TRUE(check_ps_difference(b, cfg));
        EXPECT_TRUE(check_order(b, cfg));
        EXPECT_EQ(b.lambda(BigRational(0)), 0);
        EXPECT_EQ(b.lambda - b.lambda.shift(-1), b.SOmega);
        for (int h = 0; h < cfg.m(); ++h)
            EXPECT_EQ(b.Mh[h], sigma_h(cfg, h + 1) * from_theta(b.MhTilde[h], cfg.alpha, cfg.beta));
    }
}

TEST(BundleTest, EigenfunctionsWithLambdaEigenvalues) {
    for (const auto& cfg : sample_configs()) {
        CasoratiSystem cs(cfg);
        OperatorBundle b = build_bundle(cfg, cs.z_system());
        EigenReport rep = verify_eigen(b, cs, 8);
        ASSERT_EQ(rep.eigenvalues.size(), 9u);
        // lambda_x is symmetric about x = -(a+b-m+1)/2.
        EXPECT_EQ(involute(b.lambda, BigRational(cfg.alpha + cfg.beta - cfg.m())), b.lambda);
    }
}

TEST(BundleTest, ThetaPolynomialFormIsRejected) {
    SobolevConfig cfg = make_config(2, 1, 1, 1, scalar_matrix(1), scalar_matrix(-2));
    CasoratiSystem cs(cfg);
    OperatorBundle b = build_bundle(cfg, cs.z_system());
    EXPECT_THROW(verify_eigen(b, cs, 4, EigenForm::ThetaPolynomial), EigenMismatch);
}

TEST(BundleTest, QuadraticXiRaisesOrderByTwo) {
    SobolevConfig cfg = make_config(2, 1, 1, 1, scalar_matrix(1), scalar_matrix(-2));
    SobolevConfig with_xi = cfg;
    with_xi.xi = Poly({1, 1, 1});
    with_xi.validate();
    CasoratiSystem cs(with_xi);
    OperatorBundle plain = build_bundle(cfg, build_z(cfg));
    OperatorBundle b = build_bundle(with_xi, cs.z_system());
    EXPECT_EQ(operator_order(b), operator_order(plain) + 2);
    EXPECT_TRUE(check_order(b, with_xi));
    EXPECT_NO_THROW(verify_eigen(b, cs, 8));
}

TEST(BundleTest, CustomSLowersOrder) {
    SobolevConfig cfg = symmetric_scalar_config(2, 1);
    CasoratiSystem cs(cfg);
    OperatorBundle standard = build_bundle(cfg, cs.z_system());
    OperatorBundle lowered = build_bundle(cfg, cs.z_system(), symmetric_scalar_custom_s(2, 1));
    EXPECT_EQ(operator_order(standard), 10);
    EXPECT_EQ(operator_order(lowered), 6);
    EXPECT_FALSE(check_order(lowered, cfg));
    EXPECT_EQ(lowered.PS.degree(), 3);
    EXPECT_NO_THROW(verify_eigen(lowered, cs, 8));
}

TEST(BundleTest, AssumptionFailures) {
    SobolevConfig cfg = make_config(2, 1, 1, 1, scalar_matrix(1), scalar_matrix(-2));
    ZSystem sys = build_z(cfg);
    try {
        build_bundle(cfg, sys, CustomS{Poly(1), Poly({1, 3})});
        FAIL() << "expected AssumptionFailed";
    } catch (const AssumptionFailed& e) {
        EXPECT_EQ(e.which(), 0);
    }
    try {
        build_bundle(cfg, sys, CustomS{Poly(1), std::nullopt});
        FAIL() << "expected AssumptionFailed";
    } catch (const AssumptionFailed& e) {
        EXPECT_GE(e.which(), 1);
    }
    EXPECT_THROW(build_bundle(cfg, sys, CustomS{Poly(1), Poly()}), InputError);
}

TEST(BundleTest, SwappingWithinABlockNegatesTheOperator) {
    std::mt19937 g(107);
    for (int i = 0; i < 3; ++i) {
        SobolevConfig cfg = make_config(3, 3, 2, 2, random_matrix(g, 2), random_matrix(g, 2));
        ZSystem sys = build_z(cfg);
        OperatorBundle b = build_bundle(cfg, sys);
        for (auto [p, q] : {std::pair<std::size_t, std::size_t>{0, 1}, {2, 3}}) {
            ZSystem swapped = sys;
            std::swap(swapped.z[p], swapped.z[q]);
            std::swap(swapped.Y[p], swapped.Y[q]);
            EXPECT_EQ(build_bundle(cfg, swapped).D, b.D * BigRational(-1));
        }
    }
}

TEST(BundleTest, RowOperationWithinABlockScalesTheOperator) {
    std::mt19937 g(109);
    for (int i = 0; i < 3; ++i) {
        SobolevConfig cfg = make_config(3, 3, 2, 2, random_matrix(g, 2), random_matrix(g, 2));
        ZSystem sys = build_z(cfg);
        OperatorBundle b = build_bundle(cfg, sys);
        const BigRational a = make_rational(-3, 2);
        const BigRational c = make_rational(5, 7);
        for (auto [p, q] : {std::pair<std::size_t, std::size_t>{0, 1}, {3, 2}}) {
            ZSystem mixed = sys;
            mixed.z[p] = sys.z[p] * a + sys.z[q] * c;
            mixed.Y[p] = sys.Y[p] * a + sys.Y[q] * c;
            EXPECT_EQ(build_bundle(cfg, mixed).D, b.D * a);
        }
    }
}

TEST(DegreeLawTest, Examples) {
    DegreeLawResult one = degree_of_p_check(3, 2, 1, 0, {Poly({1, 1})});
    EXPECT_TRUE(one.holds);
    EXPECT_EQ(one.P.degree(), 2);
    DegreeLawResult two = degree_of_p_check(3, 2, 2, 0, {Poly(3), Poly({1, 2})});
    EXPECT_TRUE(two.holds);
    EXPECT_EQ(two.expected_degree, 0);
    EXPECT_THROW(degree_of_p_check(3, 2, 2, 0, {Poly(1)}), InputError);
}

TEST(DegreeLawTest, MatchesZSystemOfFullMassConfigurations) {
    for (auto [m1, m2] : {std::pair<int, int>{1, 1}, {2, 1}, {1, 2}}) {
        RationalMatrix M(static_cast<std::size_t>(m1), static_cast<std::size_t>(m1));
        RationalMatrix N(static_cast<std::size_t>(m2), static_cast<std::size_t>(m2));
        for (int i = 0; i < m1; ++i)
            for (int j = 0; i + j < m1; ++j) M(i, j) = 1 + i + j;
        for (int i = 0; i < m2; ++i)
            for (int j = 0; i + j < m2; ++j) N(i, j) = -1 - i - j;
        SobolevConfig cfg = make_config(3, 3, m1, m2, M, N);
        ZSystem sys = build_z(cfg);
        DegreeLawResult r = degree_of_p_check(3, 3, m1, m2, sys.Y);
        EXPECT_TRUE(r.holds);
        EXPECT_EQ(r.P.degree() + 2, 2 * (m1 * cfg.beta + m2 * cfg.alpha + 1));
    }
}
