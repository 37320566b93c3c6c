#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lsl/catalog.hpp"
#include "lsl/finite_type.hpp"

using namespace lsl;

TEST_CASE("sample points are seeded and stay inside the domain") {
    CatalogSurface cs = standard_product(de_sitter(), 2, -1, 0.6);
    SamplePoints a = sample_points(cs.chart, 20, 42);
    SamplePoints b = sample_points(cs.chart, 20, 42);
    SamplePoints c = sample_points(cs.chart, 20, 7);
    CHECK(a == b);
    CHECK(a != c);
    for (auto [u, v] : a) CHECK(cs.chart.domain.contains(u, v));
}

TEST_CASE("fit rejects too few samples") {
    CatalogSurface cs = standard_product(de_sitter(), 2, -1, 0.6);
    SamplePoints two = {{0.4, 0.5}, {0.6, 0.7}};
    CHECK_THROWS_WITH_AS(fit_spectral(cs.chart, two, FitModel::two_type),
                         doctest::Contains("invalid-samples"), Error);
}

TEST_CASE("one-type fit on umbilical slices") {
    SUBCASE("tau=1, timelike hyperplane in S^3_1") {
        CatalogSurface cs = umbilical(de_sitter(), {1, 0, 0, 0}, 1.0);
        SpectralFit fit = fit_spectral(cs.chart, sample_points(cs.chart, 20, 42),
                                       FitModel::one_type);
        CHECK(fit.verdict == Verdict::OneType);
        CHECK(fit.lambda == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
        CHECK(fit.b[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
        for (int i = 1; i < 4; ++i) CHECK(std::abs(fit.b[i]) < 1e-8);
        CHECK(fit.one_type_residual < 1e-8);
    }
    SUBCASE("tau=0 gives the null 1-type verdict") {
        CatalogSurface cs = umbilical(de_sitter(), {1, 0, 0, 0}, 0.0);
        SpectralFit fit = fit_spectral(cs.chart, sample_points(cs.chart, 20, 42),
                                       FitModel::one_type);
        CHECK(fit.verdict == Verdict::OneType);
        CHECK(std::abs(fit.lambda) < 1e-8);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(fit.b[i]) < 1e-8);
    }
    SUBCASE("null hyperplane direction: L1 psi constant but nonzero") {
        CatalogSurface cs = umbilical(de_sitter(), {1, 0, 0, 1}, 1.0);
        SpectralFit fit = fit_spectral(cs.chart, sample_points(cs.chart, 20, 42),
                                       FitModel::one_type);
        CHECK(fit.verdict == Verdict::InfiniteType);
        CHECK(std::abs(fit.lambda) < 1e-8);
        CHECK(fit.b[0] == doctest::Approx(2.0).epsilon(1e-8));
        CHECK(fit.b[3] == doctest::Approx(2.0).epsilon(1e-8));
    }
}

TEST_CASE("two-type fit on a standard product") {
    CatalogSurface cs = standard_product(de_sitter(), 2, -1, 0.6);
    SpectralFit fit = fit_spectral(cs.chart, sample_points(cs.chart, 20, 42),
                                   FitModel::two_type);
    CHECK(fit.verdict == Verdict::TwoType);
    CHECK(fit.two_type_residual < 1e-8);
    REQUIRE(cs.expected.sigma);
    REQUIRE(cs.expected.pi);
    CHECK(fit.sigma == doctest::Approx(*cs.expected.sigma).epsilon(1e-8));
    CHECK(fit.pi == doctest::Approx(*cs.expected.pi).epsilon(1e-8));
    CHECK(fit.roots_real);
    // eigenvalues recovered from (sigma, pi) match the per-factor formulas
    REQUIRE(cs.expected.lambda1);
    REQUIRE(cs.expected.lambda2);
    double hi = std::max(*cs.expected.lambda1, *cs.expected.lambda2);
    double lo = std::min(*cs.expected.lambda1, *cs.expected.lambda2);
    CHECK(fit.roots[0].real() == doctest::Approx(hi).epsilon(1e-7));
    CHECK(fit.roots[1].real() == doctest::Approx(lo).epsilon(1e-7));
    // the product is centered: a = 0
    REQUIRE(fit.a_defined);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(fit.a[i]) < 1e-7);
}

TEST_CASE("characterizing equations hold for the fitted two-type data") {
    for (const CatalogSurface& cs :
         {standard_product(de_sitter(), 2, -1, 0.6), standard_product(anti_de_sitter(), 3, 1, 0.5)}) {
        SamplePoints pts = sample_points(cs.chart, 12, 42);
        SpectralFit fit = fit_spectral(cs.chart, pts, FitModel::two_type);
        REQUIRE(fit.a_defined);
        for (auto [u, v] : pts) {
            CHECK(residual_tan(cs.chart, u, v, fit.pi, fit.a) < 1e-6);
            CHECK(residual_nor1(cs.chart, u, v, fit.sigma, fit.pi, fit.a) < 1e-6);
            CHECK(residual_nor2(cs.chart, u, v, fit.sigma, fit.pi, fit.a) < 1e-6);
        }
    }
}

TEST_CASE("complex circle yields a complex eigenvalue pair") {
    CatalogSurface cs = complex_circle(0.75, 1.25);
    SpectralFit fit = fit_spectral(cs.chart, sample_points(cs.chart, 20, 42),
                                   FitModel::two_type);
    CHECK(fit.verdict == Verdict::ComplexPair);
    CHECK_FALSE(fit.roots_real);
    CHECK(std::abs(fit.sigma) < 1e-8);
    CHECK(fit.pi == doctest::Approx(256.0 / 289.0).epsilon(1e-8));
}

TEST_CASE("b-scrolls: null two-type when non-flat, infinite type when flat") {
    SUBCASE("non-flat, constant curvature profile") {
        CatalogSurface cs = b_scroll(de_sitter(), BScrollOptions{});
        SpectralFit fit = fit_spectral(cs.chart, sample_points(cs.chart, 20, 42),
                                       FitModel::two_type);
        CHECK(fit.verdict == Verdict::NullTwoType);
        CHECK(fit.sigma == doctest::Approx(4.0).epsilon(1e-7)); // 2HK = 2*1*2
        CHECK(std::abs(fit.pi) < 1e-7);
    }
    SUBCASE("non-flat, varying curvature profile") {
        BScrollOptions opt;
        opt.a0 = 2.0;
        opt.kappa = kappa_smooth();
        CatalogSurface cs = b_scroll(de_sitter(), opt);
        SpectralFit fit = fit_spectral(cs.chart, sample_points(cs.chart, 20, 42),
                                       FitModel::two_type);
        CHECK(fit.verdict == Verdict::NullTwoType);
        CHECK(fit.sigma == doctest::Approx(2.0 * 2.0 * 5.0).epsilon(1e-7));
    }
    SUBCASE("flat case in H^3_1") {
        CatalogSurface cs = b_scroll(anti_de_sitter(), BScrollOptions{});
        SpectralFit fit = fit_spectral(cs.chart, sample_points(cs.chart, 20, 42),
                                       FitModel::two_type);
        CHECK(fit.verdict == Verdict::InfiniteType);
        CHECK(std::abs(fit.sigma) < 1e-7);
        CHECK(std::abs(fit.pi) < 1e-7);
    }
}

TEST_CASE("generic surface is inconclusive") {
    CatalogSurface cs = generic_perturbed(de_sitter());
    SpectralFit fit = fit_spectral(cs.chart, sample_points(cs.chart, 20, 42),
                                   FitModel::two_type);
    CHECK(fit.verdict == Verdict::Inconclusive);
    CHECK(fit.two_type_residual > 1e-6);
    CHECK(fit.one_type_residual > 1e-6);
}

TEST_CASE("constancy flags agree with the two-type verdicts") {
    SUBCASE("product: hypothesis met, everything constant") {
        CatalogSurface cs = standard_product(de_sitter(), 2, 1, 0.6);
        SpectralFit fit = fit_spectral(cs.chart, sample_points(cs.chart, 20, 42),
                                       FitModel::two_type);
        TheoremACheck ta = theoremA_check(cs.chart, 5, 5, fit);
        CHECK(ta.hypothesis_met);
        CHECK(ta.h_const);
        CHECK(ta.h2_const);
        CHECK(ta.principal_const);
        CHECK(ta.equivalent);
    }
    SUBCASE("generic: hypothesis fails and nothing is constant") {
        CatalogSurface cs = generic_perturbed(de_sitter());
        SpectralFit fit = fit_spectral(cs.chart, sample_points(cs.chart, 20, 42),
                                       FitModel::two_type);
        TheoremACheck ta = theoremA_check(cs.chart, 5, 5, fit);
        CHECK_FALSE(ta.hypothesis_met);
        CHECK_FALSE(ta.h_const);
        CHECK_FALSE(ta.h2_const);
        CHECK_FALSE(ta.principal_const);
        CHECK(ta.equivalent);
    }
}

TEST_CASE("verdict names") {
    CHECK(to_string(Verdict::OneType) == "OneType");
    CHECK(to_string(Verdict::TwoType) == "TwoType");
    CHECK(to_string(Verdict::NullTwoType) == "NullTwoType");
    CHECK(to_string(Verdict::ComplexPair) == "ComplexPair");
    CHECK(to_string(Verdict::InfiniteType) == "InfiniteType");
    CHECK(to_string(Verdict::Inconclusive) == "Inconclusive");
}
