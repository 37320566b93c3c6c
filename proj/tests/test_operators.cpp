#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lsl/catalog.hpp"
#include "lsl/operators.hpp"

using namespace lsl;

namespace {

ScalarField coord_field(const Chart& chart, const Vec4& e, bool of_normal) {
    return {[&chart, e, of_normal](double u, double v) {
                GeometryJets G = geometry_jets(chart, u, v);
                return coordinate_field_jet(G, e, of_normal);
            },
            of_normal ? "<e,N>" : "<e,psi>"};
}

const double kPts[3][2] = {{0.35, 0.45}, {0.6, 0.9}, {0.9, 0.3}};

} // namespace

TEST_CASE("gradient of a coordinate function is the tangential part of e") {
    CatalogSurface cs = standard_product(de_sitter(), 2, -1, 0.6);
    const Chart& chart = cs.chart;
    for (auto [u, v] : kPts) {
        GeometryJets G = geometry_jets(chart, u, v);
        PointGeometry pg = extract_point_geometry(G);
        Vec4 psi = value(G.psi);
        for (int i = 0; i < 4; ++i) {
            Vec4 e{};
            e[i] = 1.0;
            TangentVector grad = gradient(coord_field(chart, e, false), chart, u, v);
            Vec4 amb = push_forward(G, grad);
            Vec4 want = tangential_component(e, psi, pg.N, pg.eps, chart.sf);
            for (int k = 0; k < 4; ++k)
                CHECK(amb[k] == doctest::Approx(want[k]).epsilon(1e-9).scale(1.0));
        }
    }
}

TEST_CASE("gradient of a normal coordinate function is -S e^T") {
    CatalogSurface cs = standard_product(de_sitter(), 2, -1, 0.6);
    const Chart& chart = cs.chart;
    double u = 0.5, v = 0.7;
    GeometryJets G = geometry_jets(chart, u, v);
    PointGeometry pg = extract_point_geometry(G);
    for (int i = 0; i < 4; ++i) {
        Vec4 e{};
        e[i] = 1.0;
        TangentVector grad = gradient(coord_field(chart, e, true), chart, u, v);
        // e^T in coordinates, then -S applied
        double ep[2] = {inner(e, value(G.psi_u), chart.sf), inner(e, value(G.psi_v), chart.sf)};
        double etop[2], want[2];
        for (int k = 0; k < 2; ++k)
            etop[k] = G.ginv[k][0].value() * ep[0] + G.ginv[k][1].value() * ep[1];
        for (int k = 0; k < 2; ++k) want[k] = -(pg.S[k][0] * etop[0] + pg.S[k][1] * etop[1]);
        CHECK(grad.c[0] == doctest::Approx(want[0]).epsilon(1e-8).scale(1.0));
        CHECK(grad.c[1] == doctest::Approx(want[1]).epsilon(1e-8).scale(1.0));
    }
}

TEST_CASE("hessian of constants and coordinate functions") {
    CatalogSurface cs = umbilical(anti_de_sitter(), {0, 0, 0, 1}, 2.0);
    const Chart& chart = cs.chart;
    ScalarField constant{[](double, double) { return Jet2::constant(3.25); }, "const"};
    Mat2 h = hessian_operator(constant, chart, 0.5, 0.3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(std::abs(h[i][j]) < 1e-12);

    // hess <e,psi> = eps<e,N> S - c<e,psi> I
    double u = 0.7, v = 0.4;
    GeometryJets G = geometry_jets(chart, u, v);
    PointGeometry pg = extract_point_geometry(G);
    Vec4 psi = value(G.psi);
    for (int i = 0; i < 4; ++i) {
        Vec4 e{};
        e[i] = 1.0;
        Mat2 he = hessian_operator(coord_field(chart, e, false), chart, u, v);
        double eN = inner(e, pg.N, chart.sf), epsi = inner(e, psi, chart.sf);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                double want = pg.eps * eN * pg.S[a][b] - (a == b ? chart.sf.c * epsi : 0.0);
                CHECK(he[a][b] == doctest::Approx(want).epsilon(1e-8).scale(1.0));
            }
    }

    // g-self-adjointness: g H is symmetric
    Mat2 he = hessian_operator(coord_field(chart, {1, 0, 0, 0}, false), chart, u, v);
    double gh01 = pg.g[0][0] * he[0][1] + pg.g[0][1] * he[1][1];
    double gh10 = pg.g[1][0] * he[0][0] + pg.g[1][1] * he[1][0];
    CHECK(gh01 == doctest::Approx(gh10).epsilon(1e-9).scale(1.0));
}

TEST_CASE("L1 of coordinate and normal functions matches the closed forms") {
    for (const CatalogSurface& cs : {standard_product(de_sitter(), 3, 1, 0.5),
                                     b_scroll(anti_de_sitter(), BScrollOptions{})}) {
        const Chart& chart = cs.chart;
        double u = chart.domain.mid_u() + 0.07, v = chart.domain.mid_v() - 0.05;
        GeometryJets G = geometry_jets(chart, u, v);
        PointGeometry pg = extract_point_geometry(G);
        Vec4 psi = value(G.psi);
        auto gh2 = gradient_jet(G, G.H2);
        for (int i = 0; i < 4; ++i) {
            Vec4 e{};
            e[i] = 1.0;
            double eN = inner(e, pg.N, chart.sf), epsi = inner(e, psi, chart.sf);
            double got = L1(coord_field(chart, e, false), chart, u, v);
            double want = -2.0 * pg.eps * pg.H2 * eN + 2.0 * pg.eps * chart.sf.c * pg.H * epsi;
            CHECK(got == doctest::Approx(want).epsilon(1e-7).scale(1.0));

            double gotN = L1(coord_field(chart, e, true), chart, u, v);
            double etop[2];
            double ep[2] = {inner(e, value(G.psi_u), chart.sf),
                            inner(e, value(G.psi_v), chart.sf)};
            for (int k = 0; k < 2; ++k)
                etop[k] = G.ginv[k][0].value() * ep[0] + G.ginv[k][1].value() * ep[1];
            double gh2_etop = 0.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    gh2_etop += pg.g[a][b] * gh2[static_cast<size_t>(a)].value() * etop[b];
            double wantN = gh2_etop + 2.0 * pg.H * pg.H2 * eN - 2.0 * chart.sf.c * pg.H2 * epsi;
            CHECK(gotN == doctest::Approx(wantN).epsilon(1e-6).scale(1.0));
        }
    }
}

TEST_CASE("L1 of the position vector") {
    SUBCASE("totally geodesic slice: L1 psi = 0") {
        CatalogSurface cs = umbilical(de_sitter(), {1, 0, 0, 0}, 0.0);
        Vec4 r = L1_vector(cs.chart, 0.5, 0.2, VectorField::psi);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(r[i]) < 1e-10);
    }
    SUBCASE("umbilical tau=1: L1 psi = lambda psi + b") {
        CatalogSurface cs = umbilical(de_sitter(), {1, 0, 0, 0}, 1.0);
        double lambda = 1.0 / std::sqrt(2.0);
        Vec4 b{1.0 / std::sqrt(2.0), 0, 0, 0};
        for (auto [u, v] : kPts) {
            if (!cs.chart.domain.contains(u, v)) continue;
            Vec4 psi = cs.chart.point(u, v);
            Vec4 r = L1_vector(cs.chart, u, v, VectorField::psi);
            for (int i = 0; i < 4; ++i)
                CHECK(r[i] == doctest::Approx(lambda * psi[i] + b[i]).epsilon(1e-9).scale(1.0));
        }
    }
    SUBCASE("normal component is -2 H2 on any surface") {
        for (const CatalogSurface& cs : default_catalog()) {
            double u = cs.chart.domain.mid_u(), v = cs.chart.domain.mid_v();
            PointGeometry pg = point_geometry(cs.chart, u, v);
            Vec4 r = L1_vector(cs.chart, u, v, VectorField::psi);
            CHECK(inner(r, pg.N, cs.chart.sf) ==
                  doctest::Approx(-2.0 * pg.H2).epsilon(1e-8).scale(1.0));
        }
    }
}

TEST_CASE("L1 squared of the position vector") {
    SUBCASE("nested equals closed form on the whole catalog") {
        for (const CatalogSurface& cs : default_catalog()) {
            double u = cs.chart.domain.mid_u() + 0.03, v = cs.chart.domain.mid_v() - 0.02;
            L1SquaredResult r = L1_squared_psi(cs.chart, u, v);
            CHECK(r.mismatch < 1e-5);
        }
    }
    SUBCASE("complex circle: L1^2 psi = -(256/289) psi") {
        CatalogSurface cs = complex_circle(0.75, 1.25);
        for (auto [u, v] : kPts) {
            if (!cs.chart.domain.contains(u, v)) continue;
            Vec4 psi = cs.chart.point(u, v);
            L1SquaredResult r = L1_squared_psi(cs.chart, u, v);
            for (int i = 0; i < 4; ++i)
                CHECK(r.nested[i] ==
                      doctest::Approx(-(256.0 / 289.0) * psi[i]).epsilon(1e-7).scale(1.0));
        }
        Vec4 psi = cs.chart.point(0.5, 0.1);
        L1SquaredResult r = L1_squared_psi(cs.chart, 0.5, 0.1);
        for (int i = 0; i < 4; ++i)
            CHECK(r.nested[i] ==
                  doctest::Approx(-(256.0 / 289.0) * psi[i]).epsilon(1e-7).scale(1.0));
    }
    SUBCASE("B-scroll: L1^2 psi = 2HK L1 psi") {
        BScrollOptions opt;
        CatalogSurface cs = b_scroll(de_sitter(), opt); // H=1, K=2
        for (double u : {0.2, 0.6}) {
            Vec4 l1 = L1_vector(cs.chart, u, 0.25, VectorField::psi);
            L1SquaredResult r = L1_squared_psi(cs.chart, u, 0.25);
            for (int i = 0; i < 4; ++i)
                CHECK(r.nested[i] == doctest::Approx(4.0 * l1[i]).epsilon(1e-5).scale(1.0));
        }
    }
    SUBCASE("totally geodesic: L1^2 psi = 0") {
        CatalogSurface cs = umbilical(de_sitter(), {1, 0, 0, 0}, 0.0);
        L1SquaredResult r = L1_squared_psi(cs.chart, 0.5, 0.2);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(r.nested[i]) < 1e-9);
    }
}

TEST_CASE("product rule for L1") {
    CatalogSurface prod = standard_product(de_sitter(), 2, -1, 0.6);
    ScalarField one{[](double, double) { return Jet2::constant(1.0); }, "1"};
    ScalarField f = coord_field(prod.chart, {0, 1, 0, 0}, false);
    CHECK(product_rule_check(one, f, prod.chart, 0.4, 0.6) < 1e-12);
    CHECK(product_rule_check(f, f, prod.chart, 0.4, 0.6) < 1e-7);

    CatalogSurface scroll = b_scroll(de_sitter(), BScrollOptions{});
    ScalarField fs = coord_field(scroll.chart, {1, 0, 0, 0}, false);
    ScalarField gs = coord_field(scroll.chart, {0, 1, 0, 0}, true);
    CHECK(product_rule_check(fs, gs, scroll.chart, 0.5, 0.2) < 1e-6);
}

TEST_CASE("divergence of the Newton transformation vanishes") {
    CatalogSurface umb = umbilical(de_sitter(), {1, 0, 0, 0}, 1.0);
    TangentVector d0 = divergence_P1(umb.chart, 0.5, 0.2);
    CHECK(std::abs(d0.c[0]) < 1e-10);
    CHECK(std::abs(d0.c[1]) < 1e-10);

    CatalogSurface prod = standard_product(anti_de_sitter(), 2, -1, 2.0);
    for (auto [u, v] : kPts) {
        TangentVector d = divergence_P1(prod.chart, u, v);
        GeometryJets G = geometry_jets(prod.chart, u, v);
        PointGeometry pg = extract_point_geometry(G);
        CHECK(g_norm(pg.g, d) < 1e-7);
    }

    CatalogSurface scroll = b_scroll(de_sitter(), BScrollOptions{.a0 = 2.0, .kappa = kappa_smooth()});
    TangentVector ds = divergence_P1(scroll.chart, 0.5, 0.2);
    PointGeometry ps = point_geometry(scroll.chart, 0.5, 0.2);
    CHECK(g_norm(ps.g, ds) < 1e-6);
}

TEST_CASE("covariant derivative of S traces against grad H2") {
    for (const CatalogSurface& cs :
         {standard_product(de_sitter(), 2, 1, 0.6), generic_perturbed(de_sitter())}) {
        double u = cs.chart.domain.mid_u(), v = cs.chart.domain.mid_v();
        auto res = covariant_trace_residual(cs.chart, u, v);
        CHECK(res[0] < 1e-6);
        CHECK(res[1] < 1e-6);
    }
}
