#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lsl/ambient.hpp"
#include "lsl/catalog.hpp"
#include "lsl/geometry.hpp"

using namespace lsl;

TEST_CASE("space form construction") {
    CHECK(de_sitter().c == 1);
    CHECK(de_sitter().index() == 1);
    CHECK(anti_de_sitter().c == -1);
    CHECK(anti_de_sitter().index() == 2);
    CHECK_THROWS_WITH_AS(SpaceForm(0), doctest::Contains("invalid-space-form"), Error);
    CHECK_THROWS_WITH_AS(SpaceForm(2), doctest::Contains("invalid-space-form"), Error);
}

TEST_CASE("indefinite inner product signatures") {
    Vec4 e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e3{0, 0, 1, 0}, e4{0, 0, 0, 1};
    SpaceForm ds = de_sitter(), ads = anti_de_sitter();
    CHECK(inner(e1, e1, ds) == -1.0);
    CHECK(inner(e2, e2, ds) == 1.0);
    CHECK(inner(e3, e3, ds) == 1.0);
    CHECK(inner(e4, e4, ds) == 1.0);
    CHECK(inner(e2, e2, ads) == -1.0);
    CHECK(inner(e1, e2, ads) == 0.0);
    CHECK(metric_weight(0, ds) == -1.0);
    CHECK(metric_weight(1, ads) == -1.0);
    CHECK(metric_weight(1, ds) == 1.0);
    CHECK(metric_weight(3, ads) == 1.0);

    // bilinearity spot check
    Vec4 x{0.5, -1.0, 2.0, 0.25}, y{1.5, 0.5, -0.5, 2.0};
    CHECK(inner(x, y, ds) ==
          doctest::Approx(-0.5 * 1.5 + (-1.0) * 0.5 + 2.0 * (-0.5) + 0.25 * 2.0));
}

TEST_CASE("membership test") {
    SpaceForm ds = de_sitter();
    CHECK(on_space({0, 1, 0, 0}, ds));
    CHECK(on_space({0, 0, std::sqrt(0.5), std::sqrt(0.5)}, ds));
    CHECK_FALSE(on_space({0, 2, 0, 0}, ds));
    SpaceForm ads = anti_de_sitter();
    CHECK(on_space({1, 0, 0, 0}, ads));
    CHECK(on_space({std::cosh(0.3), 0, std::sinh(0.3), 0}, ads));
    CHECK_FALSE(on_space({0, 0, 1, 0}, ads));
}

TEST_CASE("tangential component splits e against a real frame") {
    // frame from a catalog surface at an interior point
    CatalogSurface cs = standard_product(de_sitter(), 2, -1, 0.6);
    PointGeometry pg = point_geometry(cs.chart, 0.4, 0.7);
    Vec4 psi = cs.chart.point(0.4, 0.7);
    SpaceForm sf = cs.chart.sf;

    for (int i = 0; i < 4; ++i) {
        Vec4 e{};
        e[i] = 1.0;
        Vec4 t = tangential_component(e, psi, pg.N, pg.eps, sf);
        // reconstruction: e = t + eps<e,N>N + c<e,psi>psi
        Vec4 back = t + (pg.eps * inner(e, pg.N, sf)) * pg.N +
                    (sf.c * inner(e, psi, sf)) * psi;
        for (int k = 0; k < 4; ++k) CHECK(back[k] == doctest::Approx(e[k]).epsilon(1e-10));
        // t is orthogonal to both N and psi
        CHECK(std::abs(inner(t, pg.N, sf)) < 1e-10);
        CHECK(std::abs(inner(t, psi, sf)) < 1e-10);
    }
}

TEST_CASE("tangential component rejects inconsistent frames") {
    SpaceForm ds = de_sitter();
    Vec4 psi{0, 1, 0, 0}, N{0, 0, 1, 0}, e{1, 0, 0, 0};
    CHECK_THROWS_WITH_AS(tangential_component(e, Vec4{0, 2, 0, 0}, N, 1, ds),
                         doctest::Contains("inconsistent-frame"), Error);
    CHECK_THROWS_WITH_AS(tangential_component(e, psi, Vec4{0, 0, 2, 0}, 1, ds),
                         doctest::Contains("inconsistent-frame"), Error);
    CHECK_THROWS_WITH_AS(tangential_component(e, psi, Vec4{0, 1, 0, 0}, 1, ds),
                         doctest::Contains("inconsistent-frame"), Error);
}
