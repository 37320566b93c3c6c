#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "lsl/jet.hpp"

using namespace lsl;

namespace {

// Degree-4 reference polynomial with fixed coefficients and its exact partials.
double poly(double u, double v) {
    return 3.0 - 2.0 * u + 0.5 * v + 1.25 * u * u - 0.75 * u * v + 2.0 * v * v -
           0.3 * u * u * u + 0.8 * u * v * v + 0.1 * v * v * v * v;
}

Jet2 poly_jet(double u0, double v0, int order = 4) {
    Jet2 u = Jet2::variable(Jet2::Var::u, u0, order);
    Jet2 v = Jet2::variable(Jet2::Var::v, v0, order);
    return 3.0 - 2.0 * u + 0.5 * v + 1.25 * (u * u) - 0.75 * (u * v) + 2.0 * (v * v) -
           0.3 * (u * u * u) + 0.8 * (u * (v * v)) + 0.1 * ((v * v) * (v * v));
}

bool close_ulps(double a, double b, double ulps = 8.0) {
    if (a == b) return true;
    double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= ulps * scale * std::numeric_limits<double>::epsilon();
}

} // namespace

TEST_CASE("storage layout and factories") {
    CHECK(Jet2::ncoef(4) == 15);
    CHECK(Jet2::index(0, 0) == 0);
    CHECK(Jet2::index(1, 0) == 1);
    CHECK(Jet2::index(0, 1) == 2);
    CHECK(Jet2::index(2, 0) == 3);
    CHECK(Jet2::index(1, 1) == 4);
    CHECK(Jet2::index(0, 2) == 5);

    Jet2 c = Jet2::constant(7.5);
    CHECK(c.value() == 7.5);
    CHECK(c.coeff(1, 0) == 0.0);

    Jet2 u = Jet2::variable(Jet2::Var::u, 2.0);
    CHECK(u.value() == 2.0);
    CHECK(u.coeff(1, 0) == 1.0);
    CHECK(u.coeff(0, 1) == 0.0);

    CHECK_THROWS_WITH_AS(jet_variable(Jet2::Var::u, 0.0, 0), doctest::Contains("invalid-order"),
                         Error);
    CHECK_THROWS_WITH_AS(Jet2(-1), doctest::Contains("invalid-order"), Error);
}

TEST_CASE("polynomial exactness: coefficients and partials") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        double u0 = dist(rng), v0 = dist(rng);
        Jet2 p = poly_jet(u0, v0);
        CHECK(close_ulps(p.value(), poly(u0, v0)));
        // exact partials of the polynomial
        double pu = -2.0 + 2.5 * u0 - 0.75 * v0 - 0.9 * u0 * u0 + 0.8 * v0 * v0;
        double pv = 0.5 - 0.75 * u0 + 4.0 * v0 + 1.6 * u0 * v0 + 0.4 * v0 * v0 * v0;
        double puu = 2.5 - 1.8 * u0;
        double puv = -0.75 + 1.6 * v0;
        double pvv = 4.0 + 1.6 * u0 + 1.2 * v0 * v0;
        CHECK(close_ulps(p.partial(1, 0), pu));
        CHECK(close_ulps(p.partial(0, 1), pv));
        CHECK(close_ulps(p.partial(2, 0), puu));
        CHECK(close_ulps(p.partial(1, 1), puv));
        CHECK(close_ulps(p.partial(0, 2), pvv));
        CHECK(close_ulps(p.partial(0, 4), 0.1 * 24.0));
    }
}

TEST_CASE("derivative operators shift the grid") {
    Jet2 p = poly_jet(0.3, -0.4);
    Jet2 pu = p.deriv_u();
    CHECK(pu.order() == 3);
    CHECK(close_ulps(pu.value(), p.partial(1, 0)));
    CHECK(close_ulps(pu.partial(1, 1), p.partial(2, 1)));
    Jet2 pv = p.deriv_v();
    CHECK(close_ulps(pv.partial(0, 2), p.partial(0, 3)));
    CHECK_THROWS_AS(Jet2::constant(1.0, 0).deriv_u(), Error);
}

TEST_CASE("mixed-order arithmetic truncates to the smaller order") {
    Jet2 a = poly_jet(0.2, 0.1, 4);
    Jet2 b = poly_jet(0.2, 0.1, 2);
    CHECK((a + b).order() == 2);
    CHECK((a * b).order() == 2);
    CHECK((a / b).order() == 2);
    CHECK_THROWS_WITH_AS(b.truncated(3), doctest::Contains("order-exceeded"), Error);
    CHECK(a.truncated(2).order() == 2);
}

TEST_CASE("multiply then divide round-trips") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-1.5, 1.5);
    for (int trial = 0; trial < 30; ++trial) {
        double u0 = dist(rng), v0 = dist(rng);
        Jet2 x = poly_jet(u0, v0);
        Jet2 y = poly_jet(v0, u0) + 5.0; // keep away from zero
        Jet2 r = (x * y) / y;
        for (int d = 0; d <= 4; ++d)
            for (int bb = 0; bb <= d; ++bb)
                CHECK(std::abs(r.coeff(d - bb, bb) - x.coeff(d - bb, bb)) < 1e-12);
    }
}

TEST_CASE("division by a zero-valued jet fails") {
    Jet2 u = Jet2::variable(Jet2::Var::u, 0.0);
    CHECK_THROWS_WITH_AS(Jet2::constant(1.0) / u, doctest::Contains("singular-jet"), Error);
}

TEST_CASE("transcendental identities hold jet-wise") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        double u0 = dist(rng), v0 = dist(rng);
        Jet2 x = 0.7 * Jet2::variable(Jet2::Var::u, u0) +
                 0.3 * (Jet2::variable(Jet2::Var::v, v0) *
                        Jet2::variable(Jet2::Var::u, u0));
        Jet2 one_trig = sin(x) * sin(x) + cos(x) * cos(x);
        Jet2 one_hyp = cosh(x) * cosh(x) - sinh(x) * sinh(x);
        Jet2 one_exp = exp(x) * exp(-x);
        for (int d = 0; d <= 4; ++d)
            for (int bb = 0; bb <= d; ++bb) {
                double want = d == 0 ? 1.0 : 0.0;
                CHECK(std::abs(one_trig.coeff(d - bb, bb) - want) < 1e-13);
                CHECK(std::abs(one_hyp.coeff(d - bb, bb) - want) < 1e-12);
                CHECK(std::abs(one_exp.coeff(d - bb, bb) - want) < 1e-13);
            }
        Jet2 y = x + 2.5; // positive constant term
        Jet2 back = sqrt(y) * sqrt(y);
        for (int d = 0; d <= 4; ++d)
            for (int bb = 0; bb <= d; ++bb)
                CHECK(std::abs(back.coeff(d - bb, bb) - y.coeff(d - bb, bb)) < 1e-13);
    }
}

TEST_CASE("sqrt and abs_sqrt domain handling") {
    CHECK_THROWS_WITH_AS(sqrt(Jet2::constant(-1.0)), doctest::Contains("domain-error"), Error);
    CHECK_THROWS_WITH_AS(sqrt(Jet2::constant(0.0)), doctest::Contains("domain-error"), Error);
    CHECK_THROWS_WITH_AS(abs_sqrt(Jet2::variable(Jet2::Var::u, 0.0)),
                         doctest::Contains("domain-error"), Error);
    Jet2 neg = Jet2::variable(Jet2::Var::u, -4.0);
    Jet2 r = abs_sqrt(neg);
    CHECK(r.value() == doctest::Approx(2.0));
    // d/du sqrt(-u) = -1/(2 sqrt(-u)) = -0.25 at u=-4
    CHECK(r.partial(1, 0) == doctest::Approx(-0.25));
}

TEST_CASE("jets match central finite differences for a smooth function") {
    auto f = [](double u, double v) { return std::sin(u) * std::cosh(v) + std::exp(0.3 * u * v); };
    auto jf = [](double u0, double v0) {
        Jet2 u = Jet2::variable(Jet2::Var::u, u0);
        Jet2 v = Jet2::variable(Jet2::Var::v, v0);
        return sin(u) * cosh(v) + exp(0.3 * (u * v));
    };
    const double h = 1e-5;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        double u0 = dist(rng), v0 = dist(rng);
        Jet2 j = jf(u0, v0);
        double fd_u = (f(u0 + h, v0) - f(u0 - h, v0)) / (2 * h);
        double fd_v = (f(u0, v0 + h) - f(u0, v0 - h)) / (2 * h);
        double fd_uu = (f(u0 + h, v0) - 2 * f(u0, v0) + f(u0 - h, v0)) / (h * h);
        double fd_uv = (f(u0 + h, v0 + h) - f(u0 + h, v0 - h) - f(u0 - h, v0 + h) +
                        f(u0 - h, v0 - h)) /
                       (4 * h * h);
        CHECK(std::abs(j.partial(1, 0) - fd_u) < 1e-6);
        CHECK(std::abs(j.partial(0, 1) - fd_v) < 1e-6);
        CHECK(std::abs(j.partial(2, 0) - fd_uu) < 1e-5);
        // the 4-point cross stencil carries a little more rounding noise
        CHECK(std::abs(j.partial(1, 1) - fd_uv) < 5e-6);
    }
}

TEST_CASE("extract_partial and out-of-range access") {
    Jet2 p = poly_jet(0.5, 0.5);
    CHECK(extract_partial(p, 2, 0) == p.partial(2, 0));
    CHECK_THROWS_WITH_AS(p.coeff(3, 2), doctest::Contains("order-exceeded"), Error);
    CHECK_THROWS_WITH_AS(p.coeff(-1, 0), doctest::Contains("order-exceeded"), Error);
}
