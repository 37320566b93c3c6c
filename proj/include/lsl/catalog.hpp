#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsl/finite_type.hpp"
#include "lsl/geometry.hpp"

namespace lsl {

/// Smooth curvature profile kappa(s) for B-scrolls, supplied with its
/// derivatives: eval(s, k) = kappa^(k)(s) for k = 0..3.
struct KappaFn {
    std::function<double(double, int)> eval;
    std::string label;
};

KappaFn kappa_const(double k);
KappaFn kappa_smooth(); // 1 + s^2/4, nonvanishing

/// Closed-form values a reference surface is expected to reproduce.
struct ExpectedInvariants {
    std::optional<double> H, H2, K;
    std::optional<ShapeClass> shape;
    std::optional<Mat2> S_coord; // shape operator in the coordinate frame
    std::optional<KappaFn> S_coord_kappa; // b-scroll: S_coord depends on s through kappa

    std::optional<double> lambda; // one-type eigenvalue
    std::optional<Vec4> b;        // one-type constant vector
    std::optional<double> lambda1, lambda2; // two-type eigenvalues
    std::optional<double> sigma;  // expected lambda1+lambda2 (b-scroll: 2HK)
    std::optional<double> pi;     // expected lambda1*lambda2

    Verdict verdict = Verdict::Inconclusive;
    bool h_constant = true;
};

struct CatalogSurface {
    Chart chart;
    ExpectedInvariants expected;
    std::string provenance;
    double measured_rho_r2 = 0.0; // products: value of <D psi, psi> on the chart
};

/// Totally umbilical slice M(tau) = {x : <a,x> = tau}. Supports axis vectors
/// a = +-e_i and the null vector a = (1,0,0,1).
CatalogSurface umbilical(const SpaceForm& sf, const Vec4& a, double tau);

/// Standard pseudo-Riemannian product, the quadric slice picked by the delta
/// flag (coordinate index 2, 3 or 4 paired with x1), level sign rho and
/// radius r. The constructor solves the factor radii from the membership and
/// level-set constraints and reports the measured level value.
CatalogSurface standard_product(const SpaceForm& sf, int delta_index, int rho, double r);

/// Complex circle of radius k = a + b i in H^3_1; requires a^2 - b^2 = -1, ab != 0.
CatalogSurface complex_circle(double a, double b);

struct BScrollOptions {
    double a0 = 1.0;
    KappaFn kappa = kappa_const(1.0);
    double s0 = 0.0, s1 = 1.0;
    double step = 1e-3;
    std::optional<std::array<Vec4, 4>> frame0; // gamma, A, B, C; default per c
};

/// B-scroll psi(s,u) = gamma(s) + u B(s) over a null curve with Cartan frame,
/// integrated from the closed frame ODE with RK4.
CatalogSurface b_scroll(const SpaceForm& sf, const BScrollOptions& opt);

/// Deliberately non-isoparametric chart for negative tests.
CatalogSurface generic_perturbed(const SpaceForm& sf);

/// Build a catalog surface from CLI-style name and key=value parameters.
CatalogSurface make_surface(const std::string& name,
                            const std::map<std::string, std::string>& params,
                            const SpaceForm& sf);

std::vector<std::string> catalog_names();

/// The default verification fleet: one surface per family plus variants, used
/// by `verify --surface all` and the acceptance suite.
std::vector<CatalogSurface> default_catalog();

} // namespace lsl
