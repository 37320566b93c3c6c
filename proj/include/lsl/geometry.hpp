#pragma once

#include <array>
#include <string>

#include "lsl/ambient.hpp"
#include "lsl/chart.hpp"
#include "lsl/tolerances.hpp"

namespace lsl {

using Mat2 = std::array<std::array<double, 2>, 2>;

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

inline double mat2_trace(const Mat2& a) { return a[0][0] + a[1][1]; }
inline double mat2_det(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

/// Every jet the pipeline needs at one parameter point. Orders decrease as
/// derivatives are consumed: psi carries order n, the metric and normal n-1,
/// the shape operator and Christoffel symbols n-2.
struct GeometryJets {
    SpaceForm sf = de_sitter();
    double u = 0.0, v = 0.0;

    Vec4J psi;
    Vec4J psi_u, psi_v;
    Jet2 g[2][2];
    Jet2 detg;
    Jet2 ginv[2][2];
    Vec4J normal;
    int eps = +1;
    int s = 0; // 1 when the induced metric is Lorentzian

    Jet2 S[2][2];
    Jet2 H, H2, K;
    Jet2 P1[2][2];
    Jet2 Gamma[2][2][2]; // Gamma[k][i][j]

    const Vec4J& tangent(int i) const { return i == 0 ? psi_u : psi_v; }
};

/// First and second order invariants at a point, as plain numbers.
struct PointGeometry {
    SpaceForm sf = de_sitter();
    Mat2 g{};
    int s = 0;
    int eps = +1;
    Vec4 N{};
    Mat2 S{};
    double H = 0.0, H2 = 0.0, K = 0.0;
    Mat2 P1{};
};

struct ShapeClass {
    enum class Kind { TypeI, TypeII, TypeIII };
    Kind kind = Kind::TypeI;
    double kappa1 = 0.0, kappa2 = 0.0; // type I (kappa1 >= kappa2)
    double kappa = 0.0, b = 0.0;       // type II (b > 0) / type III (kappa)
    bool anomaly = false;              // type II reported with c = +1
};

GeometryJets geometry_jets(const Chart& chart, double u, double v,
                           int order = Jet2::default_order,
                           const Tolerances& tol = Tolerances{});

PointGeometry point_geometry(const Chart& chart, double u, double v,
                             const Tolerances& tol = Tolerances{});

PointGeometry extract_point_geometry(const GeometryJets& G);

ShapeClass classify_shape(const PointGeometry& pg, double tol = 1e-7);

/// Matrix of S after the change of basis given by the columns of `basis`.
Mat2 shape_in_frame(const PointGeometry& pg, const Mat2& basis);

/// Christoffel symbols Gamma^k_{ij} of the induced metric, as values.
std::array<Mat2, 2> christoffel(const Chart& chart, double u, double v,
                                const Tolerances& tol = Tolerances{});

/// Intrinsic Gauss curvature from the metric jets alone (curvature tensor of
/// the Levi-Civita connection); independent of the shape operator route.
double intrinsic_curvature(const GeometryJets& G);

enum class ScanQuantity { H, H2, K, kappa1, kappa2 };

struct ScanResult {
    bool constant = false;
    double mean = 0.0;
    double spread = 0.0;
    bool saw_non_diagonalizable = false; // any type II/III point in the grid
};

ScanResult constancy_scan(const Chart& chart, ScanQuantity q, int nu, int nv,
                          const Tolerances& tol = Tolerances{});

} // namespace lsl
