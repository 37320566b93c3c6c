#pragma once

#include <array>

#include "lsl/geometry.hpp"

namespace lsl {

/// Tangent vector in the coordinate frame {psi_u, psi_v}.
struct TangentVector {
    double c[2] = {0.0, 0.0};
};

/// g-inner product of two tangent vectors at a point.
inline double g_inner(const Mat2& g, const TangentVector& x, const TangentVector& y) {
    double s = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += g[i][j] * x.c[i] * y.c[j];
    return s;
}

inline double g_norm(const Mat2& g, const TangentVector& x) {
    return std::sqrt(std::abs(g_inner(g, x, x)));
}

/// Push a tangent vector to ambient coordinates: X^1 psi_u + X^2 psi_v.
inline Vec4 push_forward(const GeometryJets& G, const TangentVector& x) {
    Vec4 r{};
    for (int i = 0; i < 4; ++i)
        r[i] = x.c[0] * G.psi_u[i].value() + x.c[1] * G.psi_v[i].value();
    return r;
}

// ---- jet-level operators; each consumes derivative orders of the field ----

/// grad f = g^{ij} d_j f d_i; components as jets one order below f.
std::array<Jet2, 2> gradient_jet(const GeometryJets& G, const Jet2& f);

/// Hessian operator (nabla^2 f)^i_j = g^{ik}(d_k d_j f - Gamma^l_{kj} d_l f).
std::array<std::array<Jet2, 2>, 2> hessian_jet(const GeometryJets& G, const Jet2& f);

/// L1 f = tr(P1 nabla^2 f), two orders below f.
Jet2 L1_jet(const GeometryJets& G, const Jet2& f);

// ---- value-level wrappers matching the operation table ----

TangentVector gradient(const ScalarField& f, const Chart& chart, double u, double v,
                       const Tolerances& tol = Tolerances{});

Mat2 hessian_operator(const ScalarField& f, const Chart& chart, double u, double v,
                      const Tolerances& tol = Tolerances{});

double L1(const ScalarField& f, const Chart& chart, double u, double v,
          const Tolerances& tol = Tolerances{});

enum class VectorField { psi, normal };

/// Componentwise L1 of the position vector or the normal via closed forms.
Vec4 L1_vector(const Chart& chart, double u, double v, VectorField which,
               const Tolerances& tol = Tolerances{});

struct L1SquaredResult {
    Vec4 nested;      // L1 applied to the jet of p -> L1 psi(p)
    Vec4 closed_form; // assembled from H, H2, their gradients, L1H, L1H2, P1
    double mismatch;  // ||nested - closed|| / (1 + ||nested||)
};

/// Computes L1^2 psi both ways and checks them against each other. Throws
/// identity-violation if the two routes disagree beyond tolerance.
L1SquaredResult L1_squared_psi(const Chart& chart, double u, double v,
                               const Tolerances& tol = Tolerances{});

/// |L1(fg) - g L1 f - f L1 g - 2 <P1 grad f, grad g>|.
double product_rule_check(const ScalarField& f, const ScalarField& g, const Chart& chart,
                          double u, double v, const Tolerances& tol = Tolerances{});

/// div(P1), which the Codazzi equation forces to vanish.
TangentVector divergence_P1(const Chart& chart, double u, double v,
                            const Tolerances& tol = Tolerances{});

/// Residual of tr(nabla_X S o P1) + <grad H2, X> for X = d_u, d_v.
std::array<double, 2> covariant_trace_residual(const Chart& chart, double u, double v,
                                               const Tolerances& tol = Tolerances{});

// ---- pieces reused by the finite-type module ----

/// Values of L1 psi, L1^2 psi (nested route) and related scalars at a point.
struct L1Data {
    Vec4 psi{};
    Vec4 l1psi{};
    Vec4 l1sq{};
    Vec4 N{};
    int eps = +1;
    double H = 0.0, H2 = 0.0;
    double l1H = 0.0, l1H2 = 0.0;
    TangentVector gradH, gradH2;
    Mat2 g{}, P1{};
};

L1Data l1_data(const Chart& chart, double u, double v, const Tolerances& tol = Tolerances{});

/// Helper: the scalar field <e, psi> or <e, N> as a jet at (u,v).
Jet2 coordinate_field_jet(const GeometryJets& G, const Vec4& e, bool of_normal);

} // namespace lsl
