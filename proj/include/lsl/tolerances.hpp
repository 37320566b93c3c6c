#pragma once

#include <string>

#include "lsl/errors.hpp"

namespace lsl {

/// Central numeric thresholds. Defaults are the contract values; the CLI can
/// override individual entries with --tol NAME=value.
struct Tolerances {
    double membership = 1e-9;        // |<psi,psi> - c|
    double degenerate_metric = 1e-8; // |det g| floor
    double shape_class = 1e-7;       // discriminant threshold for type I/II/III
    double identity = 1e-7;          // gradient/hessian/L1 closed-form residuals
    double trace_identity = 1e-9;    // Newton traces, Cayley-Hamilton, K = c + eps H2
    double div_p1 = 1e-6;            // div(P1) and the covariant trace identity
    double l1sq_consistency = 1e-5;  // nested vs closed-form L1^2 psi
    double fit_residual = 1e-6;      // normalized least-squares residual gate
    double verdict = 1e-6;           // "~ 0" scale for sigma/pi, per unit of (1+|sigma|+|pi|)
    double constancy = 1e-7;         // spread <= constancy*(1+|mean|)
    double frame_drift = 1e-8;       // B-scroll conservation along s
    double fd_cross_check = 1e-6;    // jets vs central differences
    double gauss_eq = 1e-6;          // Brioschi vs c + eps H2

    double& by_name(const std::string& name);
};

inline double& Tolerances::by_name(const std::string& name) {
    static const std::string known =
        "membership degenerate_metric shape_class identity trace_identity div_p1 "
        "l1sq_consistency fit_residual verdict constancy frame_drift fd_cross_check gauss_eq";
    if (name == "membership") return membership;
    if (name == "degenerate_metric") return degenerate_metric;
    if (name == "shape_class") return shape_class;
    if (name == "identity") return identity;
    if (name == "trace_identity") return trace_identity;
    if (name == "div_p1") return div_p1;
    if (name == "l1sq_consistency") return l1sq_consistency;
    if (name == "fit_residual") return fit_residual;
    if (name == "verdict") return verdict;
    if (name == "constancy") return constancy;
    if (name == "frame_drift") return frame_drift;
    if (name == "fd_cross_check") return fd_cross_check;
    if (name == "gauss_eq") return gauss_eq;
    throw Error("unknown-tolerance", name + " (known: " + known + ")");
}

} // namespace lsl
