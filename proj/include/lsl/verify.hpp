#pragma once

#include <string>
#include <vector>

#include "lsl/catalog.hpp"
#include "lsl/finite_type.hpp"

namespace lsl {

struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    int nu = 12, nv = 12;              // identity grid
    int fit_samples = 20;              // spectral fit sample count
    unsigned long long seed = 42;
    Tolerances tol;
};

/// Everything one surface run produces: the per-check residual table, a
/// geometry summary at the chart center, and the spectral fit.
struct VerifyOutcome {
    std::vector<CheckResult> checks;
    PointGeometry center;
    ShapeClass center_shape;
    SpectralFit fit;
    bool pass = false;

    const CheckResult* find(const std::string& name) const {
        for (const CheckResult& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/// Runs the full identity suite on a grid plus the spectral fit on seeded
/// sample points; every structural identity and every expected invariant of
/// the surface becomes one named check.
VerifyOutcome verify_surface(const CatalogSurface& surface, const VerifyOptions& opt);

} // namespace lsl
