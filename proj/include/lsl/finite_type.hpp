#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "lsl/operators.hpp"

namespace lsl {

enum class Verdict { OneType, TwoType, NullTwoType, ComplexPair, InfiniteType, Inconclusive };

std::string to_string(Verdict v);

enum class FitModel { two_type, one_type };

/// Result of fitting the spectral model L1^2 psi = sigma L1 psi - pi (psi - a)
/// (two_type) or L1 psi = lambda psi + b (one_type) over sample points.
struct SpectralFit {
    FitModel model = FitModel::two_type;

    // two-type parameters
    double sigma = 0.0; // lambda1 + lambda2
    double pi = 0.0;    // lambda1 * lambda2
    Vec4 w{};           // lambda1 lambda2 a

    // one-type parameters
    double lambda = 0.0;
    Vec4 b{};

    std::vector<double> residuals; // per sample point, scale-free
    double two_type_residual = 0.0;
    double one_type_residual = 0.0;
    double condition_number = 0.0;
    bool ill_posed = false;

    std::array<std::complex<double>, 2> roots{};
    bool roots_real = false;

    bool a_defined = false;
    Vec4 a{};

    Verdict verdict = Verdict::Inconclusive;
};

using SamplePoints = std::vector<std::pair<double, double>>;

SpectralFit fit_spectral(const Chart& chart, const SamplePoints& samples, FitModel model,
                         const Tolerances& tol = Tolerances{});

/// Seeded uniform sample points in the chart domain (slightly inset so jets
/// never sit on the boundary).
SamplePoints sample_points(const Chart& chart, int count, unsigned long long seed);

/// ||pi a^T - (-3 eps grad(H2^2) + 4 eps c P1(grad H))||_g
double residual_tan(const Chart& chart, double u, double v, double pi, const Vec4& a,
                    const Tolerances& tol = Tolerances{});

/// |pi <a,N> - (2 sigma H2 - 4 eps H H2 (c + eps H2) - 2 L1 H2)|
double residual_nor1(const Chart& chart, double u, double v, double sigma, double pi,
                     const Vec4& a, const Tolerances& tol = Tolerances{});

/// |pi <a,psi> - (4 eps H2^2 + 4c H^2 - 2 eps sigma H + c pi + 2 eps L1 H)|
double residual_nor2(const Chart& chart, double u, double v, double sigma, double pi,
                     const Vec4& a, const Tolerances& tol = Tolerances{});

struct TheoremACheck {
    bool hypothesis_met = false; // fit verdict TwoType or NullTwoType
    bool h_const = false;
    bool h2_const = false;
    bool principal_const = false;
    bool equivalent = false;
};

TheoremACheck theoremA_check(const Chart& chart, int nu, int nv, const SpectralFit& fit,
                             const Tolerances& tol = Tolerances{});

} // namespace lsl
