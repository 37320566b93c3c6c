#include "lsl/finite_type.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <random>

namespace lsl {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::OneType: return "OneType";
        case Verdict::TwoType: return "TwoType";
        case Verdict::NullTwoType: return "NullTwoType";
        case Verdict::ComplexPair: return "ComplexPair";
        case Verdict::InfiniteType: return "InfiniteType";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

SamplePoints sample_points(const Chart& chart, int count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.02, 0.98);
    SamplePoints pts;
    pts.reserve(static_cast<size_t>(count));
    const Domain& d = chart.domain;
    for (int i = 0; i < count; ++i) {
        double fu = dist(rng), fv = dist(rng);
        pts.emplace_back(d.u0 + fu * (d.u1 - d.u0), d.v0 + fv * (d.v1 - d.v0));
    }
    return pts;
}

namespace {

double vec_norm(const Vec4& x) {
    return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
}

struct FitInputs {
    std::vector<L1Data> data;
};

struct ModelSolution {
    Eigen::VectorXd x;
    double cond = 0.0;
    double max_residual = 0.0;           // max over points, normalized
    std::vector<double> point_residuals; // per point
};

ModelSolution solve_two_type(const FitInputs& in) {
    const int n = static_cast<int>(in.data.size());
    Eigen::MatrixXd A(4 * n, 6);
    Eigen::VectorXd rhs(4 * n);
    for (int p = 0; p < n; ++p) {
        const L1Data& d = in.data[static_cast<size_t>(p)];
        for (int i = 0; i < 4; ++i) {
            int row = 4 * p + i;
            A(row, 0) = d.l1psi[i];
            A(row, 1) = -d.psi[i];
            for (int k = 0; k < 4; ++k) A(row, 2 + k) = (k == i) ? 1.0 : 0.0;
            rhs(row) = d.l1sq[i];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    ModelSolution s;
    s.x = svd.solve(rhs);
    double smin = svd.singularValues()(svd.singularValues().size() - 1);
    s.cond = smin > 0.0 ? svd.singularValues()(0) / smin : std::numeric_limits<double>::infinity();
    Eigen::VectorXd res = A * s.x - rhs;
    s.point_residuals.resize(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) {
        double rp = res.segment(4 * p, 4).norm();
        double scale = 1.0 + vec_norm(in.data[static_cast<size_t>(p)].l1sq);
        s.point_residuals[static_cast<size_t>(p)] = rp / scale;
        s.max_residual = std::max(s.max_residual, rp / scale);
    }
    return s;
}

ModelSolution solve_one_type(const FitInputs& in) {
    const int n = static_cast<int>(in.data.size());
    Eigen::MatrixXd A(4 * n, 5);
    Eigen::VectorXd rhs(4 * n);
    for (int p = 0; p < n; ++p) {
        const L1Data& d = in.data[static_cast<size_t>(p)];
        for (int i = 0; i < 4; ++i) {
            int row = 4 * p + i;
            A(row, 0) = d.psi[i];
            for (int k = 0; k < 4; ++k) A(row, 1 + k) = (k == i) ? 1.0 : 0.0;
            rhs(row) = d.l1psi[i];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    ModelSolution s;
    s.x = svd.solve(rhs);
    double smin = svd.singularValues()(svd.singularValues().size() - 1);
    s.cond = smin > 0.0 ? svd.singularValues()(0) / smin : std::numeric_limits<double>::infinity();
    Eigen::VectorXd res = A * s.x - rhs;
    s.point_residuals.resize(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) {
        double rp = res.segment(4 * p, 4).norm();
        double scale = 1.0 + vec_norm(in.data[static_cast<size_t>(p)].l1psi);
        s.point_residuals[static_cast<size_t>(p)] = rp / scale;
        s.max_residual = std::max(s.max_residual, rp / scale);
    }
    return s;
}

} // namespace

SpectralFit fit_spectral(const Chart& chart, const SamplePoints& samples, FitModel model,
                         const Tolerances& tol) {
    if (samples.size() < 3)
        throw Error("invalid-samples", "spectral fit needs at least 3 sample points");
    FitInputs in;
    in.data.reserve(samples.size());
    for (auto [u, v] : samples) in.data.push_back(l1_data(chart, u, v, tol));

    ModelSolution two = solve_two_type(in);
    ModelSolution one = solve_one_type(in);

    SpectralFit fit;
    fit.model = model;
    fit.sigma = two.x(0);
    fit.pi = two.x(1);
    fit.w = {two.x(2), two.x(3), two.x(4), two.x(5)};
    fit.lambda = one.x(0);
    fit.b = {one.x(1), one.x(2), one.x(3), one.x(4)};
    fit.two_type_residual = two.max_residual;
    fit.one_type_residual = one.max_residual;
    fit.residuals = model == FitModel::two_type ? two.point_residuals : one.point_residuals;
    fit.condition_number = model == FitModel::two_type ? two.cond : one.cond;
    fit.ill_posed = fit.condition_number > 1e10;

    // Roots of t^2 - sigma t + pi.
    double disc = fit.sigma * fit.sigma - 4.0 * fit.pi;
    if (disc >= 0.0) {
        double rd = std::sqrt(disc);
        fit.roots = {std::complex<double>(0.5 * (fit.sigma + rd), 0.0),
                     std::complex<double>(0.5 * (fit.sigma - rd), 0.0)};
        fit.roots_real = true;
    } else {
        double im = 0.5 * std::sqrt(-disc);
        fit.roots = {std::complex<double>(0.5 * fit.sigma, im),
                     std::complex<double>(0.5 * fit.sigma, -im)};
        fit.roots_real = false;
    }

    double vscale = tol.verdict * (1.0 + std::abs(fit.sigma) + std::abs(fit.pi));
    bool pi_zero = std::abs(fit.pi) < vscale;
    bool sigma_zero = std::abs(fit.sigma) < vscale;
    if (std::abs(fit.pi) > 1e-6) {
        fit.a_defined = true;
        fit.a = (1.0 / fit.pi) * fit.w;
    }

    double l1psi_scale = 0.0;
    for (const L1Data& d : in.data) l1psi_scale = std::max(l1psi_scale, vec_norm(d.l1psi));

    bool one_ok = one.max_residual < tol.fit_residual;
    bool two_ok = two.max_residual < tol.fit_residual;

    if (one_ok) {
        // L1 psi = lambda psi + b holds. A genuine 1-type needs lambda != 0
        // to absorb b; lambda = 0 with b = 0 is the null 1-type case, and
        // lambda = 0 with b != 0 admits no spectral decomposition at all.
        double lscale = tol.verdict * (1.0 + std::abs(fit.lambda));
        if (std::abs(fit.lambda) > lscale)
            fit.verdict = Verdict::OneType;
        else if (vec_norm(fit.b) < tol.verdict * (1.0 + l1psi_scale))
            fit.verdict = Verdict::OneType; // null 1-type, L1 psi = 0
        else
            fit.verdict = Verdict::InfiniteType;
    } else if (two_ok && two.cond <= 1e10) {
        if (pi_zero && sigma_zero) {
            fit.verdict = l1psi_scale > tol.verdict ? Verdict::InfiniteType : Verdict::Inconclusive;
        } else if (!fit.roots_real) {
            fit.verdict = Verdict::ComplexPair;
        } else if (pi_zero) {
            fit.verdict = Verdict::NullTwoType;
        } else {
            double l1 = fit.roots[0].real(), l2 = fit.roots[1].real();
            bool distinct = std::abs(l1 - l2) > 1e-6 * (1.0 + std::abs(l1) + std::abs(l2));
            fit.verdict = distinct ? Verdict::TwoType : Verdict::Inconclusive;
        }
    } else {
        fit.verdict = Verdict::Inconclusive;
    }
    return fit;
}

namespace {

TangentVector tan_rhs(const L1Data& d, int c) {
    // -3 eps grad(H2^2) + 4 eps c P1(grad H), with grad(H2^2) = 2 H2 grad H2.
    TangentVector r;
    for (int i = 0; i < 2; ++i) {
        double p1gh = d.P1[i][0] * d.gradH.c[0] + d.P1[i][1] * d.gradH.c[1];
        r.c[i] = -3.0 * d.eps * 2.0 * d.H2 * d.gradH2.c[i] + 4.0 * d.eps * c * p1gh;
    }
    return r;
}

} // namespace

double residual_tan(const Chart& chart, double u, double v, double pi, const Vec4& a,
                    const Tolerances& tol) {
    GeometryJets G = geometry_jets(chart, u, v, Jet2::default_order, tol);
    L1Data d = l1_data(chart, u, v, tol);
    // a^T in intrinsic coordinates = grad <a, psi>.
    TangentVector atop;
    double ap[2] = {inner(a, G.psi_u, chart.sf).value(), inner(a, G.psi_v, chart.sf).value()};
    for (int i = 0; i < 2; ++i)
        atop.c[i] = G.ginv[i][0].value() * ap[0] + G.ginv[i][1].value() * ap[1];
    TangentVector rhs = tan_rhs(d, chart.sf.c);
    TangentVector diff{{pi * atop.c[0] - rhs.c[0], pi * atop.c[1] - rhs.c[1]}};
    return g_norm(d.g, diff);
}

double residual_nor1(const Chart& chart, double u, double v, double sigma, double pi,
                     const Vec4& a, const Tolerances& tol) {
    L1Data d = l1_data(chart, u, v, tol);
    double c = chart.sf.c;
    double lhs = pi * inner(a, d.N, chart.sf);
    double rhs = 2.0 * sigma * d.H2 - 4.0 * d.eps * d.H * d.H2 * (c + d.eps * d.H2) - 2.0 * d.l1H2;
    return std::abs(lhs - rhs);
}

double residual_nor2(const Chart& chart, double u, double v, double sigma, double pi,
                     const Vec4& a, const Tolerances& tol) {
    L1Data d = l1_data(chart, u, v, tol);
    double c = chart.sf.c;
    double lhs = pi * inner(a, d.psi, chart.sf);
    double rhs = 4.0 * d.eps * d.H2 * d.H2 + 4.0 * c * d.H * d.H - 2.0 * d.eps * sigma * d.H +
                 c * pi + 2.0 * d.eps * d.l1H;
    return std::abs(lhs - rhs);
}

TheoremACheck theoremA_check(const Chart& chart, int nu, int nv, const SpectralFit& fit,
                             const Tolerances& tol) {
    TheoremACheck r;
    r.hypothesis_met =
        fit.verdict == Verdict::TwoType || fit.verdict == Verdict::NullTwoType;
    ScanResult h = constancy_scan(chart, ScanQuantity::H, nu, nv, tol);
    ScanResult h2 = constancy_scan(chart, ScanQuantity::H2, nu, nv, tol);
    ScanResult k1 = constancy_scan(chart, ScanQuantity::kappa1, nu, nv, tol);
    ScanResult k2 = constancy_scan(chart, ScanQuantity::kappa2, nu, nv, tol);
    r.h_const = h.constant;
    r.h2_const = h2.constant;
    r.principal_const = k1.constant && k2.constant;
    r.equivalent = (r.h_const == r.h2_const) && (r.h2_const == r.principal_const);
    return r;
}

} // namespace lsl
