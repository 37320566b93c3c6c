#include "lsl/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace lsl {

namespace {

// 3x3 jet determinant of rows r0,r1,r2 with column `skip` removed from 4-wide rows.
Jet2 minor3(const Vec4J& r0, const Vec4J& r1, const Vec4J& r2, int skip) {
    int cols[3], n = 0;
    for (int i = 0; i < 4; ++i)
        if (i != skip) cols[n++] = i;
    const int a = cols[0], b = cols[1], c = cols[2];
    return r0[a] * (r1[b] * r2[c] - r1[c] * r2[b]) - r0[b] * (r1[a] * r2[c] - r1[c] * r2[a]) +
           r0[c] * (r1[a] * r2[b] - r1[b] * r2[a]);
}

} // namespace

GeometryJets geometry_jets(const Chart& chart, double u, double v, int order,
                           const Tolerances& tol) {
    GeometryJets G;
    G.sf = chart.sf;
    G.u = u;
    G.v = v;
    G.psi = chart.eval(u, v, order);

    if (std::abs(inner(value(G.psi), value(G.psi), G.sf) - G.sf.c) > tol.membership * 1e3)
        throw Error("off-space", "chart point violates the space-form constraint at (" +
                                     std::to_string(u) + "," + std::to_string(v) + ")");

    for (int i = 0; i < 4; ++i) {
        G.psi_u[i] = G.psi[i].deriv_u();
        G.psi_v[i] = G.psi[i].deriv_v();
    }

    // Rank of {psi, psi_u, psi_v} first: a rank drop also degenerates the
    // metric, and the more specific diagnosis should win.
    Vec4J w;
    for (int i = 0; i < 4; ++i) {
        Jet2 m = minor3(G.psi, G.psi_u, G.psi_v, i);
        double sign = ((3 + i) % 2 == 0) ? 1.0 : -1.0;
        w[i] = (metric_weight(i, G.sf) * sign) * m;
    }
    if (norm_flat(value(w)) < 1e-10)
        throw Error("not-immersed", "rank of {psi, psi_u, psi_v} < 3 at (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");

    G.g[0][0] = inner(G.psi_u, G.psi_u, G.sf);
    G.g[0][1] = inner(G.psi_u, G.psi_v, G.sf);
    G.g[1][0] = G.g[0][1];
    G.g[1][1] = inner(G.psi_v, G.psi_v, G.sf);
    G.detg = G.g[0][0] * G.g[1][1] - G.g[0][1] * G.g[0][1];

    if (std::abs(G.detg.value()) <= tol.degenerate_metric)
        throw Error("degenerate-metric", "|det g| <= " + std::to_string(tol.degenerate_metric) +
                                             " at (" + std::to_string(u) + "," +
                                             std::to_string(v) + ")");
    G.s = G.detg.value() < 0.0 ? 1 : 0;

    G.ginv[0][0] = G.g[1][1] / G.detg;
    G.ginv[0][1] = -(G.g[0][1] / G.detg);
    G.ginv[1][0] = G.ginv[0][1];
    G.ginv[1][1] = G.g[0][0] / G.detg;

    // Normal from the metric-adjoint of the 3x4 system <N,psi>=<N,psi_u>=<N,psi_v>=0:
    // w_i = eta_ii (-1)^(3+i) minor_i, so <w,x> = det[psi, psi_u, psi_v, x].
    Jet2 nn = inner(w, w, G.sf);
    if (std::abs(nn.value()) < tol.degenerate_metric)
        throw Error("degenerate-normal", "normal direction is null at (" + std::to_string(u) +
                                             "," + std::to_string(v) + ")");
    G.eps = nn.value() > 0.0 ? +1 : -1;
    Jet2 wnorm = abs_sqrt(nn);
    // det[psi, psi_u, psi_v, N] = <w,N>; keep it positive, then apply the
    // chart's orientation override.
    double flip = (G.eps > 0 ? 1.0 : -1.0) * chart.orientation;
    for (int i = 0; i < 4; ++i) G.normal[i] = flip * (w[i] / wnorm);

    // Shape operator S^i_j = g^{ik} <-d_j N, psi_k>.
    Vec4J dN[2];
    for (int i = 0; i < 4; ++i) {
        dN[0][i] = G.normal[i].deriv_u();
        dN[1][i] = G.normal[i].deriv_v();
    }
    Jet2 b[2][2]; // b[j][k] = <-d_j N, psi_k>
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) b[j][k] = -inner(dN[j], G.tangent(k), G.sf);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            G.S[i][j] = G.ginv[i][0] * b[j][0] + G.ginv[i][1] * b[j][1];

    G.H = (0.5 * G.eps) * (G.S[0][0] + G.S[1][1]);
    G.H2 = G.S[0][0] * G.S[1][1] - G.S[0][1] * G.S[1][0];
    G.K = static_cast<double>(G.sf.c) + static_cast<double>(G.eps) * G.H2;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            G.P1[i][j] = G.S[i][j];
            if (i == j) G.P1[i][j] = G.P1[i][j] - 2.0 * G.eps * G.H;
        }

    // Gamma^k_{ij} = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij).
    Jet2 dg[2][2][2]; // dg[i][j][k] = d_k g_ij
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            dg[i][j][0] = G.g[i][j].deriv_u();
            dg[i][j][1] = G.g[i][j].deriv_v();
        }
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Jet2 sum = Jet2::constant(0.0, dg[0][0][0].order());
                for (int l = 0; l < 2; ++l)
                    sum += G.ginv[k][l] * (dg[j][l][i] + dg[i][l][j] - dg[i][j][l]);
                G.Gamma[k][i][j] = 0.5 * sum;
            }

    return G;
}

PointGeometry extract_point_geometry(const GeometryJets& G) {
    PointGeometry pg;
    pg.sf = G.sf;
    pg.s = G.s;
    pg.eps = G.eps;
    pg.N = value(G.normal);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            pg.g[i][j] = G.g[i][j].value();
            pg.S[i][j] = G.S[i][j].value();
            pg.P1[i][j] = G.P1[i][j].value();
        }
    pg.H = G.H.value();
    pg.H2 = G.H2.value();
    pg.K = G.K.value();
    return pg;
}

PointGeometry point_geometry(const Chart& chart, double u, double v, const Tolerances& tol) {
    return extract_point_geometry(geometry_jets(chart, u, v, Jet2::default_order, tol));
}

ShapeClass classify_shape(const PointGeometry& pg, double tol) {
    ShapeClass sc;
    double tr = mat2_trace(pg.S);
    double det = mat2_det(pg.S);
    double disc = tr * tr - 4.0 * det;
    double half = 0.5 * tr;
    double off = std::sqrt((pg.S[0][0] - half) * (pg.S[0][0] - half) +
                           pg.S[0][1] * pg.S[0][1] + pg.S[1][0] * pg.S[1][0] +
                           (pg.S[1][1] - half) * (pg.S[1][1] - half));
    if (disc > tol) {
        double r = std::sqrt(disc);
        sc.kind = ShapeClass::Kind::TypeI;
        sc.kappa1 = half + 0.5 * r;
        sc.kappa2 = half - 0.5 * r;
    } else if (disc < -tol) {
        sc.kind = ShapeClass::Kind::TypeII;
        sc.kappa = half;
        sc.b = 0.5 * std::sqrt(-disc);
        sc.anomaly = pg.sf.c == +1; // type II should not occur in S^3_1
    } else if (off > tol) {
        sc.kind = ShapeClass::Kind::TypeIII;
        sc.kappa = half;
    } else {
        sc.kind = ShapeClass::Kind::TypeI; // umbilic
        sc.kappa1 = sc.kappa2 = half;
    }
    return sc;
}

Mat2 shape_in_frame(const PointGeometry& pg, const Mat2& basis) {
    double det = mat2_det(basis);
    if (std::abs(det) < 1e-14) throw Error("invalid-basis", "basis vectors are dependent");
    Mat2 inv = {{{basis[1][1] / det, -basis[0][1] / det}, {-basis[1][0] / det, basis[0][0] / det}}};
    return mat2_mul(inv, mat2_mul(pg.S, basis));
}

std::array<Mat2, 2> christoffel(const Chart& chart, double u, double v, const Tolerances& tol) {
    GeometryJets G = geometry_jets(chart, u, v, Jet2::default_order, tol);
    std::array<Mat2, 2> r{};
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r[static_cast<size_t>(k)][i][j] = G.Gamma[k][i][j].value();
    return r;
}

double intrinsic_curvature(const GeometryJets& G) {
    // R(d_u, d_v) d_v contracted back with d_u, over det g.
    double R[2];
    for (int l = 0; l < 2; ++l) {
        double d1 = G.Gamma[l][1][1].deriv_u().value();
        double d2 = G.Gamma[l][0][1].deriv_v().value();
        double quad = 0.0;
        for (int m = 0; m < 2; ++m)
            quad += G.Gamma[l][0][m].value() * G.Gamma[m][1][1].value() -
                    G.Gamma[l][1][m].value() * G.Gamma[m][0][1].value();
        R[l] = d1 - d2 + quad;
    }
    double num = G.g[0][0].value() * R[0] + G.g[0][1].value() * R[1];
    return num / G.detg.value();
}

ScanResult constancy_scan(const Chart& chart, ScanQuantity q, int nu, int nv,
                          const Tolerances& tol) {
    if (nu < 3 || nv < 3) throw Error("invalid-grid", "constancy scan needs at least 3x3");
    ScanResult r;
    double lo = 0.0, hi = 0.0, sum = 0.0;
    int count = 0;
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            double u = chart.domain.u0 + (chart.domain.u1 - chart.domain.u0) * i / (nu - 1);
            double v = chart.domain.v0 + (chart.domain.v1 - chart.domain.v0) * j / (nv - 1);
            PointGeometry pg;
            try {
                pg = point_geometry(chart, u, v, tol);
            } catch (const Error& e) {
                throw Error(e.code(), std::string(e.what()) + " [scan grid (" +
                                          std::to_string(i) + "," + std::to_string(j) + ")]");
            }
            double val = 0.0;
            switch (q) {
                case ScanQuantity::H: val = pg.H; break;
                case ScanQuantity::H2: val = pg.H2; break;
                case ScanQuantity::K: val = pg.K; break;
                case ScanQuantity::kappa1:
                case ScanQuantity::kappa2: {
                    ShapeClass sc = classify_shape(pg, tol.shape_class);
                    if (sc.kind == ShapeClass::Kind::TypeI)
                        val = q == ScanQuantity::kappa1 ? sc.kappa1 : sc.kappa2;
                    else {
                        val = sc.kappa; // real part for II, repeated root for III
                        r.saw_non_diagonalizable = true;
                    }
                    break;
                }
            }
            if (count == 0) lo = hi = val;
            lo = std::min(lo, val);
            hi = std::max(hi, val);
            sum += val;
            ++count;
        }
    r.mean = sum / count;
    r.spread = hi - lo;
    r.constant = r.spread <= tol.constancy * (1.0 + std::abs(r.mean));
    return r;
}

} // namespace lsl
