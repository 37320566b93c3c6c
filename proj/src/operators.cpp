#include "lsl/operators.hpp"

#include <cmath>

namespace lsl {

std::array<Jet2, 2> gradient_jet(const GeometryJets& G, const Jet2& f) {
    Jet2 df[2] = {f.deriv_u(), f.deriv_v()};
    std::array<Jet2, 2> r;
    for (int i = 0; i < 2; ++i) r[static_cast<size_t>(i)] = G.ginv[i][0] * df[0] + G.ginv[i][1] * df[1];
    return r;
}

std::array<std::array<Jet2, 2>, 2> hessian_jet(const GeometryJets& G, const Jet2& f) {
    if (f.order() < 2) throw Error("order-exceeded", "hessian needs a jet of order >= 2");
    Jet2 df[2] = {f.deriv_u(), f.deriv_v()};
    Jet2 ddf[2][2] = {{df[0].deriv_u(), df[0].deriv_v()}, {df[1].deriv_u(), df[1].deriv_v()}};
    std::array<std::array<Jet2, 2>, 2> h;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Jet2 acc = Jet2::constant(0.0, std::max(0, f.order() - 2));
            for (int k = 0; k < 2; ++k) {
                Jet2 cov = ddf[k][j] - (G.Gamma[0][k][j] * df[0] + G.Gamma[1][k][j] * df[1]);
                acc += G.ginv[i][k] * cov;
            }
            h[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
        }
    return h;
}

Jet2 L1_jet(const GeometryJets& G, const Jet2& f) {
    auto h = hessian_jet(G, f);
    Jet2 r = Jet2::constant(0.0, std::max(0, f.order() - 2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r += G.P1[i][j] * h[static_cast<size_t>(j)][static_cast<size_t>(i)];
    return r;
}

Jet2 coordinate_field_jet(const GeometryJets& G, const Vec4& e, bool of_normal) {
    const Vec4J& w = of_normal ? G.normal : G.psi;
    return inner(e, w, G.sf);
}

TangentVector gradient(const ScalarField& f, const Chart& chart, double u, double v,
                       const Tolerances& tol) {
    GeometryJets G = geometry_jets(chart, u, v, Jet2::default_order, tol);
    auto g = gradient_jet(G, f.eval(u, v));
    return {{g[0].value(), g[1].value()}};
}

Mat2 hessian_operator(const ScalarField& f, const Chart& chart, double u, double v,
                      const Tolerances& tol) {
    GeometryJets G = geometry_jets(chart, u, v, Jet2::default_order, tol);
    auto h = hessian_jet(G, f.eval(u, v));
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = h[static_cast<size_t>(i)][static_cast<size_t>(j)].value();
    return r;
}

double L1(const ScalarField& f, const Chart& chart, double u, double v, const Tolerances& tol) {
    GeometryJets G = geometry_jets(chart, u, v, Jet2::default_order, tol);
    return L1_jet(G, f.eval(u, v)).value();
}

Vec4 L1_vector(const Chart& chart, double u, double v, VectorField which, const Tolerances& tol) {
    GeometryJets G = geometry_jets(chart, u, v, Jet2::default_order, tol);
    const Vec4J& w = which == VectorField::psi ? G.psi : G.normal;
    Vec4 r{};
    for (int i = 0; i < 4; ++i) r[i] = L1_jet(G, w[i]).value();
    return r;
}

L1Data l1_data(const Chart& chart, double u, double v, const Tolerances& tol) {
    GeometryJets G = geometry_jets(chart, u, v, Jet2::default_order, tol);
    L1Data d;
    d.psi = value(G.psi);
    d.N = value(G.normal);
    d.eps = G.eps;
    d.H = G.H.value();
    d.H2 = G.H2.value();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            d.g[i][j] = G.g[i][j].value();
            d.P1[i][j] = G.P1[i][j].value();
        }
    auto gh = gradient_jet(G, G.H);
    auto gh2 = gradient_jet(G, G.H2);
    d.gradH = {{gh[0].value(), gh[1].value()}};
    d.gradH2 = {{gh2[0].value(), gh2[1].value()}};
    d.l1H = L1_jet(G, G.H).value();
    d.l1H2 = L1_jet(G, G.H2).value();
    for (int i = 0; i < 4; ++i) {
        Jet2 l1i = L1_jet(G, G.psi[i]); // order-2 jet of the field p -> (L1 psi)_i
        d.l1psi[i] = l1i.value();
        d.l1sq[i] = L1_jet(G, l1i).value();
    }
    return d;
}

L1SquaredResult L1_squared_psi(const Chart& chart, double u, double v, const Tolerances& tol) {
    GeometryJets G = geometry_jets(chart, u, v, Jet2::default_order, tol);
    L1SquaredResult r;
    for (int i = 0; i < 4; ++i) {
        Jet2 l1i = L1_jet(G, G.psi[i]);
        r.nested[i] = L1_jet(G, l1i).value();
    }

    // Closed form: eps L1^2 psi = [4c P1(grad H) - 3 grad(H2^2)]
    //   + [-4 eps H H2 (c + eps H2) - 2 L1 H2] N
    //   + [4c H2^2 + 4 eps H^2 + 2c L1 H] psi.
    double c = G.sf.c, eps = G.eps;
    double H = G.H.value(), H2 = G.H2.value();
    auto gh = gradient_jet(G, G.H);
    auto gh2sq = gradient_jet(G, G.H2 * G.H2);
    double l1H = L1_jet(G, G.H).value();
    double l1H2 = L1_jet(G, G.H2).value();

    TangentVector tanpart;
    for (int i = 0; i < 2; ++i) {
        double p1gh = G.P1[i][0].value() * gh[0].value() + G.P1[i][1].value() * gh[1].value();
        tanpart.c[i] = 4.0 * c * p1gh - 3.0 * gh2sq[static_cast<size_t>(i)].value();
    }
    double ncoef = -4.0 * eps * H * H2 * (c + eps * H2) - 2.0 * l1H2;
    double pcoef = 4.0 * c * H2 * H2 + 4.0 * eps * H * H + 2.0 * c * l1H;

    Vec4 amb = push_forward(G, tanpart);
    Vec4 psi = value(G.psi), N = value(G.normal);
    for (int i = 0; i < 4; ++i)
        r.closed_form[i] = eps * (amb[i] + ncoef * N[i] + pcoef * psi[i]);

    double diff = 0.0, scale = 0.0;
    for (int i = 0; i < 4; ++i) {
        diff += (r.nested[i] - r.closed_form[i]) * (r.nested[i] - r.closed_form[i]);
        scale += r.nested[i] * r.nested[i];
    }
    r.mismatch = std::sqrt(diff) / (1.0 + std::sqrt(scale));
    if (r.mismatch > tol.l1sq_consistency)
        throw Error("identity-violation",
                    "nested and closed-form L1^2 psi disagree: " + std::to_string(r.mismatch));
    return r;
}

double product_rule_check(const ScalarField& f, const ScalarField& g, const Chart& chart,
                          double u, double v, const Tolerances& tol) {
    GeometryJets G = geometry_jets(chart, u, v, Jet2::default_order, tol);
    Jet2 fj = f.eval(u, v);
    Jet2 gj = g.eval(u, v);
    double lhs = L1_jet(G, fj * gj).value();
    double l1f = L1_jet(G, fj).value();
    double l1g = L1_jet(G, gj).value();
    auto gf = gradient_jet(G, fj);
    auto gg = gradient_jet(G, gj);
    // <P1 grad f, grad g> via the induced metric.
    double cross = 0.0;
    for (int i = 0; i < 2; ++i) {
        double p1gf = G.P1[i][0].value() * gf[0].value() + G.P1[i][1].value() * gf[1].value();
        for (int j = 0; j < 2; ++j) cross += G.g[i][j].value() * p1gf * gg[static_cast<size_t>(j)].value();
    }
    return std::abs(lhs - gj.value() * l1f - fj.value() * l1g - 2.0 * cross);
}

TangentVector divergence_P1(const Chart& chart, double u, double v, const Tolerances& tol) {
    GeometryJets G = geometry_jets(chart, u, v, Jet2::default_order, tol);
    // (div T)^i = g^{jk} [ d_j T^i_k + Gamma^i_{jl} T^l_k - Gamma^l_{jk} T^i_l ].
    Jet2 dP[2][2][2]; // dP[i][k][j] = d_j P^i_k
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            dP[i][k][0] = G.P1[i][k].deriv_u();
            dP[i][k][1] = G.P1[i][k].deriv_v();
        }
    TangentVector r;
    for (int i = 0; i < 2; ++i) {
        double acc = 0.0;
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                double term = dP[i][k][j].value();
                for (int l = 0; l < 2; ++l)
                    term += G.Gamma[i][j][l].value() * G.P1[l][k].value() -
                            G.Gamma[l][j][k].value() * G.P1[i][l].value();
                acc += G.ginv[j][k].value() * term;
            }
        r.c[i] = acc;
    }
    return r;
}

std::array<double, 2> covariant_trace_residual(const Chart& chart, double u, double v,
                                       const Tolerances& tol) {
    GeometryJets G = geometry_jets(chart, u, v, Jet2::default_order, tol);
    Jet2 dS[2][2][2]; // dS[i][j][x] = d_x S^i_j
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            dS[i][j][0] = G.S[i][j].deriv_u();
            dS[i][j][1] = G.S[i][j].deriv_v();
        }
    double dH2[2] = {G.H2.deriv_u().value(), G.H2.deriv_v().value()};
    std::array<double, 2> res{};
    for (int x = 0; x < 2; ++x) {
        // (nabla_X S)^i_j for X = d_x.
        double covS[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double t = dS[i][j][x].value();
                for (int l = 0; l < 2; ++l)
                    t += G.Gamma[i][x][l].value() * G.S[l][j].value() -
                         G.Gamma[l][x][j].value() * G.S[i][l].value();
                covS[i][j] = t;
            }
        double tr = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) tr += covS[i][j] * G.P1[j][i].value();
        // <grad H2, d_x> = dH2/dx.
        res[static_cast<size_t>(x)] = std::abs(tr + dH2[x]);
    }
    return res;
}

} // namespace lsl
