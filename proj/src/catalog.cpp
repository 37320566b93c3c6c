#include "lsl/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lsl {

KappaFn kappa_const(double k) {
    return {[k](double, int d) { return d == 0 ? k : 0.0; }, "const:" + std::to_string(k)};
}

KappaFn kappa_smooth() {
    return {[](double s, int d) {
                switch (d) {
                    case 0: return 1.0 + 0.25 * s * s;
                    case 1: return 0.5 * s;
                    case 2: return 0.5;
                    default: return 0.0;
                }
            },
            "smooth"};
}

namespace {

// Align the pipeline normal (det > 0 convention) with the family's reference
// normal, so closed-form signs compare directly.
void fix_orientation(Chart& chart, const std::function<Vec4(double, double)>& normal_ref) {
    double u = chart.domain.mid_u(), v = chart.domain.mid_v();
    chart.orientation = +1;
    PointGeometry pg = point_geometry(chart, u, v);
    Vec4 nref = normal_ref(u, v);
    double dot = 0.0;
    for (int i = 0; i < 4; ++i) dot += pg.N[i] * nref[i];
    if (dot < 0.0) chart.orientation = -1;
}

} // namespace

CatalogSurface umbilical(const SpaceForm& sf, const Vec4& a, double tau) {
    const double c = sf.c;
    double aa = inner(a, a, sf);
    double disc = aa - c * tau * tau;
    if (std::abs(disc) < 1e-12)
        throw Error("degenerate", "<a,a> - c tau^2 = 0 for the umbilical slice");

    // Classify the hyperplane direction.
    int axis = -1;
    int nnz = 0;
    for (int i = 0; i < 4; ++i)
        if (a[i] != 0.0) {
            axis = i;
            ++nnz;
        }
    bool is_null = std::abs(aa) < 1e-12;

    Chart chart;
    chart.sf = sf;

    if (is_null) {
        if (!(nnz == 2 && a[1] == 0.0 && a[2] == 0.0 && a[0] == a[3] && a[0] != 0.0))
            throw Error("unsupported-direction",
                        "null slices are built from a = p(1,0,0,1); rotate the input");
        double m = tau / a[0]; // x4 - x1
        chart.map = [c, m](const Jet2& ju, const Jet2& jv) -> Vec4J {
            Jet2 q = (c - c * (ju * ju) - jv * jv) / m;
            return {0.5 * (q - m), ju, jv, 0.5 * (q + m)};
        };
        chart.domain = {-0.5, 0.5, -0.5, 0.5};
    } else {
        if (nnz != 1 || std::abs(std::abs(a[axis]) - 1.0) > 1e-12)
            throw Error("unsupported-direction",
                        "unit slices are built from axis vectors a = +-e_i");
        double eta_j = metric_weight(axis, sf);
        double xj = tau / (eta_j * a[axis]);
        double Q = c - eta_j * xj * xj;
        int slots[3], n = 0;
        for (int i = 0; i < 4; ++i)
            if (i != axis) slots[n++] = i;
        // Move negative-weight slots to the front.
        std::sort(slots, slots + 3, [&](int p, int q) {
            return metric_weight(p, sf) < metric_weight(q, sf);
        });
        int negs = 0;
        for (int i = 0; i < 3; ++i)
            if (metric_weight(slots[i], sf) < 0.0) ++negs;

        int s0 = slots[0], s1 = slots[1], s2 = slots[2], ax = axis;
        if (negs == 0) {
            if (Q <= 0.0) throw Error("empty-slice", "no real chart for this slice");
            double R = std::sqrt(Q);
            chart.map = [R, xj, s0, s1, s2, ax](const Jet2& ju, const Jet2& jv) -> Vec4J {
                Vec4J p;
                int order = ju.order();
                p[ax] = Jet2::constant(xj, order);
                p[s0] = R * (cos(ju) * cos(jv));
                p[s1] = R * (sin(ju) * cos(jv));
                p[s2] = R * sin(jv);
                return p;
            };
            chart.domain = {0.2, 1.3, -0.55, 0.55};
        } else if (negs == 1) {
            if (Q > 0.0) {
                double R = std::sqrt(Q);
                chart.map = [R, xj, s0, s1, s2, ax](const Jet2& ju, const Jet2& jv) -> Vec4J {
                    Vec4J p;
                    p[ax] = Jet2::constant(xj, ju.order());
                    p[s0] = R * sinh(ju);
                    p[s1] = R * (cosh(ju) * cos(jv));
                    p[s2] = R * (cosh(ju) * sin(jv));
                    return p;
                };
                chart.domain = {-0.6, 0.6, 0.1, 1.2};
            } else {
                double R = std::sqrt(-Q);
                chart.map = [R, xj, s0, s1, s2, ax](const Jet2& ju, const Jet2& jv) -> Vec4J {
                    Vec4J p;
                    p[ax] = Jet2::constant(xj, ju.order());
                    p[s0] = R * cosh(ju);
                    p[s1] = R * (sinh(ju) * cos(jv));
                    p[s2] = R * (sinh(ju) * sin(jv));
                    return p;
                };
                chart.domain = {0.35, 1.25, 0.0, 1.0};
            }
        } else { // two negative slots: Lorentzian hyperbolic plane
            if (Q >= 0.0) throw Error("empty-slice", "no real chart for this slice");
            double R = std::sqrt(-Q);
            chart.map = [R, xj, s0, s1, s2, ax](const Jet2& ju, const Jet2& jv) -> Vec4J {
                Vec4J p;
                p[ax] = Jet2::constant(xj, ju.order());
                p[s0] = R * (cos(ju) * cosh(jv));
                p[s1] = R * (sin(ju) * cosh(jv));
                p[s2] = R * sinh(jv);
                return p;
            };
            chart.domain = {0.1, 1.2, -0.55, 0.55};
        }
    }

    double delta = std::sqrt(std::abs(disc));
    int eps = disc > 0.0 ? +1 : -1;

    std::ostringstream label;
    label << "umbilical(c=" << sf.c << ", tau=" << tau << ", <a,a>=" << aa << ")";
    chart.label = label.str();

    fix_orientation(chart, [&, a, c, tau, delta](double u, double v) {
        Vec4 psi = chart.point(u, v);
        Vec4 n;
        for (int i = 0; i < 4; ++i) n[i] = (a[i] - c * tau * psi[i]) / delta;
        return n;
    });

    CatalogSurface cs;
    cs.chart = chart;
    cs.provenance = "totally umbilical slice of the space form by the hyperplane <a,x> = tau";
    ExpectedInvariants& e = cs.expected;
    e.H = eps * c * tau / delta;
    e.H2 = tau * tau / (delta * delta);
    e.K = c * aa / disc;
    ShapeClass sc;
    sc.kind = ShapeClass::Kind::TypeI;
    sc.kappa1 = sc.kappa2 = c * tau / delta; // umbilic: S = (c tau / delta) I
    e.shape = sc;
    double lam = (2.0 * tau / (delta * delta * delta)) * (eps * c * tau * tau + delta * delta);
    double bco = -(2.0 * eps * tau * tau / (delta * delta * delta));
    e.lambda = lam;
    e.b = bco * a;
    if (std::abs(tau) < 1e-14)
        e.verdict = Verdict::OneType; // null 1-type, L1 psi = 0
    else if (std::abs(eps * c * tau * tau + delta * delta) < 1e-12)
        e.verdict = Verdict::InfiniteType;
    else
        e.verdict = Verdict::OneType;
    return cs;
}

CatalogSurface standard_product(const SpaceForm& sf, int delta_index, int rho, double r) {
    const double c = sf.c;
    if (delta_index < 2 || delta_index > 4)
        throw Error("invalid-parameter", "delta index must be 2, 3 or 4");
    if (rho != 1 && rho != -1) throw Error("invalid-parameter", "rho must be +1 or -1");
    if (!(r > 0.0)) throw Error("invalid-parameter", "r must be positive");
    if (std::abs(rho - c * r * r) < 1e-12)
        throw Error("degenerate", "rho - c r^2 = 0 for the product slice");

    int j = delta_index - 1; // slot paired with x1
    int k = -1, l = -1;
    for (int i = 1; i < 4; ++i)
        if (i != j) (k < 0 ? k : l) = i;

    double wj = metric_weight(j, sf);
    double level = rho * r * r;       // <D psi, psi> on plane {0, j}
    double q2 = c - level;            // plane {k, l} quadric value
    double wk = metric_weight(k, sf); // l always has weight +1
    if (std::abs(q2) < 1e-12) throw Error("degenerate", "second factor radius vanishes");

    // factor 1 in slots (0, j)
    enum class Curve { circle, hyper_sinh_first, hyper_cosh_first };
    Curve c1;
    if (wj > 0.0) {
        c1 = rho > 0 ? Curve::hyper_sinh_first : Curve::hyper_cosh_first;
    } else {
        if (rho > 0) throw Error("empty-slice", "rho=+1 has no points in the (-,-) plane");
        c1 = Curve::circle; // x0 = r cos, xj = r sin
    }
    // factor 2 in slots (k, l)
    Curve c2;
    double R2;
    if (wk > 0.0) {
        if (q2 <= 0.0) throw Error("empty-slice", "second circle factor has negative radius^2");
        c2 = Curve::circle;
        R2 = std::sqrt(q2);
    } else {
        c2 = q2 > 0.0 ? Curve::hyper_sinh_first : Curve::hyper_cosh_first;
        R2 = std::sqrt(std::abs(q2));
    }

    auto place = [](Curve kind, double R, const Jet2& t, Jet2& first, Jet2& second) {
        switch (kind) {
            case Curve::circle:
                first = R * cos(t);
                second = R * sin(t);
                break;
            case Curve::hyper_sinh_first:
                first = R * sinh(t);
                second = R * cosh(t);
                break;
            case Curve::hyper_cosh_first:
                first = R * cosh(t);
                second = R * sinh(t);
                break;
        }
    };

    Chart chart;
    chart.sf = sf;
    chart.map = [=](const Jet2& ju, const Jet2& jv) -> Vec4J {
        Vec4J p;
        place(c1, r, ju, p[0], p[j]);
        place(c2, R2, jv, p[k], p[l]);
        return p;
    };
    chart.domain = {0.1, 1.2, 0.15, 1.25};
    std::ostringstream label;
    label << "product(c=" << sf.c << ", delta=" << delta_index << ", rho=" << rho << ", r=" << r
          << ")";
    chart.label = label.str();

    double denom = r * std::sqrt(std::abs(rho - c * r * r));
    int eps = (rho - c * r * r) > 0.0 ? +1 : -1;

    fix_orientation(chart, [&, j, c, level, denom](double u, double v) {
        Vec4 psi = chart.point(u, v);
        Vec4 n{};
        for (int i = 0; i < 4; ++i) {
            double d = (i == 0 || i == j) ? psi[i] : 0.0; // D psi
            n[i] = (d - c * level * psi[i]) / denom;
        }
        return n;
    });

    CatalogSurface cs;
    cs.chart = chart;
    cs.provenance = "standard pseudo-Riemannian product (quadric slice of the space form)";
    {
        Vec4 psi = chart.point(chart.domain.mid_u(), chart.domain.mid_v());
        Vec4 dpsi{};
        for (int i = 0; i < 4; ++i) dpsi[i] = (i == 0 || i == j) ? psi[i] : 0.0;
        cs.measured_rho_r2 = inner(dpsi, psi, sf);
    }

    ExpectedInvariants& e = cs.expected;
    double s11 = -(1.0 - rho * c * r * r) / denom;
    double s22 = rho * c * r * r / denom;
    e.S_coord = Mat2{{{s11, 0.0}, {0.0, s22}}};
    double H = 0.5 * eps * (s11 + s22);
    double H2 = s11 * s22;
    e.H = H;
    e.H2 = H2;
    e.K = c + eps * H2;
    ShapeClass sc;
    sc.kind = ShapeClass::Kind::TypeI;
    sc.kappa1 = std::max(s11, s22);
    sc.kappa2 = std::min(s11, s22);
    e.shape = sc;
    double lam1 = 2.0 * eps * H2 * (rho * c * r * r - 1.0) / denom + 2.0 * eps * c * H;
    double lam2 = 2.0 * eps * H2 * (rho * c * r * r) / denom + 2.0 * eps * c * H;
    e.lambda1 = lam1;
    e.lambda2 = lam2;
    e.sigma = lam1 + lam2;
    e.pi = lam1 * lam2;
    e.verdict = Verdict::TwoType;
    return cs;
}

CatalogSurface complex_circle(double a, double b) {
    if (std::abs(a * a - b * b + 1.0) > 1e-12 || a == 0.0 || b == 0.0)
        throw Error("invalid-complex-radius", "need a^2 - b^2 = -1 and ab != 0");
    SpaceForm sf = anti_de_sitter();
    Chart chart;
    chart.sf = sf;
    chart.map = [a, b](const Jet2& ju, const Jet2& jv) -> Vec4J {
        // z = u - iv; the sign of the imaginary coordinate picks the frame in
        // which the shape operator has +beta in the lower-left corner.
        Jet2 cu = cos(ju), su = sin(ju), ch = cosh(jv), sh = -sinh(jv);
        Jet2 rec = a * (cu * ch) + b * (su * sh);
        Jet2 imc = b * (cu * ch) - a * (su * sh);
        Jet2 res = a * (su * ch) - b * (cu * sh);
        Jet2 ims = b * (su * ch) + a * (cu * sh);
        // Negative-signature slots carry the imaginary parts so that
        // <psi,psi> = Re(k^2) = a^2 - b^2 = -1.
        return {imc, ims, rec, res};
    };
    chart.domain = {0.1, 1.1, -0.4, 0.4};
    std::ostringstream label;
    label << "complex-circle(a=" << a << ", b=" << b << ")";
    chart.label = label.str();

    double k2 = a * a + b * b;
    double alpha = 2.0 * a * b / k2;
    double beta = 1.0 / k2;

    // Orient so the coordinate-frame shape operator comes out with +beta in
    // the lower-left corner, the sign convention of the family.
    {
        PointGeometry pg = point_geometry(chart, chart.domain.mid_u(), chart.domain.mid_v());
        if (pg.S[1][0] * beta < 0.0) chart.orientation = -1;
    }

    CatalogSurface cs;
    cs.chart = chart;
    cs.provenance = "complex circle of radius a+bi (flat Lorentzian surface, type II shape operator)";
    ExpectedInvariants& e = cs.expected;
    e.H = alpha;
    e.H2 = alpha * alpha + beta * beta; // = 1 given a^2 - b^2 = -1
    e.K = 0.0;
    ShapeClass sc;
    sc.kind = ShapeClass::Kind::TypeII;
    sc.kappa = alpha;
    sc.b = beta;
    e.shape = sc;
    e.S_coord = Mat2{{{alpha, -beta}, {beta, alpha}}};
    e.sigma = 0.0;
    e.pi = 4.0 / (k2 * k2);
    e.verdict = Verdict::ComplexPair;
    return cs;
}

namespace {

struct FrameState {
    Vec4 g, A, B, C;

    FrameState operator+(const FrameState& o) const {
        return {g + o.g, A + o.A, B + o.B, C + o.C};
    }
    friend FrameState operator*(double s, const FrameState& f) {
        return {s * f.g, s * f.A, s * f.B, s * f.C};
    }
};

FrameState frame_rhs(const FrameState& y, double kappa, double c, double a0) {
    FrameState d;
    d.g = y.A;
    d.A = (-kappa) * y.C;
    d.B = c * y.g + (-a0) * y.C;
    d.C = (-a0) * y.A + (-kappa) * y.B;
    return d;
}

FrameState rk4_step(const FrameState& y, double s, double h, const KappaFn& kappa, double c,
                    double a0) {
    FrameState k1 = frame_rhs(y, kappa.eval(s, 0), c, a0);
    FrameState k2 = frame_rhs(y + 0.5 * h * k1, kappa.eval(s + 0.5 * h, 0), c, a0);
    FrameState k3 = frame_rhs(y + 0.5 * h * k2, kappa.eval(s + 0.5 * h, 0), c, a0);
    FrameState k4 = frame_rhs(y + h * k3, kappa.eval(s + h, 0), c, a0);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double frame_defect(const FrameState& y, const SpaceForm& sf) {
    double worst = 0.0;
    auto track = [&](double v) { worst = std::max(worst, std::abs(v)); };
    track(inner(y.g, y.g, sf) - sf.c);
    track(inner(y.A, y.A, sf));
    track(inner(y.B, y.B, sf));
    track(inner(y.A, y.B, sf) + 1.0);
    track(inner(y.C, y.C, sf) - 1.0);
    track(inner(y.A, y.C, sf));
    track(inner(y.B, y.C, sf));
    track(inner(y.g, y.A, sf));
    track(inner(y.g, y.B, sf));
    track(inner(y.g, y.C, sf));
    return worst;
}

FrameState integrate_to(const FrameState& y0, double s0, double s, double step,
                        const KappaFn& kappa, double c, double a0) {
    FrameState y = y0;
    double cur = s0;
    double remaining = s - s0;
    int nfull = static_cast<int>(std::floor(remaining / step + 1e-12));
    for (int i = 0; i < nfull; ++i) {
        y = rk4_step(y, cur, step, kappa, c, a0);
        cur += step;
    }
    double last = s - cur;
    if (std::abs(last) > 1e-14) y = rk4_step(y, cur, last, kappa, c, a0);
    return y;
}

} // namespace

CatalogSurface b_scroll(const SpaceForm& sf, const BScrollOptions& opt) {
    const double c = sf.c;
    if (opt.a0 == 0.0) throw Error("invalid-parameter", "a0 must be nonzero");
    if (!(opt.step > 0.0) || opt.s1 <= opt.s0)
        throw Error("invalid-parameter", "bad s range or step");

    FrameState y0;
    if (opt.frame0) {
        y0 = {(*opt.frame0)[0], (*opt.frame0)[1], (*opt.frame0)[2], (*opt.frame0)[3]};
    } else if (c > 0.0) {
        double i2 = 1.0 / std::sqrt(2.0);
        y0 = {{0, 1, 0, 0}, {i2, 0, i2, 0}, {i2, 0, -i2, 0}, {0, 0, 0, 1}};
    } else {
        double i2 = 1.0 / std::sqrt(2.0);
        y0 = {{1, 0, 0, 0}, {0, i2, i2, 0}, {0, i2, -i2, 0}, {0, 0, 0, 1}};
    }
    if (frame_defect(y0, sf) > 1e-10)
        throw Error("bad-initial-frame", "initial Cartan frame is not pseudo-orthonormal");
    for (double s = opt.s0; s <= opt.s1 + 1e-12; s += opt.step)
        if (opt.kappa.eval(s, 0) == 0.0)
            throw Error("invalid-parameter", "kappa vanishes inside the s range");

    // Conservation check over the whole range at construction.
    {
        FrameState y = y0;
        double s = opt.s0;
        while (s < opt.s1 - 1e-12) {
            double h = std::min(opt.step, opt.s1 - s);
            y = rk4_step(y, s, h, opt.kappa, c, opt.a0);
            s += h;
            if (frame_defect(y, sf) > 1e-8)
                throw Error("step-too-large",
                            "frame products drift beyond 1e-8; reduce the step");
        }
    }

    double a0 = opt.a0;
    KappaFn kappa = opt.kappa;
    double s0 = opt.s0, step = opt.step;

    Chart chart;
    chart.sf = sf;
    chart.map = [y0, s0, step, kappa, c, a0](const Jet2& js, const Jet2& ju) -> Vec4J {
        const int order = js.order();
        double s = js.value(), u = ju.value();
        FrameState y = integrate_to(y0, s0, s, step, kappa, c, a0);

        // Taylor derivatives of the frame from the ODE right-hand side.
        std::vector<Vec4> G(static_cast<size_t>(order) + 1), A = G, B = G, C = G;
        G[0] = y.g;
        A[0] = y.A;
        B[0] = y.B;
        C[0] = y.C;
        std::vector<double> kd(static_cast<size_t>(order) + 1, 0.0);
        for (int d = 0; d <= order && d <= 3; ++d) kd[static_cast<size_t>(d)] = kappa.eval(s, d);
        auto binom = [](int n, int k) {
            double r = 1.0;
            for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
            return r;
        };
        for (int k = 0; k < order; ++k) {
            G[static_cast<size_t>(k) + 1] = A[static_cast<size_t>(k)];
            Vec4 sumA{}, sumC{};
            for (int i = 0; i <= k; ++i) {
                double bc = binom(k, i) * kd[static_cast<size_t>(i)];
                sumA = sumA + bc * C[static_cast<size_t>(k - i)];
                sumC = sumC + bc * B[static_cast<size_t>(k - i)];
            }
            A[static_cast<size_t>(k) + 1] = -1.0 * sumA;
            B[static_cast<size_t>(k) + 1] = c * G[static_cast<size_t>(k)] + (-a0) * C[static_cast<size_t>(k)];
            C[static_cast<size_t>(k) + 1] = (-a0) * A[static_cast<size_t>(k)] + (-1.0) * sumC;
        }

        Vec4J p;
        for (int i = 0; i < 4; ++i) {
            Jet2 ji(order);
            double fact = 1.0;
            for (int k = 0; k <= order; ++k) {
                if (k > 1) fact *= k;
                double gk = G[static_cast<size_t>(k)][i] / fact;
                double bk = B[static_cast<size_t>(k)][i] / fact;
                ji.coeff_ref(k, 0) = gk + u * bk;
                if (k + 1 <= order) ji.coeff_ref(k, 1) = bk;
            }
            p[i] = ji;
        }
        return p;
    };
    chart.domain = {opt.s0 + 0.05 * (opt.s1 - opt.s0), opt.s1 - 0.05 * (opt.s1 - opt.s0), -0.5,
                    0.5};
    std::ostringstream label;
    label << "b-scroll(c=" << sf.c << ", a0=" << a0 << ", kappa=" << kappa.label << ")";
    chart.label = label.str();

    fix_orientation(chart, [y0, s0, step, kappa, c, a0](double s, double u) {
        FrameState y = integrate_to(y0, s0, s, step, kappa, c, a0);
        return (-a0 * u) * y.B + y.C;
    });

    CatalogSurface cs;
    cs.chart = chart;
    cs.provenance = "B-scroll over a null curve with Cartan frame (type III shape operator)";
    ExpectedInvariants& e = cs.expected;
    e.H = a0;
    e.H2 = a0 * a0;
    double K = c + a0 * a0;
    e.K = K;
    ShapeClass sc;
    sc.kind = ShapeClass::Kind::TypeIII;
    sc.kappa = a0;
    e.shape = sc;
    e.S_coord_kappa = kappa; // S in {d_s, d_u} is [[a0, 0], [kappa(s), a0]]
    e.sigma = 2.0 * a0 * K;  // 2 H K
    e.pi = 0.0;
    e.verdict = std::abs(K) > 1e-12 ? Verdict::NullTwoType : Verdict::InfiniteType;
    return cs;
}

CatalogSurface generic_perturbed(const SpaceForm& sf) {
    Chart chart;
    chart.sf = sf;
    const double c = sf.c;
    chart.map = [c](const Jet2& ju, const Jet2& jv) -> Vec4J {
        Vec4J F;
        if (c > 0.0) {
            F[0] = 0.2 * sin(ju + jv);
            F[1] = 1.0 + 0.1 * ju + 0.05 * (jv * jv);
            F[2] = 0.3 * jv + 0.1 * sin(ju);
            F[3] = 0.2 * cos(ju - jv) + 0.15 * (ju * ju);
        } else {
            F[0] = 1.0 + 0.1 * ju + 0.05 * (jv * jv);
            F[1] = 0.3 * jv + 0.1 * sin(ju);
            F[2] = 0.2 * sin(ju + jv);
            F[3] = 0.2 * cos(ju - jv) + 0.15 * (ju * ju);
        }
        SpaceForm sf_local(c > 0.0 ? +1 : -1);
        Jet2 nn = inner(F, F, sf_local);
        Jet2 scale = (c > 0.0) ? sqrt(nn) : sqrt(-nn);
        Vec4J p;
        for (int i = 0; i < 4; ++i) p[i] = F[i] / scale;
        return p;
    };
    chart.domain = {-0.3, 0.3, -0.3, 0.3};
    chart.label = std::string("generic-perturbed(c=") + (c > 0 ? "+1" : "-1") + ")";

    CatalogSurface cs;
    cs.chart = chart;
    cs.provenance = "deliberately non-isoparametric chart (negative control)";
    cs.expected.verdict = Verdict::Inconclusive;
    cs.expected.h_constant = false;
    return cs;
}

namespace {

double param_double(const std::map<std::string, std::string>& params, const std::string& key,
                    double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : std::stod(it->second);
}

std::string param_str(const std::map<std::string, std::string>& params, const std::string& key,
                      const std::string& fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

} // namespace

CatalogSurface make_surface(const std::string& name,
                            const std::map<std::string, std::string>& params,
                            const SpaceForm& sf) {
    if (name == "umbilical") {
        std::string axis = param_str(params, "a", "e1");
        Vec4 a{};
        if (axis == "e1") a = {1, 0, 0, 0};
        else if (axis == "e2") a = {0, 1, 0, 0};
        else if (axis == "e3") a = {0, 0, 1, 0};
        else if (axis == "e4") a = {0, 0, 0, 1};
        else if (axis == "null") a = {1, 0, 0, 1};
        else throw Error("invalid-parameter", "a must be e1..e4 or null");
        return umbilical(sf, a, param_double(params, "tau", 0.0));
    }
    if (name == "product") {
        return standard_product(sf, static_cast<int>(param_double(params, "delta", 2)),
                                static_cast<int>(param_double(params, "rho", 1)),
                                param_double(params, "r", 0.6));
    }
    if (name == "complex-circle") {
        return complex_circle(param_double(params, "a", 0.75), param_double(params, "b", 1.25));
    }
    if (name == "b-scroll") {
        BScrollOptions opt;
        opt.a0 = param_double(params, "a0", 1.0);
        std::string ks = param_str(params, "kappa", "const:1");
        if (ks.rfind("const:", 0) == 0) opt.kappa = kappa_const(std::stod(ks.substr(6)));
        else if (ks == "smooth") opt.kappa = kappa_smooth();
        else throw Error("invalid-parameter", "kappa must be const:VALUE or smooth");
        opt.s1 = param_double(params, "smax", 1.0);
        opt.step = param_double(params, "step", 1e-3);
        return b_scroll(sf, opt);
    }
    if (name == "generic-perturbed") return generic_perturbed(sf);
    throw Error("unknown-surface", name);
}

std::vector<std::string> catalog_names() {
    return {"umbilical", "product", "complex-circle", "b-scroll", "generic-perturbed"};
}

std::vector<CatalogSurface> default_catalog() {
    std::vector<CatalogSurface> v;
    v.push_back(umbilical(de_sitter(), {1, 0, 0, 0}, 0.0));
    v.push_back(umbilical(de_sitter(), {1, 0, 0, 0}, 1.0));
    v.push_back(umbilical(anti_de_sitter(), {0, 0, 0, 1}, 2.0));
    v.push_back(umbilical(de_sitter(), {1, 0, 0, 1}, 1.0)); // flat, infinite type
    v.push_back(standard_product(de_sitter(), 2, -1, 0.6));
    v.push_back(standard_product(de_sitter(), 2, +1, 0.6));
    v.push_back(standard_product(de_sitter(), 3, +1, 0.5));
    v.push_back(standard_product(anti_de_sitter(), 2, -1, 2.0));
    v.push_back(standard_product(anti_de_sitter(), 3, +1, 0.5));
    v.push_back(complex_circle(0.75, 1.25));
    {
        BScrollOptions opt;
        opt.a0 = 1.0;
        v.push_back(b_scroll(de_sitter(), opt));
    }
    {
        BScrollOptions opt;
        opt.a0 = 2.0;
        opt.kappa = kappa_smooth();
        v.push_back(b_scroll(de_sitter(), opt));
    }
    {
        BScrollOptions opt;
        opt.a0 = 1.0;
        v.push_back(b_scroll(anti_de_sitter(), opt)); // flat: K = 0
    }
    v.push_back(generic_perturbed(de_sitter()));
    return v;
}

} // namespace lsl
