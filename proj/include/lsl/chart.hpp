#pragma once

#include <functional>
#include <string>

#include "lsl/ambient.hpp"
#include "lsl/jet.hpp"

namespace lsl {

struct Domain {
    double u0 = 0.0, u1 = 1.0, v0 = 0.0, v1 = 1.0;

    double mid_u() const { return 0.5 * (u0 + u1); }
    double mid_v() const { return 0.5 * (v0 + v1); }
    bool contains(double u, double v) const {
        return u >= u0 && u <= u1 && v >= v0 && v <= v1;
    }
};

/// An immersion chart psi(u,v) into M^3_c, evaluated in jet arithmetic so all
/// partial derivatives up to the requested order come out of one call.
///
/// `orientation` flips the computed unit normal; catalog constructors set it
/// so the pipeline normal matches the reference normal of the surface family.
struct Chart {
    std::function<Vec4J(const Jet2&, const Jet2&)> map;
    Domain domain;
    SpaceForm sf = de_sitter();
    std::string label;
    int orientation = +1;

    Vec4J eval(double u, double v, int order = Jet2::default_order) const {
        Jet2 ju = Jet2::variable(Jet2::Var::u, u, order);
        Jet2 jv = Jet2::variable(Jet2::Var::v, v, order);
        return map(ju, jv);
    }

    Vec4 point(double u, double v) const {
        Vec4J p = eval(u, v, 1);
        return value(p);
    }
};

/// Scalar field on the surface, reported as its jet at a parameter point.
struct ScalarField {
    std::function<Jet2(double, double)> eval;
    std::string label;
};

} // namespace lsl
