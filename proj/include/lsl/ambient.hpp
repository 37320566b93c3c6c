#pragma once

#include <array>
#include <cmath>

#include "lsl/errors.hpp"
#include "lsl/jet.hpp"

namespace lsl {

/// The space form M^3_c: De Sitter S^3_1 (c=+1, ambient R^4_1) or anti
/// De Sitter H^3_1 (c=-1, ambient R^4_2). Radius is fixed to 1.
struct SpaceForm {
    int c = +1;

    explicit SpaceForm(int c_) : c(c_) {
        if (c != 1 && c != -1) throw Error("invalid-space-form", "c must be +1 or -1");
    }

    int index() const noexcept { return c == 1 ? 1 : 2; } // q
};

inline SpaceForm de_sitter() { return SpaceForm(+1); }
inline SpaceForm anti_de_sitter() { return SpaceForm(-1); }

/// 4-component vector in R^4_q; scalar type is double for point data and
/// Jet2 inside the evaluation pipeline.
template <class T>
struct Vec4T {
    std::array<T, 4> x{};

    T& operator[](int i) { return x[static_cast<size_t>(i)]; }
    const T& operator[](int i) const { return x[static_cast<size_t>(i)]; }

    friend Vec4T operator+(const Vec4T& a, const Vec4T& b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
    }
    friend Vec4T operator-(const Vec4T& a, const Vec4T& b) {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
    }
    Vec4T operator-() const { return {-x[0], -x[1], -x[2], -x[3]}; }

    template <class S>
    friend Vec4T operator*(const S& s, const Vec4T& a) {
        return {s * a[0], s * a[1], s * a[2], s * a[3]};
    }
};

using Vec4 = Vec4T<double>;
using Vec4J = Vec4T<Jet2>;

/// Flat indefinite metric <x,y> = -x1 y1 + c x2 y2 + x3 y3 + x4 y4.
template <class T, class U>
auto inner(const Vec4T<T>& a, const Vec4T<U>& b, const SpaceForm& sf) {
    return -(a[0] * b[0]) + static_cast<double>(sf.c) * (a[1] * b[1]) + a[2] * b[2] + a[3] * b[3];
}

/// Metric weight of coordinate slot i.
inline double metric_weight(int i, const SpaceForm& sf) {
    return i == 0 ? -1.0 : (i == 1 ? static_cast<double>(sf.c) : 1.0);
}

inline double norm_flat(const Vec4& a) {
    return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
}

inline Vec4 value(const Vec4J& a) {
    return {a[0].value(), a[1].value(), a[2].value(), a[3].value()};
}

inline bool on_space(const Vec4& x, const SpaceForm& sf, double tol = 1e-9) {
    return std::abs(inner(x, x, sf) - sf.c) <= tol;
}

/// e^T = e - eps<e,N>N - c<e,psi>psi, the part of e tangent to the surface.
inline Vec4 tangential_component(const Vec4& e, const Vec4& psi, const Vec4& N, int eps,
                                 const SpaceForm& sf, double tol = 1e-6) {
    if (!on_space(psi, sf, tol))
        throw Error("inconsistent-frame", "psi is not on the space form");
    if (std::abs(std::abs(inner(N, N, sf)) - 1.0) > tol)
        throw Error("inconsistent-frame", "N is not unit");
    if (std::abs(inner(N, psi, sf)) > tol)
        throw Error("inconsistent-frame", "N is not normal to psi");
    double en = inner(e, N, sf);
    double ep = inner(e, psi, sf);
    return e - (eps * en) * N - (sf.c * ep) * psi;
}

} // namespace lsl
