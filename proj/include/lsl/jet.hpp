#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "lsl/errors.hpp"

namespace lsl {

/// Truncated bivariate Taylor expansion ("2-jet" in the loose sense) around a
/// base point. Coefficients are stored in graded-lex order: for total degree d
/// the block starts at d(d+1)/2 and the coefficient of u^(d-b) v^b sits at
/// offset b. The stored numbers are Taylor coefficients, so the partial
/// derivative d^a_u d^b_v equals a! b! coeff(a,b).
///
/// Arithmetic between jets of different orders truncates to the smaller
/// order; this is what consuming a derivative order means in the geometry
/// pipeline (differentiating an order-k jet yields an order-(k-1) jet).
class Jet2 {
public:
    static constexpr int default_order = 4;

    Jet2() : Jet2(default_order) {}

    explicit Jet2(int order) : order_(check_order(order)), c_(ncoef(order_), 0.0) {}

    static Jet2 constant(double value, int order = default_order) {
        Jet2 j(order);
        j.c_[0] = value;
        return j;
    }

    enum class Var { u, v };

    static Jet2 variable(Var which, double base_value, int order = default_order) {
        Jet2 j(order);
        j.c_[0] = base_value;
        j.c_[which == Var::u ? 1 : 2] = 1.0;
        return j;
    }

    int order() const noexcept { return order_; }
    double value() const noexcept { return c_[0]; }

    double coeff(int a, int b) const {
        if (a < 0 || b < 0 || a + b > order_)
            throw Error("order-exceeded", "coefficient (" + std::to_string(a) + "," +
                                              std::to_string(b) + ") beyond order " +
                                              std::to_string(order_));
        return c_[index(a, b)];
    }

    double& coeff_ref(int a, int b) { return c_[index(a, b)]; }

    /// Value of d^a_u d^b_v at the base point.
    double partial(int a, int b) const {
        double f = 1.0;
        for (int k = 2; k <= a; ++k) f *= k;
        for (int k = 2; k <= b; ++k) f *= k;
        return coeff(a, b) * f;
    }

    Jet2 truncated(int new_order) const {
        if (new_order > order_)
            throw Error("order-exceeded", "cannot extend a jet by truncation");
        Jet2 r(new_order);
        for (int d = 0; d <= new_order; ++d)
            for (int b = 0; b <= d; ++b) r.c_[index(d - b, b)] = c_[index(d - b, b)];
        return r;
    }

    /// d/du, one order lower.
    Jet2 deriv_u() const {
        if (order_ < 1) throw Error("order-exceeded", "cannot differentiate an order-0 jet");
        Jet2 r(order_ - 1);
        for (int d = 1; d <= order_; ++d)
            for (int b = 0; b <= d; ++b) {
                int a = d - b;
                if (a >= 1) r.c_[index(a - 1, b)] = a * c_[index(a, b)];
            }
        return r;
    }

    /// d/dv, one order lower.
    Jet2 deriv_v() const {
        if (order_ < 1) throw Error("order-exceeded", "cannot differentiate an order-0 jet");
        Jet2 r(order_ - 1);
        for (int d = 1; d <= order_; ++d)
            for (int b = 1; b <= d; ++b) r.c_[index(d - b, b - 1)] = b * c_[index(d - b, b)];
        return r;
    }

    Jet2 operator-() const {
        Jet2 r = *this;
        for (double& x : r.c_) x = -x;
        return r;
    }

    friend Jet2 operator+(const Jet2& x, const Jet2& y) {
        return zipped(x, y, [](double a, double b) { return a + b; });
    }
    friend Jet2 operator-(const Jet2& x, const Jet2& y) {
        return zipped(x, y, [](double a, double b) { return a - b; });
    }

    friend Jet2 operator*(const Jet2& x, const Jet2& y) {
        int n = std::min(x.order_, y.order_);
        Jet2 r(n);
        for (int d1 = 0; d1 <= n; ++d1)
            for (int b1 = 0; b1 <= d1; ++b1) {
                double xc = x.c_[index(d1 - b1, b1)];
                if (xc == 0.0) continue;
                for (int d2 = 0; d1 + d2 <= n; ++d2)
                    for (int b2 = 0; b2 <= d2; ++b2)
                        r.c_[index(d1 + d2 - b1 - b2, b1 + b2)] +=
                            xc * y.c_[index(d2 - b2, b2)];
            }
        return r;
    }

    friend Jet2 operator/(const Jet2& x, const Jet2& y) {
        if (y.value() == 0.0)
            throw Error("singular-jet", "division by a jet with zero constant term");
        int n = std::min(x.order_, y.order_);
        // 1/y as a univariate Taylor series composed with (y - y0).
        std::vector<double> t(static_cast<size_t>(n) + 1);
        double inv = 1.0 / y.value();
        double p = inv;
        for (int k = 0; k <= n; ++k) {
            t[static_cast<size_t>(k)] = p;
            p *= -inv;
        }
        return x * compose(y.truncated(n), t);
    }

    friend Jet2 operator+(const Jet2& x, double s) { return x + constant(s, x.order_); }
    friend Jet2 operator+(double s, const Jet2& x) { return x + s; }
    friend Jet2 operator-(const Jet2& x, double s) { return x - constant(s, x.order_); }
    friend Jet2 operator-(double s, const Jet2& x) { return constant(s, x.order_) - x; }
    friend Jet2 operator*(const Jet2& x, double s) {
        Jet2 r = x;
        for (double& c : r.c_) c *= s;
        return r;
    }
    friend Jet2 operator*(double s, const Jet2& x) { return x * s; }
    friend Jet2 operator/(const Jet2& x, double s) { return x * (1.0 / s); }
    friend Jet2 operator/(double s, const Jet2& x) { return constant(s, x.order_) / x; }

    Jet2& operator+=(const Jet2& y) { return *this = *this + y; }
    Jet2& operator-=(const Jet2& y) { return *this = *this - y; }
    Jet2& operator*=(const Jet2& y) { return *this = *this * y; }

    static int ncoef(int order) { return (order + 1) * (order + 2) / 2; }

    static int index(int a, int b) {
        int d = a + b;
        return d * (d + 1) / 2 + b;
    }

    /// f(jet) for a univariate f given by its Taylor coefficients at the
    /// jet's constant term: taylor[k] = f^(k)(x0)/k!. Exact because the
    /// non-constant part is nilpotent past the order.
    static Jet2 compose(const Jet2& x, const std::vector<double>& taylor) {
        int n = x.order_;
        Jet2 w = x;
        w.c_[0] = 0.0;
        Jet2 r = constant(taylor[static_cast<size_t>(n)], n);
        for (int k = n - 1; k >= 0; --k) r = r * w + taylor[static_cast<size_t>(k)];
        return r;
    }

private:
    template <class F>
    static Jet2 zipped(const Jet2& x, const Jet2& y, F op) {
        int n = std::min(x.order_, y.order_);
        Jet2 r(n);
        for (int d = 0; d <= n; ++d)
            for (int b = 0; b <= d; ++b) {
                int i = index(d - b, b);
                r.c_[i] = op(x.c_[i], y.c_[i]);
            }
        return r;
    }

    static int check_order(int order) {
        if (order < 0) throw Error("invalid-order", "jet order must be >= 0");
        return order;
    }

    int order_;
    std::vector<double> c_;
};

/// Convenience constructor matching the operation table: the jet of the
/// coordinate variable `which` at the given base value.
inline Jet2 jet_variable(Jet2::Var which, double base_value, int order) {
    if (order < 1) throw Error("invalid-order", "jet_variable requires order >= 1");
    return Jet2::variable(which, base_value, order);
}

namespace detail {

inline std::vector<double> sin_taylor(double x0, int n) {
    std::vector<double> t(static_cast<size_t>(n) + 1);
    double fact = 1.0;
    double d[4] = {std::sin(x0), std::cos(x0), -std::sin(x0), -std::cos(x0)};
    for (int k = 0; k <= n; ++k) {
        if (k > 1) fact *= k;
        else fact = 1.0;
        t[static_cast<size_t>(k)] = d[k % 4] / fact;
    }
    return t;
}

inline std::vector<double> exp_like_taylor(double f0, double f1, bool hyperbolic, int n) {
    // cosh/sinh: derivatives alternate between the two values.
    std::vector<double> t(static_cast<size_t>(n) + 1);
    double fact = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 1) fact *= k;
        else fact = 1.0;
        double dk = (k % 2 == 0) ? f0 : f1;
        (void)hyperbolic;
        t[static_cast<size_t>(k)] = dk / fact;
    }
    return t;
}

inline std::vector<double> sqrt_taylor(double x0, int n) {
    std::vector<double> t(static_cast<size_t>(n) + 1);
    double c = std::sqrt(x0);
    double e = 0.5;
    t[0] = c;
    double deriv = 1.0, fact = 1.0;
    double power = c / x0; // x0^{-1/2}
    for (int k = 1; k <= n; ++k) {
        deriv *= e - (k - 1);
        fact *= k;
        t[static_cast<size_t>(k)] = deriv * power / fact;
        power /= x0;
    }
    return t;
}

} // namespace detail

inline Jet2 sin(const Jet2& x) { return Jet2::compose(x, detail::sin_taylor(x.value(), x.order())); }

inline Jet2 cos(const Jet2& x) {
    double x0 = x.value();
    std::vector<double> t(static_cast<size_t>(x.order()) + 1);
    double d[4] = {std::cos(x0), -std::sin(x0), -std::cos(x0), std::sin(x0)};
    double fact = 1.0;
    for (int k = 0; k <= x.order(); ++k) {
        if (k > 1) fact *= k;
        t[static_cast<size_t>(k)] = d[k % 4] / fact;
    }
    return Jet2::compose(x, t);
}

inline Jet2 sinh(const Jet2& x) {
    return Jet2::compose(x, detail::exp_like_taylor(std::sinh(x.value()), std::cosh(x.value()), true, x.order()));
}

inline Jet2 cosh(const Jet2& x) {
    return Jet2::compose(x, detail::exp_like_taylor(std::cosh(x.value()), std::sinh(x.value()), true, x.order()));
}

inline Jet2 exp(const Jet2& x) {
    double e0 = std::exp(x.value());
    return Jet2::compose(x, detail::exp_like_taylor(e0, e0, false, x.order()));
}

inline Jet2 sqrt(const Jet2& x) {
    if (x.value() <= 0.0)
        throw Error("domain-error", "sqrt of a jet with non-positive constant term");
    return Jet2::compose(x, detail::sqrt_taylor(x.value(), x.order()));
}

/// sqrt(|x|) with explicit sign tracking; valid only away from the sign
/// change of x. This is the only sanctioned route to jets of absolute values.
inline Jet2 abs_sqrt(const Jet2& x) {
    if (x.value() == 0.0)
        throw Error("domain-error", "abs_sqrt at a sign change");
    return x.value() > 0.0 ? sqrt(x) : sqrt(-x);
}

inline double extract_partial(const Jet2& x, int a, int b) { return x.partial(a, b); }

} // namespace lsl
