#pragma once

#include <cmath>

namespace vmax {

// Second-order forward jet in three variables: value, gradient, Hessian.
struct Jet {
    double v = 0;
    double g[3] = {0, 0, 0};
    double h[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

    Jet() = default;
    Jet(double c) : v(c) {}  // NOLINT(google-explicit-constructor)

    static Jet variable(int i, double x) {
        Jet j(x);
        j.g[i] = 1;
        return j;
    }
};

inline Jet operator+(const Jet& a, const Jet& b) {
    Jet r(a.v + b.v);
    for (int i = 0; i < 3; ++i) {
        r.g[i] = a.g[i] + b.g[i];
        for (int j = 0; j < 3; ++j) r.h[i][j] = a.h[i][j] + b.h[i][j];
    }
    return r;
}
inline Jet operator-(const Jet& a) {
    Jet r(-a.v);
    for (int i = 0; i < 3; ++i) {
        r.g[i] = -a.g[i];
        for (int j = 0; j < 3; ++j) r.h[i][j] = -a.h[i][j];
    }
    return r;
}
inline Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }
inline Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.v * b.v);
    for (int i = 0; i < 3; ++i) {
        r.g[i] = a.v * b.g[i] + b.v * a.g[i];
        for (int j = 0; j < 3; ++j)
            r.h[i][j] = a.v * b.h[i][j] + b.v * a.h[i][j] + a.g[i] * b.g[j] + b.g[i] * a.g[j];
    }
    return r;
}
inline Jet operator*(double s, const Jet& a) {
    Jet r(s * a.v);
    for (int i = 0; i < 3; ++i) {
        r.g[i] = s * a.g[i];
        for (int j = 0; j < 3; ++j) r.h[i][j] = s * a.h[i][j];
    }
    return r;
}
inline Jet operator*(const Jet& a, double s) { return s * a; }
inline Jet& operator+=(Jet& a, const Jet& b) { return a = a + b; }
inline Jet& operator-=(Jet& a, const Jet& b) { return a = a - b; }

// Apply a scalar function with derivatives (f, f', f'') to a jet.
inline Jet compose(const Jet& a, double f, double df, double d2f) {
    Jet r(f);
    for (int i = 0; i < 3; ++i) {
        r.g[i] = df * a.g[i];
        for (int j = 0; j < 3; ++j) r.h[i][j] = df * a.h[i][j] + d2f * a.g[i] * a.g[j];
    }
    return r;
}
inline Jet inv(const Jet& a) {
    double iv = 1.0 / a.v;
    return compose(a, iv, -iv * iv, 2 * iv * iv * iv);
}
inline Jet operator/(const Jet& a, const Jet& b) { return a * inv(b); }
inline Jet operator/(const Jet& a, double s) { return (1.0 / s) * a; }
inline Jet sqrt(const Jet& a) {
    double s = std::sqrt(a.v);
    return compose(a, s, 0.5 / s, -0.25 / (s * a.v));
}

inline double inv(double x) { return 1.0 / x; }
inline double sqrt(double x) { return std::sqrt(x); }

inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.v; }

}  // namespace vmax
