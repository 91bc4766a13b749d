#pragma once

#include <vector>

#include "vmax/vec.hpp"

namespace vmax {

// Rule on the unit sphere; weights sum to 1 (multiply by 4 pi for the surface integral).
struct SphereRule {
    std::vector<Vec3> x;
    std::vector<double> w;
    int degree = 0;  // polynomial exactness
    std::size_t size() const { return w.size(); }
};

// Smallest Lebedev-Laikov rule exact to the requested polynomial degree (<= 131).
const SphereRule& lebedev_rule(int degree);
std::vector<int> lebedev_degrees();

// Gauss-Legendre in cos(theta) times trapezoid in phi.
SphereRule product_sphere_rule(int ntheta, int nphi);
// Midpoint rule in theta (with sin(theta) weight) times trapezoid in phi; second order.
SphereRule midpoint_sphere_rule(int ntheta, int nphi);

// Rule pulled back through the aberration map of a boost with velocity b (|b| < 1):
// omega -> [gamma (c + |b|) bhat + sin part] / (gamma (1 + c |b|)), c = omega.bhat,
// weights multiplied by the Jacobian 1 / (gamma^2 (1 + omega.b)^2). With b = -vhat, the factors
// 1/(1 + omega.vhat) of the kernels become polynomial, so a fixed degree integrates them exactly.
SphereRule aberrated_rule(const SphereRule& base, const Vec3& b);

struct GaussRule {
    std::vector<double> x, w;  // on [-1, 1]
};
const GaussRule& gauss_legendre(int n);

template <class F>
double integrate_gl(F&& f, double a, double b, int n) {
    const GaussRule& g = gauss_legendre(n);
    double c = 0.5 * (a + b), h = 0.5 * (b - a), s = 0;
    for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * f(c + h * g.x[i]);
    return s * h;
}

}  // namespace vmax
