#pragma once

#include <functional>
#include <memory>

#include "vmax/faraday.hpp"
#include "vmax/fieldsolve.hpp"

namespace vmax {

// Static field of a triweight charge of total q centred at c (exact Coulomb outside the support).
class SmoothedCoulomb : public FieldFunction {
public:
    SmoothedCoulomb(double q, double width, const Vec3& c = {}) : q_(q), w_(width), c_(c) {}
    Faraday operator()(double t, const Vec3& x) const override;
    double scale() const override { return w_; }
    // fraction of the charge within radius r
    double enclosed(double r) const;

private:
    double q_, w_;
    Vec3 c_;
};

// Field of a point charge q in uniform motion with momentum V, at X0 when t = 0.
Faraday boosted_coulomb(double q, const Vec3& X0, const Vec3& V, double t, const Vec3& x);

// int S(xi) G(x - xi) d xi for a triweight of width w: Gauss in radius times a Lebedev rule.
Faraday shape_convolve(const std::function<Faraday(const Vec3&)>& G, double w, const Vec3& x, int n_r = 10,
                       int degree = 23);

// At rest before t = 0, then accelerated by a constant force a along e (hyperbolic motion).
std::shared_ptr<Worldline> hyperbolic_worldline(const Vec3& X0, const Vec3& a);
// X(t) = c + b sin(W t) e, for all t; requires b W < 1.
std::shared_ptr<Worldline> oscillating_worldline(const Vec3& c, const Vec3& e, double b, double W);

// Smooth vacuum solution from the Hertz vector Pi = zhat psi, psi = (g(t-r) - g(t+r))/r with
// g(s) = amp exp(-s^2/sigma^2). E = grad div Pi - d_t^2 Pi, B = curl d_t Pi.
class HertzDipole : public FieldFunction {
public:
    explicit HertzDipole(double amp = 1, double sigma = 1) : amp_(amp), sig_(sigma) {}
    Faraday operator()(double t, const Vec3& x) const override;
    double scale() const override { return sig_; }
    // Closed-form radiation field at null infinity: alphabar_theta = -2 sin(theta) g''(u), alphabar_phi = 0.
    double radiation_theta(double u, double theta) const;
    // int g''(u)^2 du, so the radiated energy is (8 pi / 3) times this.
    double g2_norm() const;
    double g(int n, double s) const;  // n-th derivative of g, n <= 6

private:
    double amp_, sig_;
};

// t^2 F(t, t vhat) at t = 1 for point charges leaving the origin with momenta u, weighted by v0^5 Q(u):
// the asymptotic field of a charge profile Q by direct superposition of boosted Coulomb fields.
Faraday superposed_coulomb(const std::function<double(const Vec3&)>& Q, const Vec3& v, int degree = 131,
                           int n_r = 20);

// Self-similar field F(t, x) = G(check(x/t)) / t^2 inside the light cone, with
// G(v) = (1 - |vhat|^2) (E0, 1/2 vhat x E0), E0 = (0.4, 0.1, -0.2).
Faraday self_similar_Finf(const Vec3& v);
// Solution of the transport equation in that field with data at t = 1,
// f(1, x, v) = 1 + x_1 - x_3/2 + exp(-|v|^2): characteristics integrated back by RK4 in log t.
double self_similar_f(double t, const Vec3& x, const Vec3& v);

}  // namespace vmax
