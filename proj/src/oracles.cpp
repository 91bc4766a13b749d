#include "vmax/oracles.hpp"

#include <cmath>

#include "vmax/quadrature.hpp"
#include "vmax/relgeom.hpp"

namespace vmax {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double SmoothedCoulomb::enclosed(double r) const {
    if (r >= w_) return 1;
    double q = r / w_, q2 = q * q, q3 = q2 * q;
    return 315.0 / 16.0 * q3 * (1.0 / 3 - 3.0 / 5 * q2 + 3.0 / 7 * q2 * q2 - 1.0 / 9 * q2 * q2 * q2);
}

Faraday SmoothedCoulomb::operator()(double, const Vec3& x) const {
    Vec3 d = x - c_;
    double r = norm(d);
    if (r < 1e-12 * w_) return {};
    return {(q_ * enclosed(r) / (4 * kPi * r * r * r)) * d, {}};
}

Faraday boosted_coulomb(double q, const Vec3& X0, const Vec3& V, double t, const Vec3& x) {
    Vec3 b = hat(V);
    Vec3 R = x - (X0 + t * b);
    double den = norm2(R) - norm2(cross(b, R));
    Vec3 E = (q * (1 - norm2(b)) / (4 * kPi * std::pow(den, 1.5))) * R;
    return {E, cross(b, E)};
}

Faraday shape_convolve(const std::function<Faraday(const Vec3&)>& G, double w, const Vec3& x, int n_r, int degree) {
    Shape sh{w};
    const SphereRule& rule = lebedev_rule(degree);
    const GaussRule& g = gauss_legendre(n_r);
    Faraday acc;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        double r = 0.5 * w * (1 + g.x[i]);
        double wr = 0.5 * w * g.w[i] * 4 * kPi * r * r * sh.value(r);
        for (std::size_t j = 0; j < rule.size(); ++j) acc += (wr * rule.w[j]) * G(x - r * rule.x[j]);
    }
    return acc;
}

std::shared_ptr<Worldline> hyperbolic_worldline(const Vec3& X0, const Vec3& a) {
    double an = norm(a);
    Vec3 e = a / an;
    return std::make_shared<AnalyticWorldline>([=](double tau) -> WorldState {
        if (tau < 0) return {X0, {}, {}, {}};
        return {X0 + ((std::sqrt(1 + an * an * tau * tau) - 1) / an) * e, tau * a, a, {}};
    });
}

std::shared_ptr<Worldline> oscillating_worldline(const Vec3& c, const Vec3& e, double b, double W) {
    Vec3 u = unit(e);
    return std::make_shared<AnalyticWorldline>([=](double tau) -> WorldState {
        double s = std::sin(W * tau), co = std::cos(W * tau);
        double be = b * W * co, bd = -b * W * W * s, bdd = -b * W * W * W * co;
        double g = 1 / std::sqrt(1 - be * be);
        double g3 = g * g * g, g5 = g3 * g * g;
        return {c + (b * s) * u, (g * be) * u, (g3 * bd) * u, (3 * g5 * be * bd * bd + g3 * bdd) * u};
    });
}

double HertzDipole::g(int n, double s) const {
    double z = s / sig_;
    double hm = 1, h = 2 * z;  // physicists' Hermite H_0, H_1
    double Hn = n == 0 ? 1 : h;
    for (int k = 1; k < n; ++k) {
        double hn = 2 * z * h - 2 * k * hm;
        hm = h;
        h = hn;
        Hn = h;
    }
    return amp_ * ((n % 2) ? -1 : 1) * Hn * std::exp(-z * z) / std::pow(sig_, n);
}

Faraday HertzDipole::operator()(double t, const Vec3& x) const {
    double r = norm(x);
    double f, F1, psitt, btr;  // psi_r/r, (psi_r/r)'/r, psi_tt, psi_tr/r
    if (r < 1e-2 * sig_) {
        double r2 = r * r;
        f = -2 * (g(3, t) / 3 + g(5, t) * r2 / 30);
        F1 = -2 * (g(5, t) / 15 + g(7, t) * r2 / 210);
        psitt = -2 * (g(3, t) + g(5, t) * r2 / 6);
        btr = -2 * (g(4, t) / 3 + g(6, t) * r2 / 30);
    } else {
        double a = t - r, b = t + r;
        double h = g(0, a) - g(0, b), h1 = -g(1, a) - g(1, b), h2 = g(2, a) - g(2, b);
        double psir = h1 / r - h / (r * r);
        double psirr = h2 / r - 2 * h1 / (r * r) + 2 * h / (r * r * r);
        f = psir / r;
        F1 = (psirr / r - psir / (r * r)) / r;
        psitt = (g(2, a) - g(2, b)) / r;
        double k = g(1, a) - g(1, b), k1 = -g(2, a) - g(2, b);
        btr = (k1 / r - k / (r * r)) / r;
    }
    Vec3 E = (F1 * x.z) * x;
    E.z += f - psitt;
    Vec3 B{btr * x.y, -btr * x.x, 0};
    return {E, B};
}

double HertzDipole::radiation_theta(double u, double theta) const { return -2 * std::sin(theta) * g(2, u); }

double HertzDipole::g2_norm() const { return 3 * std::sqrt(kPi / 2) * amp_ * amp_ / (sig_ * sig_ * sig_); }

Faraday superposed_coulomb(const std::function<double(const Vec3&)>& Q, const Vec3& v, int degree, int n_r) {
    // polar coordinates about vhat in the velocity ball: the Coulomb singularity cancels against r^2 dr
    Vec3 xi = hat(v);
    const SphereRule& rule = lebedev_rule(degree);
    const GaussRule& gl = gauss_legendre(n_r);
    const double cuts[] = {0, 0.4, 0.7, 0.85, 0.93, 0.97, 0.99, 1};
    Form6 acc{};
    for (std::size_t j = 0; j < rule.size(); ++j) {
        const Vec3& om = rule.x[j];
        double c = dot(om, xi);
        double rmax = -c + std::sqrt(c * c + 1 - norm2(xi));
        for (int s = 0; s < 7; ++s)
            for (std::size_t i = 0; i < gl.x.size(); ++i) {
                double a = cuts[s] * rmax, b = cuts[s + 1] * rmax;
                double r = 0.5 * (a + b) + 0.5 * (b - a) * gl.x[i];
                Vec3 uh = xi + r * om;
                if (norm2(uh) >= 1) continue;
                Vec3 u = check(uh);
                double q = Q(u);
                if (q == 0) continue;
                double wt = 4 * kPi * rule.w[j] * 0.5 * (b - a) * gl.w[i] * r * r * std::pow(japanese(u), 5) * q;
                Form6 f = boosted_coulomb(1, {}, u, 1, xi).form();
                for (int k = 0; k < 6; ++k) acc[k] += wt * f[k];
            }
    }
    return Faraday::from_form(acc);
}

Faraday self_similar_Finf(const Vec3& v) {
    Vec3 xi = hat(v);
    Vec3 E = (1 - norm2(xi)) * Vec3{0.4, 0.1, -0.2};
    return Faraday(E, 0.5 * cross(xi, E));
}

double self_similar_f(double t, const Vec3& x, const Vec3& v) {
    auto rhs = [](double s, const Vec3& X, const Vec3& V, Vec3& dX, Vec3& dV) {
        double tt = std::exp(s);
        dX = tt * hat(V);
        Vec3 y = X / tt;
        if (norm2(y) >= 1) {
            dV = {};
            return;
        }
        dV = lorentz_force(self_similar_Finf(check(y)), V) / tt;
    };
    int n = std::max(20, static_cast<int>(std::log(t) / 0.01));
    double hs = -std::log(t) / n, s = std::log(t);
    Vec3 X = x, V = v;
    for (int i = 0; i < n; ++i) {
        Vec3 a1, b1, a2, b2, a3, b3, a4, b4;
        rhs(s, X, V, a1, b1);
        rhs(s + hs / 2, X + hs / 2 * a1, V + hs / 2 * b1, a2, b2);
        rhs(s + hs / 2, X + hs / 2 * a2, V + hs / 2 * b2, a3, b3);
        rhs(s + hs, X + hs * a3, V + hs * b3, a4, b4);
        X += hs / 6 * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
        V += hs / 6 * (b1 + 2.0 * b2 + 2.0 * b3 + b4);
        s += hs;
    }
    // affine in X so that a drift of the foot point shows up undamped
    return 1 + X.x - 0.5 * X.z + std::exp(-norm2(V));
}

}  // namespace vmax
