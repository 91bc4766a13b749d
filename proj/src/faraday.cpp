#include "vmax/faraday.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vmax {

int pair_index(int mu, int nu) {
    if (mu == nu) return -1;
    if (mu > nu) std::swap(mu, nu);
    for (int p = 0; p < 6; ++p)
        if (kPairMu[p] == mu && kPairNu[p] == nu) return p;
    return -1;
}

double Faraday::operator()(int mu, int nu) const {
    if (mu == nu) return 0.0;
    double sgn = 1;
    if (mu > nu) { std::swap(mu, nu); sgn = -1; }
    if (mu == 0) return sgn * E[nu - 1];
    // F_ij = -eps_ijk B^k
    if (mu == 1 && nu == 2) return -sgn * B.z;
    if (mu == 1 && nu == 3) return sgn * B.y;
    return -sgn * B.x;  // (2,3)
}

Form6 Faraday::form() const { return {E.x, E.y, E.z, -B.z, B.y, -B.x}; }

Faraday Faraday::from_form(const Form6& c) {
    Faraday F;
    F.E = {c[0], c[1], c[2]};
    F.B = {-c[5], c[4], -c[3]};
    return F;
}

double Faraday::max_abs() const {
    double m = 0;
    for (int i = 0; i < 3; ++i) m = std::max({m, std::fabs(E[i]), std::fabs(B[i])});
    return m;
}

NullComponents null_decompose(const Faraday& F, const Vec3& x) {
    NullFrame fr = NullFrame::at(x);
    double Eth = dot(F.E, fr.e_theta), Eph = dot(F.E, fr.e_phi);
    double Bth = dot(F.B, fr.e_theta), Bph = dot(F.B, fr.e_phi);
    NullComponents n;
    n.alpha = {-Eth + Bph, -Eph - Bth};
    n.alphabar = {-Eth - Bph, -Eph + Bth};
    n.rho = dot(F.E, fr.omega);
    n.sigma = -dot(F.B, fr.omega);
    return n;
}

Faraday pure_charge_field(double Q, const Vec3& x) {
    double r = norm(x);
    if (!(r > 0)) throw DomainError("pure_charge_field: singular at x = 0");
    Faraday F;
    F.E = (Q / (4 * std::numbers::pi * r * r * r)) * x;
    return F;
}

Vec3 lorentz_force(const Faraday& F, const Vec3& v) { return F.E + cross(hat(v), F.B); }

StressEnergy stress_energy(const Faraday& F, const Vec3& x) {
    NullComponents n = null_decompose(F, x);
    StressEnergy s;
    s.T00 = 0.5 * F.norm2();
    s.TLL = n.alpha[0] * n.alpha[0] + n.alpha[1] * n.alpha[1];
    s.TLbarLbar = n.alphabar[0] * n.alphabar[0] + n.alphabar[1] * n.alphabar[1];
    s.TLLbar = n.rho * n.rho + n.sigma * n.sigma;
    return s;
}

Faraday directional_derivative(const FieldFunction& F, const std::array<double, 4>& dir, double t, const Vec3& x,
                               double h) {
    if (F.smoothness() < 1) throw DomainError("field function does not declare a derivative");
    double len = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2] + dir[3] * dir[3]);
    if (len == 0) return {};
    Faraday out;
    bool analytic = true;
    for (int mu = 0; mu < 4 && analytic; ++mu) {
        if (dir[mu] == 0) continue;
        Faraday d;
        if (!F.derivative(mu, t, x, d)) { analytic = false; break; }
        out += dir[mu] * d;
    }
    if (analytic) return out;
    if (h <= 0) h = 1e-3 * F.scale();
    h /= len;
    auto at = [&](double s) {
        return F(t + s * dir[0], x + s * Vec3{dir[1], dir[2], dir[3]});
    };
    Faraday r = (8.0 / (12 * h)) * (at(h) - at(-h));
    r -= (1.0 / (12 * h)) * (at(2 * h) - at(-2 * h));
    return r;
}

Faraday partial_derivative(const FieldFunction& F, int mu, double t, const Vec3& x, double h) {
    std::array<double, 4> d{};
    d[mu] = 1;
    return directional_derivative(F, d, t, x, h);
}

Faraday lie_derivative(const FieldFunction& F, const SymmetryField& Z, double t, const Vec3& x, double h) {
    auto Zc = Z.coefficients(t, x);
    auto dZ = Z.jacobian();
    Faraday base = F(t, x);
    Faraday dF = directional_derivative(F, Zc, t, x, h);
    Form6 out = dF.form();
    for (int p = 0; p < 6; ++p) {
        int mu = kPairMu[p], nu = kPairNu[p];
        double acc = 0;
        for (int lam = 0; lam < 4; ++lam) acc += dZ[mu][lam] * base(lam, nu) + dZ[nu][lam] * base(mu, lam);
        out[p] += acc;
    }
    return Faraday::from_form(out);
}

FourCurrent current_density(const MomentProvider& f, double t, const Vec3& x) {
    FourCurrent J;
    double n = f.moment(t, x, [](const Vec3&) { return 1.0; });
    J.raised[0] = n;
    J.lowered[0] = -n;
    for (int i = 0; i < 3; ++i) {
        double ji = f.moment(t, x, [i](const Vec3& v) { return hat(v)[i]; });
        J.raised[i + 1] = ji;
        J.lowered[i + 1] = ji;
    }
    return J;
}

}  // namespace vmax
