#include "vmax/relgeom.hpp"

#include <cmath>
#include <cstring>
#include <string>

namespace vmax {

Momentum Momentum::of(const Vec3& v) {
    Momentum m;
    m.v = v;
    m.v0 = std::sqrt(1.0 + norm2(v));
    m.vhat = v / m.v0;
    return m;
}

Vec3 hat(const Vec3& v) { return v / std::sqrt(1.0 + norm2(v)); }

Vec3 check(const Vec3& y) {
    double s = 1.0 - norm2(y);
    if (!(s > 0)) throw DomainError("check: |y| must be < 1");
    return y / std::sqrt(s);
}

double momentum_jacobian(double t, const Vec3& v) {
    double v0 = std::sqrt(1.0 + norm2(v));
    return -t * t * t / std::pow(v0, 5);
}

NullMomentum null_components_momentum(const Vec3& x, const Vec3& v) {
    NullFrame fr = NullFrame::at(x);
    double v0 = std::sqrt(1.0 + norm2(v));
    double vr = dot(fr.omega, v);
    NullMomentum n;
    n.vL = 0.5 * (v0 + vr);
    n.vLbar = 0.5 * (v0 - vr);
    n.vslash = {dot(v, fr.e_theta), dot(v, fr.e_phi)};
    return n;
}

NullFrame NullFrame::at(const Vec3& x, double rmin) {
    NullFrame f;
    f.x = x;
    f.r = norm(x);
    if (!(f.r > rmin)) throw DomainError("null frame undefined at |x| <= r_min");
    f.omega = x / f.r;
    double rho = std::hypot(x.x, x.y);
    f.theta = std::atan2(rho, x.z);
    f.phi = rho > 0 ? std::atan2(x.y, x.x) : 0.0;
    double ct = std::cos(f.theta), st = std::sin(f.theta), cp = std::cos(f.phi), sp = std::sin(f.phi);
    f.e_theta = {ct * cp, ct * sp, -st};
    f.e_phi = {-sp, cp, 0.0};
    f.L = {1, f.omega.x, f.omega.y, f.omega.z};
    f.Lbar = {1, -f.omega.x, -f.omega.y, -f.omega.z};
    f.eth4 = {0, f.e_theta.x, f.e_theta.y, f.e_theta.z};
    f.eph4 = {0, f.e_phi.x, f.e_phi.y, f.e_phi.z};
    for (int i = 0; i < 3; ++i) {
        f.omega_eA[i][0] = f.e_theta[i];
        f.omega_eA[i][1] = f.e_phi[i];
    }
    return f;
}

double eta(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

double ConservedWeights::zjk(int j, int k) const {
    auto val = [&](int a, int b) {
        if (a == 1 && b == 2) return z12;
        if (a == 1 && b == 3) return z13;
        return z23;
    };
    if (j == k) return 0.0;
    return j < k ? val(j, k) : -val(k, j);
}

ConservedWeights conserved_weights(double t, const Vec3& x, const Vec3& v) {
    Vec3 vh = hat(v);
    ConservedWeights w;
    w.z0i = t * vh - x;
    w.z12 = x.x * vh.y - x.y * vh.x;
    w.z13 = x.x * vh.z - x.z * vh.x;
    w.z23 = x.y * vh.z - x.z * vh.y;
    w.zbig = std::sqrt(1.0 + norm2(w.z0i) + w.z12 * w.z12 + w.z13 * w.z13 + w.z23 * w.z23);
    return w;
}

NullCoords null_coords(double t, const Vec3& x) {
    double r = norm(x);
    if (!(r > kRMin)) throw DomainError("null_coords: omega undefined at x = 0");
    return {t - r, t + r, x / r};
}

void null_coords_inverse(double u, double ubar, const Vec3& omega, double& t, Vec3& x) {
    t = 0.5 * (u + ubar);
    x = (0.5 * (ubar - u)) * omega;
}

std::array<double, 4> SymmetryField::coefficients(double t, const Vec3& x) const {
    switch (id) {
        case ZId::Dt: return {1, 0, 0, 0};
        case ZId::D1: return {0, 1, 0, 0};
        case ZId::D2: return {0, 0, 1, 0};
        case ZId::D3: return {0, 0, 0, 1};
        case ZId::Om01: return {x.x, t, 0, 0};
        case ZId::Om02: return {x.y, 0, t, 0};
        case ZId::Om03: return {x.z, 0, 0, t};
        case ZId::Om12: return {0, -x.y, x.x, 0};
        case ZId::Om13: return {0, -x.z, 0, x.x};
        case ZId::Om23: return {0, 0, -x.z, x.y};
        case ZId::S: return {t, x.x, x.y, x.z};
    }
    return {0, 0, 0, 0};
}

std::array<std::array<double, 4>, 4> SymmetryField::jacobian() const {
    std::array<std::array<double, 4>, 4> d{};
    auto boost = [&](int i) { d[i][0] = 1; d[0][i] = 1; };
    // Omega_jk = x^j d_k - x^k d_j: Z^k = x^j, Z^j = -x^k
    auto rot = [&](int j, int k) { d[j][k] = 1; d[k][j] = -1; };
    switch (id) {
        case ZId::Om01: boost(1); break;
        case ZId::Om02: boost(2); break;
        case ZId::Om03: boost(3); break;
        case ZId::Om12: rot(1, 2); break;
        case ZId::Om13: rot(1, 3); break;
        case ZId::Om23: rot(2, 3); break;
        case ZId::S: for (int m = 0; m < 4; ++m) d[m][m] = 1; break;
        default: break;
    }
    return d;
}

Vec3 SymmetryField::lift_coefficients(const Vec3& v) const {
    double v0 = std::sqrt(1.0 + norm2(v));
    Vec3 c;
    auto rot = [&](int j, int k) { c[k - 1] = v[j - 1]; c[j - 1] = -v[k - 1]; };
    switch (id) {
        case ZId::Om01: c.x = v0; break;
        case ZId::Om02: c.y = v0; break;
        case ZId::Om03: c.z = v0; break;
        case ZId::Om12: rot(1, 2); break;
        case ZId::Om13: rot(1, 3); break;
        case ZId::Om23: rot(2, 3); break;
        default: break;
    }
    return c;
}

static const char* kZNames[] = {"dt", "d1", "d2", "d3", "Om01", "Om02", "Om03", "Om12", "Om13", "Om23", "S"};

const char* SymmetryField::name() const { return kZNames[static_cast<int>(id)]; }

SymmetryField symmetry_field(const char* name) {
    for (int i = 0; i < 11; ++i)
        if (std::strcmp(name, kZNames[i]) == 0) return {static_cast<ZId>(i)};
    throw DomainError(std::string("unknown symmetry field ") + name);
}

namespace {
// (1/12h)(-g(2h) + 8g(h) - 8g(-h) + g(-2h)) along a phase-space direction
double dir_diff(const PhaseFn& g, double t, const Vec3& x, const Vec3& v, double dt, const Vec3& dx, const Vec3& dv,
                double h) {
    auto at = [&](double s) { return g(t + s * dt, x + s * dx, v + s * dv); };
    return (8 * (at(h) - at(-h)) - (at(2 * h) - at(-2 * h))) / (12 * h);
}
}  // namespace

double apply_lift(const SymmetryField& Z, const PhaseFn& g, double t, const Vec3& x, const Vec3& v, double h) {
    auto c = Z.coefficients(t, x);
    return dir_diff(g, t, x, v, c[0], {c[1], c[2], c[3]}, Z.lift_coefficients(v), h);
}

double apply_v0T0(const PhaseFn& g, double t, const Vec3& x, const Vec3& v, double h) {
    double v0 = std::sqrt(1 + norm2(v));
    return dir_diff(g, t, x, v, v0, v, {}, h);
}

}  // namespace vmax
