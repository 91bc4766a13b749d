#pragma once

#include <array>
#include <functional>

#include "vmax/errors.hpp"
#include "vmax/vec.hpp"

namespace vmax {

inline constexpr double kRMin = 1e-9;

struct Momentum {
    Vec3 v;
    double v0 = 1;
    Vec3 vhat;

    static Momentum of(const Vec3& v);
};

Vec3 hat(const Vec3& v);
Vec3 check(const Vec3& y);  // throws DomainError when |y| >= 1

// Determinant of d/dv (x - t vhat(v)), i.e. -t^3 / v0^5.
double momentum_jacobian(double t, const Vec3& v);

struct NullMomentum {
    double vL = 0, vLbar = 0;
    std::array<double, 2> vslash{};  // (v.e_theta, v.e_phi)
};
NullMomentum null_components_momentum(const Vec3& x, const Vec3& v);

// Orthonormal spherical frame at x. (omega, e_theta, e_phi) is right-handed.
// Exactly on the polar axis phi is taken as 0, which still yields a valid frame.
struct NullFrame {
    Vec3 x;
    double r = 0, theta = 0, phi = 0;
    Vec3 omega, e_theta, e_phi;
    std::array<double, 4> L{}, Lbar{}, eth4{}, eph4{};
    // omega_eA[i][A] = <d_{x^i}, e_A>
    double omega_eA[3][2]{};

    static NullFrame at(const Vec3& x, double rmin = kRMin);
    const Vec3& e(int A) const { return A == 0 ? e_theta : e_phi; }
};

// Minkowski product with eta = diag(-1,1,1,1).
double eta(const std::array<double, 4>& a, const std::array<double, 4>& b);

struct ConservedWeights {
    Vec3 z0i;                 // t vhat^i - x^i
    double z12 = 0, z13 = 0, z23 = 0;  // x^j vhat^k - x^k vhat^j
    double zbig = 1;

    double zjk(int j, int k) const;  // 1-based, antisymmetric
};
ConservedWeights conserved_weights(double t, const Vec3& x, const Vec3& v);

struct NullCoords {
    double u = 0, ubar = 0;
    Vec3 omega;
};
NullCoords null_coords(double t, const Vec3& x);
void null_coords_inverse(double u, double ubar, const Vec3& omega, double& t, Vec3& x);

// The eleven generators of the conformal Killing algebra used for commutation.
enum class ZId { Dt, D1, D2, D3, Om01, Om02, Om03, Om12, Om13, Om23, S };
inline constexpr std::array<ZId, 11> kAllZ = {ZId::Dt,   ZId::D1,   ZId::D2,   ZId::D3,   ZId::Om01, ZId::Om02,
                                             ZId::Om03, ZId::Om12, ZId::Om13, ZId::Om23, ZId::S};

struct SymmetryField {
    ZId id = ZId::Dt;

    // Spacetime components Z^mu at (t,x).
    std::array<double, 4> coefficients(double t, const Vec3& x) const;
    // dZ[mu][lambda] = d_mu Z^lambda (constant for every field in the algebra).
    std::array<std::array<double, 4>, 4> jacobian() const;
    // Velocity components of the complete lift at v (zero for translations and S).
    Vec3 lift_coefficients(const Vec3& v) const;
    bool is_killing() const { return id != ZId::S; }
    const char* name() const;
};

SymmetryField symmetry_field(const char* name);  // "dt","d1",.., "Om01",.., "S"

// Phase-space function g(t, x, v).
using PhaseFn = std::function<double(double, const Vec3&, const Vec3&)>;

// Complete lift Zhat applied to g at (t,x,v), central differences with step h.
double apply_lift(const SymmetryField& Z, const PhaseFn& g, double t, const Vec3& x, const Vec3& v, double h = 1e-4);
// v0 T0 g = v0 d_t g + v^i d_i g.
double apply_v0T0(const PhaseFn& g, double t, const Vec3& x, const Vec3& v, double h = 1e-4);

}  // namespace vmax
