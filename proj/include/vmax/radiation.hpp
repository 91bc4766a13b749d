#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "vmax/faraday.hpp"
#include "vmax/quadrature.hpp"
#include "vmax/relgeom.hpp"
#include "vmax/vlasov.hpp"

namespace vmax {

// Tangential 1-form on R_u x S^2 in the (e_theta, e_phi) frame of NullFrame::at(omega).
struct RadiationField {
    std::vector<double> u;  // uniform, increasing
    SphereRule dirs;
    std::vector<std::array<double, 2>> values;  // [iu * ndir + j]
    std::vector<double> radii;                  // extraction radii (empty for derived fields)
    double rate = 0;                            // fitted exponent p of |r alphabar(r) - limit| ~ r^p
    std::vector<bool> flagged;                  // nodes whose extrapolation did not settle

    std::size_t nu() const { return u.size(); }
    std::size_t ndir() const { return dirs.size(); }
    const std::array<double, 2>& at(std::size_t iu, std::size_t j) const { return values[iu * ndir() + j]; }
    std::array<double, 2>& at(std::size_t iu, std::size_t j) { return values[iu * ndir() + j]; }
    double du() const { return u.size() > 1 ? u[1] - u[0] : 0; }
    double max_abs() const;
    // Same grid, zero values.
    RadiationField like() const;

    // CSV columns: u,theta,phi,alphabar_theta,alphabar_phi
    void write_csv(const std::string& file) const;
};

struct ExtractionOptions {
    std::vector<double> radii{50, 100, 200, 400};  // scaled by `scale`
    double scale = 1;
    double tol = 1e-6;  // flag when extrapolations from m-1 and m radii differ by more than tol * max|alphabar|
};
std::vector<double> uniform_grid(double a, double b, int n);

// lim r alphabar(F)(r + u, r omega) by polynomial extrapolation in 1/r.
RadiationField extract_radiation(const FieldFunction& F, const std::vector<double>& u, const SphereRule& dirs,
                                 const ExtractionOptions& opt = {});
// Scalar analogue for a Cartesian component F_{mu nu}: lim r F_{mu nu}(r + u, r omega).
std::vector<double> extract_component(const FieldFunction& F, int mu, int nu, const std::vector<double>& u,
                                      const SphereRule& dirs, const ExtractionOptions& opt = {});

// d/du with fourth-order differences (one-sided at the ends).
RadiationField u_derivative(const RadiationField& a);
// Radiation field of L_Z F from that of F.
RadiationField radiation_of_derivative(const RadiationField& base, const SymmetryField& Z);

// R(F_{mu nu}) = -1/2 (omega_mu^{e_A} omega_nu - omega_mu omega_nu^{e_A}) alphabar_A, omega_0 = -1.
std::vector<double> component_radiation(const RadiationField& a, int mu, int nu);
// Max over the grid of the radiation fields of the divergence and of the cyclic sum of dF.
struct ConstraintResiduals {
    double divergence = 0, bianchi = 0;
};
ConstraintResiduals constraint_residuals(const RadiationField& a);

struct EnergyEstimate {
    double value = 0;
    double tail = 0;  // truncation estimate
};
// 1/4 int int |alphabar|^2 d omega du (Simpson in u); tail from the boundary slices.
EnergyEstimate flux_energy(const RadiationField& a, double tol = 1e-2);
// 1/4 int_{|u| <= ubar} int (|alphabar|^2 + rho^2 + sigma^2) r^2 d omega du on t + r = ubar.
EnergyEstimate cone_energy(const FieldFunction& F, double ubar, int n_u = 64, int degree = 35);
// 1/2 int_{|x| <= R} |F(t, x)|^2 dx; tail from the outer shell.
EnergyEstimate slice_energy(const FieldFunction& F, double t, double R, int n_r = 64, int degree = 35,
                            double tol = 1e-2);

// 1/2 int |F(t, x)|^2 dx for fields sourced by particles, by a partition of unity centred on them:
// weights K_p = (1 + |x - X_p|^2 / l^2)^-3, radial Gauss nodes on a map of [0, inf).
double field_energy_particles(const FieldFunction& F, double t, const std::vector<Vec3>& centres, double ell,
                              int n_r = 16, int degree = 11);
// Same partition of unity applied to a general density; density(p, x) may use the centre index.
double integrate_particle_pou(const std::function<double(std::size_t, const Vec3&)>& density,
                              const std::vector<Vec3>& centres, double ell, int n_r = 16, int degree = 11);

struct EnergyLedger {
    std::vector<double> times, matter, field, total;
    double E0 = 0;
    double matter_inf = 0, radiated = 0, E_inf = 0;
    double max_drift = 0;     // max_t |E_t - E_0| / E_0
    double inf_residual = 0;  // |E_inf - E_0| / E_0
    double budget = 0;        // combined truncation budget for the comparison above
};
// matter_inf: sum w v0 of the asymptotic momenta; radiated: flux_energy of the extracted field.
EnergyLedger energy_balance(const std::vector<double>& times, const std::vector<double>& matter,
                            const std::vector<double>& field, double matter_inf, const EnergyEstimate& radiated,
                            double budget);

}  // namespace vmax
