#pragma once

#include <array>
#include <functional>
#include <vector>

#include "vmax/faraday.hpp"
#include "vmax/relgeom.hpp"
#include "vmax/vec.hpp"
#include "vmax/vlasov.hpp"

namespace vmax {

using VelocityProfile = std::function<double(const Vec3&)>;

// Tensor grid over [-v_max, v_max]^3 with n nodes per axis (endpoints included).
struct VelocityGrid {
    double v_max = 4;
    int n = 33;
    std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }
    double spacing() const { return 2 * v_max / (n - 1); }
    Vec3 node(std::size_t idx) const;
};

struct ChargeProfile {
    VelocityGrid grid;
    std::vector<double> Q;                  // per grid node
    std::array<std::vector<double>, 3> Qboost;  // optional boost lifts, empty when absent
    double rate = 0;                        // fitted decay exponent of max_v |Q(t) - Q_inf|
    double residual = 0;                    // worst model residual over the cells

    double value(const Vec3& v) const;  // trilinear, zero outside the grid
    VelocityProfile function() const;
};

// Per cell: fit a + b log^m(t) / t^delta to the snapshot values and keep a.
// snapshots[k][cell] holds the spatial average at times[k].
ChargeProfile estimate_Qinf(const VelocityGrid& grid, const std::vector<double>& times,
                            const std::vector<std::vector<double>>& snapshots, double m = 1, double delta = 1);
// Samples spatial_average on the grid.
std::vector<double> spatial_average_grid(const ParticleEnsemble& ens, const VelocityGrid& grid);

// Self-similar current profile. The current is smoothed with bandwidth beta t around x = t xi, and the
// profile with the matching width beta in xi, built from asymptotic momenta V_inf of the particles:
//   t^3 J^mu(t, t xi)  vs  sum_p w_p vhat^mu(V_inf,p) S_beta(xi - vhat(V_inf,p)),  vhat^0 = 1.
struct ProfilePoint {
    Vec3 xi;
    int mu = 0;
    double current = 0, profile = 0, residual = 0;
};
struct ProfileReport {
    double t = 0;
    std::vector<ProfilePoint> points;
    double max_residual = 0;
};
ProfileReport current_profile_check(const ParticleEnsemble& ens, const std::vector<Vec3>& V_inf,
                                    const std::vector<Vec3>& xi_points, double beta);

struct FinfQuadrature {
    int degree = 35;  // starting Lebedev degree for the direction of z
    int max_degree = 131;
    double tol = 1e-6;  // relative agreement of successive angular rules
    int n_rho = 12;     // Gauss nodes per radial segment
};
struct FinfValue {
    Faraday F;
    long skipped = 0;  // nodes rejected by the domain guard
    int degree = 0;    // angular degree used
};
// -1/(4 pi) int W^T(z/|z|, w) (v0^5 Q)(w) dz / (|z|^2 (1-|z|)^3), w = check((z + vhat)/(1 - |z|)),
// over |z| + |z + vhat| < 1.
FinfValue Finf_from_Q(const VelocityProfile& Q, const Vec3& v, const FinfQuadrature& quad = {});
// 1/(4 pi) int (v0^5 (what_mu Q^{0 nu} - what_nu Q^{0 mu}))(w) dz / (|z| (1-|z|)^4), Q^{00} = 0.
FinfValue Finf_alternative(const std::array<VelocityProfile, 3>& Qboost, const Vec3& v, const FinfQuadrature& quad = {});
// Boost lifts from the derivative relation v0 d_i Q = Q^{0i} - vhat^i Q (central differences, step h).
std::array<VelocityProfile, 3> boost_profiles(const VelocityProfile& Q, double h = 1e-4);

// Limit of t^2 F(t, x + t vhat) from samples, model a + b log^m(t)/t^delta per component.
struct FinfExtrapolation {
    Faraday F;
    double residual = 0;
};
FinfExtrapolation Finf_from_simulation(const std::vector<double>& times, const std::vector<Faraday>& samples,
                                       double m = 0, double delta = 1);

// -(log t / v0) (vhat^mu G_{mu i} + vhat^i vhat^mu G_{mu 0}) for a 2-form G at v.
Vec3 correction_vector(double t, const Vec3& v, const Faraday& G);
// x + t vhat + correction_vector(t, v, Finf(v))
Vec3 modified_characteristics(double t, const Vec3& x, const Vec3& v, const Faraday& Finf);

struct CorrectionCoefficients {
    Vec3 C, C_S;
    std::array<Vec3, 3> C_boost;  // Omega_{0k}
    std::array<Vec3, 3> C_rot;    // Omega_12, Omega_13, Omega_23
};
CorrectionCoefficients correction_coefficients(double t, const Vec3& v, const Faraday& Finf,
                                               const std::array<Faraday, 3>& boost_Finf,
                                               const std::array<Faraday, 3>& rot_Finf);

// h(t, x, v) = f(t, X_C(t, x, v), v) and the straight-line analogue, at probe points and times t_k >= 3.
struct ScatteringReport {
    std::vector<double> times;
    std::vector<double> modified_diff, unmodified_diff;  // max over interior probes of |h(t_{k+1}) - h(t_k)|
    double modified_rate = 0, unmodified_rate = 0;       // fitted exponents C / t^p, interior probes
    double exterior_unmodified_rate = 0;                 // probes with |x| >= t_0, straight lines only
    std::vector<double> f_inf;                           // last modified value per probe
    std::vector<bool> low_confidence;                    // probe density below 1e-3 of the maximum
    std::vector<bool> exterior;                          // |x| >= t_0: straight lines suffice there
};
ScatteringReport modified_scattering_diagnostic(const PhaseFn& f, const std::function<Faraday(const Vec3&)>& Finf,
                                                const std::vector<std::pair<Vec3, Vec3>>& probes,
                                                const std::vector<double>& times);
// Lagrangian form for particle runs: the inverse of the modified map, x_p(t) = X_p - t vhat(V_p) - C(t, V_p),
// converges along each trajectory; reports the same differences for x_p with and without the correction.
// Finf(p, V) is the asymptotic field seen by particle p.
ScatteringReport modified_scattering_particles(const TrajectoryHistory& hist,
                                               const std::function<Faraday(std::size_t, const Vec3&)>& Finf,
                                               const std::vector<double>& times);

}  // namespace vmax
