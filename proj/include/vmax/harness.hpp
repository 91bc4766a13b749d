#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "vmax/fieldsolve.hpp"
#include "vmax/report.hpp"
#include "vmax/suites.hpp"
#include "vmax/vlasov.hpp"

namespace vmax {

inline constexpr int kConfigSchema = 1;

struct DistributionConfig {
    // eps > 0 rescales amp so that sup <v>^N_v <x>^N_x f0 = eps; eps = 0 keeps the particles as
    // weightless test particles; eps < 0 (absent) uses amp as given.
    double eps = -1;
    double amp = 1, sx = 0.5, sv = 0.5;
    double x_max = 1, v_max = 1.5;
    double N_v = 15, N_x = 7.5;
    int nx = 2, nv = 3;
    double width = 0.2;              // particle shape width; <= 0 picks twice the x-spacing
    std::uint64_t jitter_seed = 0;   // stratified jitter inside cells; 0 is the midpoint grid
};

struct FieldDataConfig {
    std::string kind = "zero";  // zero | pure-charge | dipole | file
    double charge = 1, width = 0.5;  // pure-charge: smoothed Coulomb field of this charge
    double amp = 1, sigma = 1;       // dipole: Hertz dipole
    std::string file;                // file: trajectory CSV whose field acts as the external field
    double file_width = 0.5;         // shape width for the particles of that file
};

struct PicardConfig {
    double slab = 1;
    int max_iter = 12;
    double tol = 1e-9;  // max particle displacement between iterates
};

struct RadiationConfig {
    double u_min = -5, u_max = 20;
    int n_u = 51;
    int degree = 11;
    double scale = 16;         // extraction radii {50, 100, 200, 400} times this; fast charges need large radii
    double extend_to = 1e5;    // trajectories continue on free lines up to this time
};

struct DiagnosticsConfig {
    std::vector<double> decay_times;     // sup_x of the smoothed velocity average
    double decay_exponent = 3, decay_tol = 0.15;
    double beta_factor = 2;              // bandwidth beta = beta_factor * dv, grows like beta t
    std::vector<Vec3> profile_points{{0, 0, 0}, {0.2, 0, 0}, {0, -0.15, 0.1}, {-0.1, 0.1, -0.2}};
    std::vector<double> profile_times;   // self-similar current profile check
    std::vector<double> energy_times;
    double energy_tol = 1e-2;
    int energy_n_r = 8, energy_degree = 11;
    std::vector<double> gauss_times, gauss_radii{2, 5, 10};
    int gauss_degree = 35;
    std::vector<double> scattering_times;  // asymptotic momenta, F_inf samples, Cauchy differences
    double spatial_tol = 1e-10;           // free mode: spatial averages are exactly conserved
    int finf_check_particles = 8;
    RadiationConfig radiation;
};

struct ScenarioConfig {
    std::string mode = "free";  // free | external-field | self-consistent
    DistributionConfig dist;
    FieldDataConfig field;
    double T = 10, dt = 0.25;
    std::vector<double> snapshots;
    PicardConfig picard;
    ConeQuadrature quad;
    DiagnosticsConfig diag;
    std::uint64_t seed = 1;  // randomized verifiers (smallness sampling)
};

// Unknown keys and versions are rejected with ConfigError.
ScenarioConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ScenarioConfig& c);
ScenarioConfig load_config(const std::string& file);

DistributionSpec make_distribution(const ScenarioConfig& c);
ParticleEnsemble initial_ensemble(const ScenarioConfig& c);

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PicardResult {
    std::vector<double> slab_end;
    std::vector<int> iterations;
    std::vector<double> displacement;  // last iterate difference per slab
    std::vector<double> ratio;         // largest contraction ratio per slab (0 with fewer than 3 iterates)
    int max_iterations = 0;
    double max_ratio = 0;
};

// Self-consistent coupling from ens.t to t_end. Each slab starts from a constant-acceleration predictor, then
// repeats (field of the previous iterate -> push) until the largest node displacement between iterates
// is below tol. Particles feel every field except their own. Throws ConvergenceError after max_iter.
PicardResult picard_couple(ParticleEnsemble& ens, TrajectoryHistory& hist, const ScenarioConfig& c, double t_end);

// Field energy minus particle self-energies, 1/2 int (|sum F_p|^2 - sum |F_p|^2), by the partition of unity
// around the particle positions at t.
double interaction_energy(const SourceHistory& src, double t, const std::vector<Vec3>& centres, double ell,
                          const ConeQuadrature& quad, int n_r, int degree);

// Limit of V_p(t) for every particle, fitting a + b log t / t on the given times.
std::vector<Vec3> asymptotic_momenta(const TrajectoryHistory& hist, const std::vector<double>& times);

// Run directory layout:
//   config.json, trajectory.csv (id,t,x,y,z,vx,vy,vz,weight,ax,ay,az), snapshots/snap_<k>.csv,
//   profiles.json, report.json; asymptotics/ and radiation/ hold the later stages.
RunReport run_scenario(const ScenarioConfig& c, const std::string& rundir);
RunReport asymptotics_stage(const std::string& rundir);
RunReport radiation_stage(const std::string& rundir);

// Integral-bound sweep from a JSON description {times, radius_factors, b1, b2, max_spread, quadrature}.
BoundSweep load_bound_sweep(const std::string& file);

}  // namespace vmax
