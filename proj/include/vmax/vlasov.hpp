#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "vmax/faraday.hpp"
#include "vmax/fieldsolve.hpp"
#include "vmax/vec.hpp"

namespace vmax {

struct DistributionSpec {
    std::function<double(const Vec3& x, const Vec3& v)> f0;  // null means f0 = 0
    double eps = 0.01;
    double N_v = 15, N_x = 7.5;
    double x_max = 2, v_max = 2;  // sampling box [-x_max, x_max]^3 x [-v_max, v_max]^3 around the centres
    Vec3 x_center{}, v_center{};

    // max over random samples in the box of <v>^N_v <x>^N_x f0
    double weighted_sup(int samples, std::uint64_t seed) const;
    bool satisfies_smallness(int samples, std::uint64_t seed) const { return weighted_sup(samples, seed) <= eps; }
};

// Product Gaussian amp exp(-|x|^2/(2 sx^2) - |v|^2/(2 sv^2)); eps is set from the weighted sup on a sample.
DistributionSpec gaussian_spec(double amp, double sx, double sv, double x_max, double v_max);

struct ParticleEnsemble {
    double t = 0;
    std::vector<Vec3> X, V;
    std::vector<double> weight;  // charge = mass
    std::vector<double> f;       // value of f carried along the characteristic
    double width = 0.5;          // position shape width
    double v_width = 0.5;        // velocity-cell smoothing width
    double dv = 0;               // initial velocity grid spacing

    std::size_t size() const { return X.size(); }
    double total_mass() const;
    double matter_energy() const;  // sum w v0
};

// Midpoint placement on an (nx^3) x (nv^3) tensor grid; cells with f0 = 0 are dropped.
// width <= 0 picks twice the x-spacing for the position shape. A nonzero seed jitters every particle
// uniformly inside its phase-space cell (stratified sampling), so no two particles share X or V.
ParticleEnsemble sample_initial(const DistributionSpec& spec, int nx, int nv, double width = 0,
                                std::uint64_t jitter_seed = 0);

// Per-particle trajectories recorded during push, convertible to a field source.
class TrajectoryHistory {
public:
    TrajectoryHistory() = default;
    explicit TrajectoryHistory(const ParticleEnsemble& ens);
    // Appends (t, X, V, A) for every particle; replaces the last node when t equals its time.
    void record(double t, const std::vector<Vec3>& X, const std::vector<Vec3>& V, const std::vector<Vec3>& A);
    void truncate_after(double t);
    // Continues every path on its free line up to t_end (a short blend node first, so A goes to zero).
    void extend_free(double t_end);
    // Deep copy; plain copies share the paths.
    TrajectoryHistory clone() const;
    SourceHistory source(bool extended, double t0 = 0) const;
    std::size_t size() const { return paths_.size(); }
    const HermiteWorldline& path(std::size_t i) const { return *paths_[i]; }
    double weight(std::size_t i) const { return weight_[i]; }
    double width() const { return width_; }
    double end() const { return paths_.empty() ? -kInf : paths_.front()->end(); }

    // CSV columns: id,t,x,y,z,vx,vy,vz,weight,ax,ay,az
    void write_csv(const std::string& file) const;
    static TrajectoryHistory read_csv(const std::string& file, double width);

private:
    std::vector<std::shared_ptr<HermiteWorldline>> paths_;
    std::vector<double> weight_;
    double width_ = 0.5;
};

// Advances ens from ens.t to t1. RK4 on dX/dt = vhat, dV/dt = E + vhat x B with about dt per step;
// F == nullptr is the exact free push. With hist, nodes are recorded at every step.
void push(ParticleEnsemble& ens, const FieldFunction* F, double t1, double dt, TrajectoryHistory* hist = nullptr);
// Same scheme with a per-particle acceleration dV/dt(i, t, x, v), e.g. without self-interaction.
using ParticleForce = std::function<Vec3(std::size_t, double, const Vec3&, const Vec3&)>;
void push(ParticleEnsemble& ens, const ParticleForce& force, double t1, double dt, TrajectoryHistory* hist = nullptr);

// min(0.1, 0.05 / max |F|) over the particle positions at ens.t
double default_dt(const ParticleEnsemble& ens, const FieldFunction* F);

// sum_p w_p psi(V_p) S_h(x - X_p) at ens.t with a triweight of width h.
double velocity_average(const ParticleEnsemble& ens, const Vec3& x, const std::function<double(const Vec3&)>& psi,
                        double bandwidth);
// Spatial scale of f grows like t, so the kernel does too: max(ens.width, beta t).
double growing_bandwidth(const ParticleEnsemble& ens, double beta);

// sum_p w_p S_{v_width}(V_p - v): estimate of int f dx at v.
double spatial_average(const ParticleEnsemble& ens, const Vec3& v);
// max over particles of v0^p zbig^q f
double weighted_sup_norm(const ParticleEnsemble& ens, double p, double q);

// Both sides of t^3 int g(t, x - vhat t, v) dv = int_{|y-x|<t} (v0^5 g)(t, y, check((x-y)/t)) dy by quadrature.
struct CdvCheck {
    double lhs = 0, rhs = 0;
};
CdvCheck cdv_identity(const std::function<double(double, const Vec3&, const Vec3&)>& g, double t, const Vec3& x,
                      int n_radial = 48, int degree = 35);

// Snapshot CSV: id,t,x,y,z,vx,vy,vz,weight,f
void write_snapshot(const ParticleEnsemble& ens, const std::string& file);
ParticleEnsemble read_snapshot(const std::string& file);

}  // namespace vmax
