#include "vmax/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "vmax/asymptotics.hpp"
#include "vmax/fit.hpp"
#include "vmax/oracles.hpp"
#include "vmax/parallel.hpp"
#include "vmax/quadrature.hpp"
#include "vmax/radiation.hpp"
#include "vmax/relgeom.hpp"

namespace vmax {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {
constexpr double kPi = 3.14159265358979323846;

void allow_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* a : keys) ok = ok || k == a;
        if (!ok) throw ConfigError(where + ": unknown key '" + k + "'");
    }
}

template <class T>
void opt(const json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

Vec3 vec3(const json& j) {
    if (!j.is_array() || j.size() != 3) throw ConfigError("expected a 3-vector");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}
json vec3(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

std::string path(const std::string& dir, const std::string& name) { return (fs::path(dir) / name).string(); }

void write_json(const json& j, const std::string& file) {
    std::ofstream os(file);
    if (!os) throw ConfigError("cannot write " + file);
    os << std::setw(2) << j << '\n';
}
json read_json(const std::string& file) {
    std::ifstream is(file);
    if (!is) throw ConfigError("cannot read " + file);
    try {
        return json::parse(is);
    } catch (const json::exception& e) {
        throw ConfigError(file + ": " + e.what());
    }
}

std::vector<double> upto(const std::vector<double>& ts, double T) {
    std::vector<double> out;
    for (double t : ts)
        if (t <= T + 1e-12) out.push_back(t);
    return out;
}
bool contains(const std::vector<double>& ts, double t) {
    return std::any_of(ts.begin(), ts.end(), [&](double s) { return std::fabs(s - t) <= 1e-9 * (1 + std::fabs(t)); });
}

void check_times(const std::vector<double>& ts, const char* what, double lo) {
    for (std::size_t k = 0; k < ts.size(); ++k) {
        if (!(ts[k] >= lo)) throw ConfigError(std::string(what) + ": times must be >= " + std::to_string(lo));
        if (k && !(ts[k] > ts[k - 1])) throw ConfigError(std::string(what) + ": times must increase");
    }
}

// Ensemble at time t reconstructed from the stored trajectories.
ParticleEnsemble ensemble_at(const TrajectoryHistory& hist, const ParticleEnsemble& proto, double t) {
    ParticleEnsemble e = proto;
    e.t = t;
    for (std::size_t p = 0; p < hist.size(); ++p) {
        WorldState s = hist.path(p).state(t);
        e.X[p] = s.X;
        e.V[p] = s.V;
    }
    return e;
}

std::shared_ptr<const FieldFunction> external_field(const ScenarioConfig& c) {
    const auto& f = c.field;
    if (f.kind == "pure-charge") return std::make_shared<SmoothedCoulomb>(f.charge, f.width);
    if (f.kind == "dipole") return std::make_shared<HertzDipole>(f.amp, f.sigma);
    if (f.kind == "file") {
        auto src = std::make_shared<SourceHistory>(TrajectoryHistory::read_csv(f.file, f.file_width).source(true));
        return std::make_shared<GSField>(std::make_shared<InitialFieldData>(), src, c.quad);
    }
    return nullptr;
}

// Flux of E through the sphere of radius R.
double gauss_flux(const FieldFunction& F, double t, double R, int degree) {
    const SphereRule& rule = lebedev_rule(degree);
    std::vector<double> part(rule.size());
    parallel_for(rule.size(), [&](std::size_t j) { part[j] = rule.w[j] * dot(F(t, R * rule.x[j]).E, rule.x[j]); });
    return 4 * kPi * R * R * tree_sum(part);
}

double sup_velocity_average(const ParticleEnsemble& ens, const std::vector<Vec3>& xi, double beta) {
    double h = growing_bandwidth(ens, beta), best = 0;
    for (const Vec3& p : xi) best = std::max(best, velocity_average(ens, ens.t * p, [](const Vec3&) { return 1.0; }, h));
    return best;
}

std::vector<Vec3> spatial_probe_velocities(const ScenarioConfig& c) {
    double a = 0.3 * c.dist.v_max;
    return {{0, 0, 0}, {a, 0, 0}, {0, -a, 0}, {0, 0, a}, {a, a, -a}};
}

// Linear least-squares slope of y against x.
double slope(const std::vector<double>& x, const std::vector<double>& y) {
    double n = static_cast<double>(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string what_of(const std::exception& e) { return e.what(); }
}  // namespace

// ---------------------------------------------------------------- config

ScenarioConfig config_from_json(const json& j) {
    allow_keys(j, {"schema", "mode", "distribution", "field", "T", "dt", "snapshots", "picard", "quadrature", "diagnostics", "seed"},
               "config");
    if (j.contains("schema") && j["schema"] != kConfigSchema)
        throw ConfigError("config: unsupported schema version " + j["schema"].dump());
    ScenarioConfig c;
    opt(j, "mode", c.mode);
    if (c.mode != "free" && c.mode != "external-field" && c.mode != "self-consistent")
        throw ConfigError("config: unknown mode '" + c.mode + "'");
    opt(j, "T", c.T);
    opt(j, "dt", c.dt);
    opt(j, "snapshots", c.snapshots);
    opt(j, "seed", c.seed);
    if (j.contains("distribution")) {
        const json& d = j["distribution"];
        allow_keys(d, {"eps", "amp", "sx", "sv", "x_max", "v_max", "N_v", "N_x", "nx", "nv", "width", "jitter_seed"},
                   "distribution");
        auto& D = c.dist;
        opt(d, "eps", D.eps);
        opt(d, "amp", D.amp);
        opt(d, "sx", D.sx);
        opt(d, "sv", D.sv);
        opt(d, "x_max", D.x_max);
        opt(d, "v_max", D.v_max);
        opt(d, "N_v", D.N_v);
        opt(d, "N_x", D.N_x);
        opt(d, "nx", D.nx);
        opt(d, "nv", D.nv);
        opt(d, "width", D.width);
        opt(d, "jitter_seed", D.jitter_seed);
        if (d.contains("eps") && !(D.eps >= 0)) throw ConfigError("distribution: eps must be >= 0");
    }
    if (j.contains("field")) {
        const json& f = j["field"];
        allow_keys(f, {"kind", "charge", "width", "amp", "sigma", "file", "file_width"}, "field");
        opt(f, "kind", c.field.kind);
        opt(f, "charge", c.field.charge);
        opt(f, "width", c.field.width);
        opt(f, "amp", c.field.amp);
        opt(f, "sigma", c.field.sigma);
        opt(f, "file", c.field.file);
        opt(f, "file_width", c.field.file_width);
        const std::string& k = c.field.kind;
        if (k != "zero" && k != "pure-charge" && k != "dipole" && k != "file")
            throw ConfigError("field: unknown kind '" + k + "'");
        if (k == "file" && c.field.file.empty()) throw ConfigError("field: kind 'file' needs a file");
    }
    if (j.contains("picard")) {
        const json& p = j["picard"];
        allow_keys(p, {"slab", "max_iter", "tol"}, "picard");
        opt(p, "slab", c.picard.slab);
        opt(p, "max_iter", c.picard.max_iter);
        opt(p, "tol", c.picard.tol);
    }
    if (j.contains("quadrature")) {
        const json& q = j["quadrature"];
        allow_keys(q, {"n_s", "n_u", "n_phi", "far_factor", "split_factor", "tolerance"}, "quadrature");
        opt(q, "n_s", c.quad.n_s);
        opt(q, "n_u", c.quad.n_u);
        opt(q, "n_phi", c.quad.n_phi);
        opt(q, "far_factor", c.quad.far_factor);
        opt(q, "split_factor", c.quad.split_factor);
        opt(q, "tolerance", c.quad.tolerance);
    }
    if (j.contains("diagnostics")) {
        const json& d = j["diagnostics"];
        allow_keys(d, {"decay_times", "decay_exponent", "decay_tol", "beta_factor", "profile_points", "profile_times",
                       "energy_times", "energy_tol", "energy_n_r", "energy_degree", "gauss_times", "gauss_radii",
                       "gauss_degree", "scattering_times", "spatial_tol", "finf_check_particles", "radiation"},
                   "diagnostics");
        auto& D = c.diag;
        opt(d, "decay_times", D.decay_times);
        opt(d, "decay_exponent", D.decay_exponent);
        opt(d, "decay_tol", D.decay_tol);
        opt(d, "beta_factor", D.beta_factor);
        if (d.contains("profile_points")) {
            D.profile_points.clear();
            for (auto& p : d["profile_points"]) D.profile_points.push_back(vec3(p));
        }
        opt(d, "profile_times", D.profile_times);
        opt(d, "energy_times", D.energy_times);
        opt(d, "energy_tol", D.energy_tol);
        opt(d, "energy_n_r", D.energy_n_r);
        opt(d, "energy_degree", D.energy_degree);
        opt(d, "gauss_times", D.gauss_times);
        opt(d, "gauss_radii", D.gauss_radii);
        opt(d, "gauss_degree", D.gauss_degree);
        opt(d, "scattering_times", D.scattering_times);
        opt(d, "spatial_tol", D.spatial_tol);
        opt(d, "finf_check_particles", D.finf_check_particles);
        if (d.contains("radiation")) {
            const json& r = d["radiation"];
            allow_keys(r, {"u_min", "u_max", "n_u", "degree", "scale", "extend_to"}, "radiation");
            opt(r, "u_min", D.radiation.u_min);
            opt(r, "u_max", D.radiation.u_max);
            opt(r, "n_u", D.radiation.n_u);
            opt(r, "degree", D.radiation.degree);
            opt(r, "scale", D.radiation.scale);
            opt(r, "extend_to", D.radiation.extend_to);
        }
    }
    if (!(c.T >= 0)) throw ConfigError("config: T must be >= 0");
    if (!(c.dt > 0)) throw ConfigError("config: dt must be positive");
    if (!(c.picard.slab > 0) || c.picard.max_iter < 1 || !(c.picard.tol > 0))
        throw ConfigError("picard: slab, max_iter and tol must be positive");
    check_times(c.snapshots, "snapshots", 0);
    // diagnostics start at t = 3
    check_times(c.diag.decay_times, "decay_times", 3);
    check_times(c.diag.profile_times, "profile_times", 3);
    check_times(c.diag.scattering_times, "scattering_times", 3);
    check_times(c.diag.energy_times, "energy_times", 0);
    check_times(c.diag.gauss_times, "gauss_times", 0);
    if (c.dist.nx < 2 || c.dist.nv < 2) throw ConfigError("distribution: nx and nv must be >= 2");
    return c;
}

json to_json(const ScenarioConfig& c) {
    json pp = json::array();
    for (auto& p : c.diag.profile_points) pp.push_back(vec3(p));
    const auto& D = c.dist;
    const auto& R = c.diag.radiation;
    json j = {{"schema", kConfigSchema},
            {"mode", c.mode},
            {"distribution",
             {{"eps", D.eps}, {"amp", D.amp}, {"sx", D.sx}, {"sv", D.sv}, {"x_max", D.x_max}, {"v_max", D.v_max},
              {"N_v", D.N_v}, {"N_x", D.N_x}, {"nx", D.nx}, {"nv", D.nv}, {"width", D.width}, {"jitter_seed", D.jitter_seed}}},
            {"field",
             {{"kind", c.field.kind}, {"charge", c.field.charge}, {"width", c.field.width}, {"amp", c.field.amp},
              {"sigma", c.field.sigma}, {"file", c.field.file}, {"file_width", c.field.file_width}}},
            {"T", c.T},
            {"dt", c.dt},
            {"snapshots", c.snapshots},
            {"picard", {{"slab", c.picard.slab}, {"max_iter", c.picard.max_iter}, {"tol", c.picard.tol}}},
            {"quadrature",
             {{"n_s", c.quad.n_s}, {"n_u", c.quad.n_u}, {"n_phi", c.quad.n_phi}, {"far_factor", c.quad.far_factor},
              {"split_factor", c.quad.split_factor}, {"tolerance", c.quad.tolerance}}},
            {"diagnostics",
             {{"decay_times", c.diag.decay_times},
              {"decay_exponent", c.diag.decay_exponent},
              {"decay_tol", c.diag.decay_tol},
              {"beta_factor", c.diag.beta_factor},
              {"profile_points", pp},
              {"profile_times", c.diag.profile_times},
              {"energy_times", c.diag.energy_times},
              {"energy_tol", c.diag.energy_tol},
              {"energy_n_r", c.diag.energy_n_r},
              {"energy_degree", c.diag.energy_degree},
              {"gauss_times", c.diag.gauss_times},
              {"gauss_radii", c.diag.gauss_radii},
              {"gauss_degree", c.diag.gauss_degree},
              {"scattering_times", c.diag.scattering_times},
              {"spatial_tol", c.diag.spatial_tol},
              {"finf_check_particles", c.diag.finf_check_particles},
              {"radiation",
               {{"u_min", R.u_min}, {"u_max", R.u_max}, {"n_u", R.n_u}, {"degree", R.degree}, {"scale", R.scale},
                {"extend_to", R.extend_to}}}}},
            {"seed", c.seed}};
    // a negative eps means "use amp as given" and is written by omission
    if (D.eps < 0) j["distribution"].erase("eps");
    return j;
}

ScenarioConfig load_config(const std::string& file) { return config_from_json(read_json(file)); }

DistributionSpec make_distribution(const ScenarioConfig& c) {
    const auto& D = c.dist;
    auto build = [&](double amp) {
        DistributionSpec s = gaussian_spec(amp, D.sx, D.sv, D.x_max, D.v_max);
        s.N_v = D.N_v;
        s.N_x = D.N_x;
        s.eps = s.weighted_sup(20000, c.seed);
        return s;
    };
    DistributionSpec s = build(D.amp);
    if (D.eps > 0 && s.eps > 0) s = build(D.amp * D.eps / s.eps);
    return s;
}

ParticleEnsemble initial_ensemble(const ScenarioConfig& c) {
    ParticleEnsemble e = sample_initial(make_distribution(c), c.dist.nx, c.dist.nv, c.dist.width, c.dist.jitter_seed);
    if (c.dist.eps == 0) std::fill(e.weight.begin(), e.weight.end(), 0.0);
    return e;
}

// ---------------------------------------------------------------- coupling

PicardResult picard_couple(ParticleEnsemble& ens, TrajectoryHistory& hist, const ScenarioConfig& c, double t_end) {
    if (c.mode != "self-consistent") throw ConfigError("picard_couple: needs self-consistent mode");
    PicardResult res;
    const std::size_t n = ens.size();
    const InitialFieldData none;
    if (hist.size() != n) throw ConfigError("picard_couple: history does not match the ensemble");
    if (hist.end() < ens.t) hist.record(ens.t, ens.X, ens.V, {});
    double a = ens.t;
    while (a < t_end - 1e-12) {
        double b = std::min(a + c.picard.slab, t_end);
        if (t_end - b < 1e-9 * (1 + t_end)) b = t_end;
        const ParticleEnsemble start = ens;

        // predictor: constant acceleration from the last node
        std::vector<Vec3> A0(n);
        for (std::size_t i = 0; i < n; ++i) A0[i] = hist.path(i).node(hist.path(i).size() - 1).A;
        TrajectoryHistory cur = hist.clone();
        cur.truncate_after(a);
        {
            ParticleEnsemble e = start;
            push(e, [&](std::size_t i, double, const Vec3&, const Vec3&) { return A0[i]; }, b, c.dt, &cur);
        }

        double prev = -1, disp = 0, worst = 0;
        int it = 0;
        ParticleEnsemble e;
        for (;;) {
            ++it;
            SourceHistory src = cur.source(true);
            TrajectoryHistory next = cur.clone();
            next.truncate_after(a);
            e = start;
            push(e,
                 [&](std::size_t i, double t, const Vec3& x, const Vec3& v) {
                     return lorentz_force(field_total(none, src, t, x, c.quad, static_cast<long>(i)), v);
                 },
                 b, c.dt, &next);
            disp = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const auto &p = next.path(i), &q = cur.path(i);
                if (p.size() != q.size()) throw ConfigError("picard_couple: iterates have different time nodes");
                for (std::size_t k = 0; k < p.size(); ++k)
                    if (p.node_time(k) > a) disp = std::max(disp, norm(p.node(k).X - q.node(k).X));
            }
            // ratios below rounding level say nothing about contraction
            if (it >= 2 && prev > 1e-13) worst = std::max(worst, disp / prev);
            prev = disp;
            cur = std::move(next);
            if (disp < c.picard.tol) break;
            if (it >= c.picard.max_iter) {
                std::ostringstream os;
                os << "Picard iteration did not converge on [" << a << ", " << b << "] after " << it
                   << " iterations: displacement " << disp << " > tol " << c.picard.tol
                   << "; the data may be too large (reduce eps) or the slab too long";
                throw ConvergenceError(os.str());
            }
        }
        hist = std::move(cur);
        ens = e;
        res.slab_end.push_back(b);
        res.iterations.push_back(it);
        res.displacement.push_back(disp);
        res.ratio.push_back(worst);
        res.max_iterations = std::max(res.max_iterations, it);
        res.max_ratio = std::max(res.max_ratio, worst);
        a = b;
    }
    return res;
}

double interaction_energy(const SourceHistory& src, double t, const std::vector<Vec3>& centres, double ell,
                          const ConeQuadrature& quad, int n_r, int degree) {
    auto density = [&](std::size_t, const Vec3& x) {
        Faraday sum;
        double self = 0;
        for (const auto& p : src.particles) {
            if (p.weight == 0) continue;
            ParticleField pf = particle_field(p, src, t, x, quad);
            Faraday F = (1 / (4 * kPi)) * (pf.T + pf.S + pf.boundary);
            sum += F;
            self += F.norm2();
        }
        return 0.5 * (sum.norm2() - self);
    };
    return integrate_particle_pou(density, centres, ell, n_r, degree);
}

std::vector<Vec3> asymptotic_momenta(const TrajectoryHistory& hist, const std::vector<double>& times) {
    std::vector<Vec3> out(hist.size());
    parallel_for(hist.size(), [&](std::size_t p) {
        std::vector<double> comp[3];
        for (double t : times) {
            Vec3 V = hist.path(p).state(t).V;
            for (int k = 0; k < 3; ++k) comp[k].push_back(V[k]);
        }
        for (int k = 0; k < 3; ++k) out[p][k] = times.size() >= 2 ? extrapolate(times, comp[k], 1, 1).a : comp[k].back();
    });
    return out;
}

// ---------------------------------------------------------------- simulate

RunReport run_scenario(const ScenarioConfig& c, const std::string& rundir) {
    fs::create_directories(fs::path(rundir) / "snapshots");
    RunReport rep;
    rep.kind = "simulate";
    write_json(to_json(c), path(rundir, "config.json"));
    rep.manifest.push_back("config.json");

    DistributionSpec spec = make_distribution(c);
    ParticleEnsemble ens = initial_ensemble(c);
    const std::size_t n = ens.size();
    TrajectoryHistory hist(ens);
    hist.record(0, ens.X, ens.V, {});
    rep.scalars["particles"] = static_cast<double>(n);
    rep.scalars["total_charge"] = ens.total_mass();
    rep.scalars["eps"] = c.dist.eps == 0 ? 0 : spec.eps;
    rep.scalars["weighted_sup_particles"] = weighted_sup_norm(ens, c.dist.N_v, c.dist.N_x);
    rep.scalars["particle_width"] = ens.width;

    auto Fext = c.mode == "external-field" ? external_field(c) : nullptr;
    const auto& D = c.diag;
    std::vector<double> decay_t = upto(D.decay_times, c.T), prof_t = upto(D.profile_times, c.T),
                        energy_t = upto(D.energy_times, c.T), gauss_t = upto(D.gauss_times, c.T);
    std::set<double> stop_set;
    for (const std::vector<double>* v : std::initializer_list<const std::vector<double>*>{&c.snapshots, &decay_t, &prof_t, &energy_t, &gauss_t})
        for (double t : *v)
            if (t > 0 && t <= c.T) stop_set.insert(t);
    if (c.T > 0) stop_set.insert(c.T);

    const double beta = D.beta_factor * ens.dv;
    const auto vprobe = spatial_probe_velocities(c);
    std::vector<double> sa0(vprobe.size());
    for (std::size_t k = 0; k < vprobe.size(); ++k) sa0[k] = spatial_average(ens, vprobe[k]);

    Series decay{"velocity_average", {"t", "sup_x_average"}, {}};
    Series spatial{"spatial_average", {"t", "max_relative_change"}, {}};
    Series energy{"energy", {"t", "matter", "field", "total"}, {}};
    Series gauss{"gauss_flux", {"t", "R", "flux", "expected"}, {}};
    Series picard{"picard", {"slab_end", "iterations", "displacement", "ratio"}, {}};
    std::vector<ParticleEnsemble> prof_ens;
    int snap_index = 0;
    std::string failure;

    auto sample = [&](double t) {
        if (contains(c.snapshots, t)) {
            std::string f = "snapshots/snap_" + std::to_string(snap_index++) + ".csv";
            write_snapshot(ens, path(rundir, f));
            rep.manifest.push_back(f);
        }
        if (contains(decay_t, t)) {
            decay.rows.push_back({t, sup_velocity_average(ens, D.profile_points, beta)});
            double m = 0;
            for (std::size_t k = 0; k < vprobe.size(); ++k)
                if (sa0[k] > 0) m = std::max(m, std::fabs(spatial_average(ens, vprobe[k]) - sa0[k]) / sa0[k]);
            spatial.rows.push_back({t, m});
        }
        if (contains(prof_t, t)) prof_ens.push_back(ens);
        if (contains(energy_t, t)) {
            double field = 0;
            if (c.mode == "self-consistent")
                field = interaction_energy(hist.source(true), t, ens.X, ens.width, c.quad, D.energy_n_r, D.energy_degree);
            double matter = ens.matter_energy();
            energy.rows.push_back({t, matter, field, matter + field});
        }
        if (contains(gauss_t, t) && Fext && c.field.kind != "file") {
            double Q = c.field.kind == "pure-charge" ? c.field.charge : 0;
            for (double R : D.gauss_radii) gauss.rows.push_back({t, R, gauss_flux(*Fext, t, R, D.gauss_degree), Q});
        }
    };

    sample(0);
    try {
        for (double s : stop_set) {
            if (c.mode == "free") {
                push(ens, static_cast<const FieldFunction*>(nullptr), s, c.dt);
                hist.record(s, ens.X, ens.V, {});
            } else if (c.mode == "external-field") {
                push(ens, Fext.get(), s, c.dt, &hist);
            } else {
                PicardResult r = picard_couple(ens, hist, c, s);
                for (std::size_t k = 0; k < r.slab_end.size(); ++k)
                    picard.rows.push_back({r.slab_end[k], static_cast<double>(r.iterations[k]), r.displacement[k], r.ratio[k]});
            }
            sample(s);
        }
    } catch (const ConvergenceError& e) {
        failure = what_of(e);
    }
    hist.write_csv(path(rundir, "trajectory.csv"));
    rep.manifest.push_back("trajectory.csv");

    // ---- checks
    if (!failure.empty()) rep.add("picard_converged", false, 0, c.picard.max_iter, failure);
    if (c.mode == "self-consistent" && failure.empty() && !picard.rows.empty()) {
        double it = 0, ratio = 0;
        for (auto& r : picard.rows) {
            it = std::max(it, r[1]);
            ratio = std::max(ratio, r[3]);
        }
        rep.add("picard_converged", true, it, c.picard.max_iter, "largest iteration count over slabs");
        rep.scalars["picard_max_ratio"] = ratio;
        if (ratio > 0) rep.add("picard_contraction", ratio < 1, ratio, 1, "largest two-iterate displacement ratio");
    }
    if (decay.rows.size() >= 4) {
        std::vector<double> ts, ys;
        for (auto& r : decay.rows) {
            ts.push_back(r[0]);
            ys.push_back(r[1]);
        }
        RateFit f = fit_rate(ts, ys);
        rep.fits["velocity_average"] = f;
        rep.add("velocity_average_decay", std::fabs(f.p - D.decay_exponent) <= D.decay_tol, f.p, D.decay_tol,
                "fitted exponent of sup_x int f dv, expected -" + std::to_string(D.decay_exponent));
    }
    if (c.mode == "free" && !spatial.rows.empty()) {
        double m = 0;
        for (auto& r : spatial.rows) m = std::max(m, r[1]);
        rep.add("spatial_average_conserved", m < D.spatial_tol, m, D.spatial_tol, "int f dx at fixed velocities");
    }
    if (energy.rows.size() >= 2 && c.mode != "external-field") {
        double E0 = energy.rows.front()[3], drift = 0;
        for (auto& r : energy.rows) drift = std::max(drift, std::fabs(r[3] - E0) / E0);
        rep.scalars["energy_E0"] = E0;
        rep.scalars["energy_max_drift"] = drift;
        rep.scalars["energy_field0"] = energy.rows.front()[2];
        // with matter-dominated energy the drift bound says little; compare it to the energy exchanged
        double exchanged = 0;
        for (auto& r : energy.rows) exchanged = std::max(exchanged, std::fabs(r[2] - energy.rows.front()[2]));
        if (exchanged > 0) rep.scalars["energy_exchange_closure"] = drift * E0 / exchanged;
        rep.add("energy_conservation", drift < D.energy_tol, drift, D.energy_tol, "max_t |E_t - E_0| / E_0");
    }
    if (!gauss.rows.empty()) {
        double m = 0;
        for (auto& r : gauss.rows) m = std::max(m, std::fabs(r[2] - r[3]));
        double thr = 1e-8 * std::max(1.0, std::fabs(c.field.charge));
        rep.add("gauss_flux", m < thr, m, thr, "flux of E through spheres equals the enclosed charge");
    }

    // self-similar current profile, with asymptotic momenta extrapolated from the run
    json profiles = json::object();
    if (prof_ens.size() >= 3) {
        std::vector<double> at = upto(D.scattering_times.empty() ? D.profile_times : D.scattering_times, c.T);
        std::vector<Vec3> Vinf = at.size() >= 2 ? asymptotic_momenta(hist, at) : ens.V;
        Series trend{"current_profile", {"t", "max_residual", "t_times_residual"}, {}};
        json pj = json::array();
        for (auto& e : prof_ens) {
            ProfileReport pr = current_profile_check(e, Vinf, D.profile_points, beta);
            trend.rows.push_back({e.t, pr.max_residual, e.t * pr.max_residual});
            json pts = json::array();
            for (auto& p : pr.points)
                pts.push_back({{"xi", vec3(p.xi)}, {"mu", p.mu}, {"current", p.current}, {"profile", p.profile}});
            pj.push_back({{"t", e.t}, {"max_residual", pr.max_residual}, {"points", pts}});
        }
        std::vector<double> ts, ys;
        for (auto& r : trend.rows) {
            ts.push_back(r[0]);
            ys.push_back(r[2]);
        }
        double mean = 0;
        for (double y : ys) mean += y / ys.size();
        // relative change of t * residual across the window according to the fitted line
        double growth = slope(ts, ys) * (ts.back() - ts.front()) / mean;
        bool bounded = std::all_of(ys.begin(), ys.end(), [](double y) { return std::isfinite(y); });
        rep.add("current_profile_trend", bounded && growth <= 0.05, growth, 0.05,
                "fitted relative change of t * max|t^3 J - profile| over the window");
        rep.series.push_back(trend);
        profiles["current_profile"] = pj;
    }
    auto rows = [](const Series& s) {
        json a = json::array();
        for (auto& r : s.rows) a.push_back(r);
        return a;
    };
    profiles["velocity_average"] = rows(decay);
    profiles["spatial_average"] = rows(spatial);
    profiles["energy"] = rows(energy);
    write_json(profiles, path(rundir, "profiles.json"));
    rep.manifest.push_back("profiles.json");
    for (Series* s : {&decay, &spatial, &energy, &gauss, &picard})
        if (!s->rows.empty()) rep.series.push_back(*s);
    rep.manifest.push_back("report.json");
    emit(rep, rundir, "json");
    return rep;
}

// ---------------------------------------------------------------- later stages

namespace {
struct LoadedRun {
    ScenarioConfig cfg;
    TrajectoryHistory hist;
    ParticleEnsemble proto;
    RunReport sim;
};
LoadedRun load_run(const std::string& rundir) {
    LoadedRun r;
    r.cfg = load_config(path(rundir, "config.json"));
    r.sim = read_report(rundir);
    r.proto = initial_ensemble(r.cfg);
    r.hist = TrajectoryHistory::read_csv(path(rundir, "trajectory.csv"), r.proto.width);
    if (r.hist.size() != r.proto.size()) throw ConfigError(rundir + ": trajectory does not match the configuration");
    return r;
}
}  // namespace

RunReport asymptotics_stage(const std::string& rundir) {
    LoadedRun run = load_run(rundir);
    const ScenarioConfig& c = run.cfg;
    std::string out = path(rundir, "asymptotics");
    fs::create_directories(out);
    RunReport rep;
    rep.kind = "asymptotics";
    std::vector<double> times = upto(c.diag.scattering_times, std::min(c.T, run.hist.end()));
    if (times.size() < 4) {
        rep.scalars["scattering_times"] = static_cast<double>(times.size());
        emit(rep, out, "json");
        return rep;
    }
    const std::size_t n = run.hist.size();
    std::vector<Vec3> Vinf = asymptotic_momenta(run.hist, times);
    {
        std::ofstream os(path(out, "asymptotic_momenta.csv"));
        os.precision(17);
        os << "id,vx,vy,vz\n";
        for (std::size_t p = 0; p < n; ++p) os << p << ',' << Vinf[p].x << ',' << Vinf[p].y << ',' << Vinf[p].z << '\n';
        rep.manifest.push_back("asymptotic_momenta.csv");
    }

    // limit of the spatial averages on a velocity grid
    VelocityGrid grid{c.dist.v_max + 2 * run.proto.v_width, 17};
    std::vector<std::vector<double>> snaps;
    for (double t : times) snaps.push_back(spatial_average_grid(ensemble_at(run.hist, run.proto, t), grid));
    ChargeProfile Qinf = estimate_Qinf(grid, times, snaps);
    rep.scalars["Qinf_rate"] = Qinf.rate;
    write_json({{"v_max", grid.v_max}, {"n", grid.n}, {"rate", Qinf.rate}, {"values", Qinf.Q}}, path(out, "Qinf.json"));
    rep.manifest.push_back("Qinf.json");

    if (c.mode == "free") {
        double m = 0;
        for (std::size_t p = 0; p < n; ++p) m = std::max(m, norm(Vinf[p] - run.proto.V[p]));
        rep.add("free_momenta_constant", m < 1e-12, m, 1e-12, "asymptotic momenta equal the initial ones");
        emit(rep, out, "json");
        return rep;
    }

    // F_inf seen by each particle: limit of t^2 F(t, X_p(t)) without its own field
    std::shared_ptr<const FieldFunction> Fext = c.mode == "external-field" ? external_field(c) : nullptr;
    SourceHistory src = run.hist.source(true);
    InitialFieldData none;
    std::vector<Faraday> Finf(n);
    std::vector<double> fres(n);
    for (std::size_t p = 0; p < n; ++p) {
        std::vector<Faraday> samples(times.size());
        parallel_for(times.size(), [&](std::size_t k) {
            double t = times[k];
            Vec3 x = run.hist.path(p).state(t).X;
            Faraday F = Fext ? (*Fext)(t, x) : field_total(none, src, t, x, c.quad, static_cast<long>(p));
            samples[k] = F;
        });
        FinfExtrapolation e = Finf_from_simulation(times, samples);
        Finf[p] = e.F;
        fres[p] = e.residual;
    }
    ScatteringReport sr =
        modified_scattering_particles(run.hist, [&](std::size_t p, const Vec3&) { return Finf[p]; }, times);
    rep.fits["modified"] = RateFit{0, sr.modified_rate};
    rep.fits["unmodified"] = RateFit{0, sr.unmodified_rate};
    rep.add("modified_beats_unmodified", sr.modified_rate > sr.unmodified_rate, sr.modified_rate - sr.unmodified_rate, 0,
            "Cauchy-difference exponent along modified minus straight characteristics");
    Series cs{"cauchy_differences", {"t", "modified", "unmodified"}, {}};
    for (std::size_t k = 0; k < sr.modified_diff.size(); ++k)
        cs.rows.push_back({times[k + 1], sr.modified_diff[k], sr.unmodified_diff[k]});
    rep.series.push_back(cs);

    // F_inf from the extrapolated charge profile against the sampled one (diagnostic)
    if (c.mode == "self-consistent") {
        double worst = 0;
        int m = std::min<int>(c.diag.finf_check_particles, static_cast<int>(n));
        for (int i = 0; i < m; ++i) {
            std::size_t p = (n * i) / m;
            Faraday FQ = Finf_from_Q(Qinf.function(), Vinf[p]).F;
            worst = std::max(worst, (FQ - Finf[p]).max_abs() / std::max(1e-300, Finf[p].max_abs()));
        }
        rep.scalars["finf_profile_vs_samples"] = worst;
    }
    {
        std::ofstream os(path(out, "finf.csv"));
        os.precision(17);
        os << "id,E1,E2,E3,B1,B2,B3,residual\n";
        for (std::size_t p = 0; p < n; ++p)
            os << p << ',' << Finf[p].E.x << ',' << Finf[p].E.y << ',' << Finf[p].E.z << ',' << Finf[p].B.x << ','
               << Finf[p].B.y << ',' << Finf[p].B.z << ',' << fres[p] << '\n';
        rep.manifest.push_back("finf.csv");
    }
    rep.manifest.push_back("report.json");
    emit(rep, out, "json");
    return rep;
}

RunReport radiation_stage(const std::string& rundir) {
    LoadedRun run = load_run(rundir);
    const ScenarioConfig& c = run.cfg;
    const RadiationConfig& R = c.diag.radiation;
    std::string out = path(rundir, "radiation");
    fs::create_directories(out);
    RunReport rep;
    rep.kind = "radiation";

    std::shared_ptr<const FieldFunction> F;
    if (c.mode == "external-field") {
        F = external_field(c);
        if (!F) throw ConfigError("radiation: external-field mode without a field");
    } else {
        // past T the particles continue on free lines
        run.hist.extend_free(R.extend_to);
        auto src = std::make_shared<SourceHistory>(run.hist.source(true));
        F = std::make_shared<GSField>(std::make_shared<InitialFieldData>(), src, c.quad);
    }
    ExtractionOptions eo;
    eo.scale = R.scale;
    RadiationField a = extract_radiation(*F, uniform_grid(R.u_min, R.u_max, R.n_u), lebedev_rule(R.degree), eo);
    a.write_csv(path(out, "radiation.csv"));
    rep.manifest.push_back("radiation.csv");

    ConstraintResiduals cr = constraint_residuals(a);
    rep.add("constraint_residuals", std::max(cr.divergence, cr.bianchi) < 1e-12, std::max(cr.divergence, cr.bianchi), 1e-12,
            "radiation fields of div F and of the cyclic sum of dF");
    EnergyEstimate flux = flux_energy(a, kInf);
    long flagged = std::count(a.flagged.begin(), a.flagged.end(), true);
    json summary = {{"u_min", R.u_min}, {"u_max", R.u_max}, {"n_u", R.n_u}, {"directions", a.ndir()},
                    {"radii", a.radii},  {"rate", a.rate},   {"flagged", flagged}, {"max_abs", a.max_abs()},
                    {"flux_energy", flux.value}, {"flux_tail", flux.tail},
                    {"divergence_residual", cr.divergence}, {"bianchi_residual", cr.bianchi}};
    rep.scalars["flux_energy"] = flux.value;
    rep.scalars["flux_tail"] = flux.tail;
    rep.scalars["extraction_rate"] = a.rate;
    rep.scalars["flagged_nodes"] = static_cast<double>(flagged);

    if (c.mode == "self-consistent" && run.sim.scalars.count("energy_E0")) {
        std::vector<double> times = upto(c.diag.scattering_times, c.T);
        if (times.size() >= 2) {
            // extrapolation model uncertainty: log t / t against 1 / t
            std::vector<double> e1(run.hist.size()), e0(run.hist.size()), ew(run.hist.size());
            parallel_for(run.hist.size(), [&](std::size_t p) {
                std::vector<double> comp[3];
                for (double t : times) {
                    Vec3 V = run.hist.path(p).state(t).V;
                    for (int k = 0; k < 3; ++k) comp[k].push_back(V[k]);
                }
                Vec3 a1, a0;
                for (int k = 0; k < 3; ++k) {
                    a1[k] = extrapolate(times, comp[k], 1, 1).a;
                    a0[k] = extrapolate(times, comp[k], 0, 1).a;
                }
                double w = run.hist.weight(p);
                e1[p] = w * japanese(a1);
                e0[p] = w * japanese(a0);
                ew[p] = std::fabs(e1[p] - e0[p]);
            });
            double matter_inf = tree_sum(e1), extrap = tree_sum(ew);
            double E0 = run.sim.scalars.at("energy_E0");
            double drift = run.sim.scalars.count("energy_max_drift") ? run.sim.scalars.at("energy_max_drift") : 0;
            EnergyLedger L = energy_balance({0}, {E0}, {0}, matter_inf, flux, drift + extrap / E0);
            rep.scalars["E0"] = E0;
            rep.scalars["E_inf"] = L.E_inf;
            rep.scalars["matter_inf"] = matter_inf;
            rep.scalars["energy_budget"] = L.budget;
            rep.add("energy_split", L.inf_residual <= L.budget, L.inf_residual, L.budget,
                    "|E_inf - E_0| / E_0 against run drift + extrapolation + flux truncation");
            summary["E0"] = E0;
            summary["E_inf"] = L.E_inf;
            summary["matter_inf"] = matter_inf;
            summary["budget"] = L.budget;
        }
    }
    if (c.mode == "free") {
        rep.add("free_particles_no_radiation", a.max_abs() < 1e-6 * std::max(1.0, run.sim.scalars["total_charge"]), a.max_abs(),
                1e-6, "uniformly moving charges do not radiate");
    }
    write_json(summary, path(out, "summary.json"));
    rep.manifest.push_back("summary.json");
    rep.manifest.push_back("report.json");
    emit(rep, out, "json");
    return rep;
}

BoundSweep load_bound_sweep(const std::string& file) {
    json j = read_json(file);
    allow_keys(j, {"schema", "times", "radius_factors", "b1", "b2", "max_spread", "quadrature"}, "bounds");
    if (j.contains("schema") && j["schema"] != kConfigSchema)
        throw ConfigError("bounds: unsupported schema version " + j["schema"].dump());
    BoundSweep s;
    opt(j, "times", s.times);
    opt(j, "radius_factors", s.radius_factors);
    opt(j, "b1", s.b1);
    opt(j, "b2", s.b2);
    opt(j, "max_spread", s.max_spread);
    if (j.contains("quadrature")) {
        const json& q = j["quadrature"];
        allow_keys(q, {"n_tau", "n_lambda", "n_r", "sphere_degree", "rule"}, "bounds.quadrature");
        opt(q, "n_tau", s.quad.n_tau);
        opt(q, "n_lambda", s.quad.n_lambda);
        opt(q, "n_r", s.quad.n_r);
        opt(q, "sphere_degree", s.quad.sphere_degree);
        if (q.contains("rule")) {
            std::string r = q["rule"];
            if (r == "shells") s.quad.rule = ConeQuadrature::Rule::Shells;
            else if (r != "reduced") throw ConfigError("bounds.quadrature: unknown rule " + r);
        }
    }
    if (s.times.empty() || s.radius_factors.empty()) throw ConfigError("bounds: empty sweep");
    return s;
}

}  // namespace vmax
