#include "vmax/vlasov.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "vmax/parallel.hpp"
#include "vmax/quadrature.hpp"
#include "vmax/relgeom.hpp"

namespace vmax {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> split_csv(const std::string& line) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
    return out;
}
}  // namespace

double DistributionSpec::weighted_sup(int samples, std::uint64_t seed) const {
    if (!f0) return 0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    double m = 0;
    for (int i = 0; i < samples; ++i) {
        Vec3 x = x_center + x_max * Vec3{u(rng), u(rng), u(rng)};
        Vec3 v = v_center + v_max * Vec3{u(rng), u(rng), u(rng)};
        m = std::max(m, std::pow(japanese(v), N_v) * std::pow(japanese(x), N_x) * f0(x, v));
    }
    return m;
}

DistributionSpec gaussian_spec(double amp, double sx, double sv, double x_max, double v_max) {
    DistributionSpec s;
    s.f0 = [=](const Vec3& x, const Vec3& v) {
        return amp * std::exp(-norm2(x) / (2 * sx * sx) - norm2(v) / (2 * sv * sv));
    };
    s.x_max = x_max;
    s.v_max = v_max;
    s.eps = s.weighted_sup(20000, 1);
    return s;
}

double ParticleEnsemble::total_mass() const { return tree_sum(weight); }

double ParticleEnsemble::matter_energy() const {
    std::vector<double> e(size());
    for (std::size_t i = 0; i < size(); ++i) e[i] = weight[i] * japanese(V[i]);
    return tree_sum(e);
}

ParticleEnsemble sample_initial(const DistributionSpec& spec, int nx, int nv, double width, std::uint64_t jitter_seed) {
    if (nx < 2 || nv < 2) throw ConfigError("sample_initial: need at least 2 cells per axis");
    ParticleEnsemble ens;
    double hx = 2 * spec.x_max / nx, hv = 2 * spec.v_max / nv;
    ens.width = width > 0 ? width : 2 * hx;
    ens.v_width = 2 * hv;
    ens.dv = hv;
    if (!spec.f0) return ens;
    double vol = std::pow(hx * hv, 3);
    auto c = [](double lo, double h, int i) { return lo + (i + 0.5) * h; };
    std::mt19937_64 rng(jitter_seed);
    std::uniform_real_distribution<double> jit(-0.5, 0.5);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nx; ++j)
            for (int k = 0; k < nx; ++k) {
                Vec3 x = spec.x_center + Vec3{c(-spec.x_max, hx, i), c(-spec.x_max, hx, j), c(-spec.x_max, hx, k)};
                for (int a = 0; a < nv; ++a)
                    for (int b = 0; b < nv; ++b)
                        for (int d = 0; d < nv; ++d) {
                            Vec3 v = spec.v_center +
                                     Vec3{c(-spec.v_max, hv, a), c(-spec.v_max, hv, b), c(-spec.v_max, hv, d)};
                            Vec3 xp = x;
                            if (jitter_seed) {
                                xp += hx * Vec3{jit(rng), jit(rng), jit(rng)};
                                v += hv * Vec3{jit(rng), jit(rng), jit(rng)};
                            }
                            double f = spec.f0(xp, v);
                            if (f < 0) throw DomainError("sample_initial: f0 must be nonnegative");
                            if (f == 0) continue;
                            ens.X.push_back(xp);
                            ens.V.push_back(v);
                            ens.weight.push_back(f * vol);
                            ens.f.push_back(f);
                        }
            }
    return ens;
}

TrajectoryHistory::TrajectoryHistory(const ParticleEnsemble& ens) : weight_(ens.weight), width_(ens.width) {
    paths_.reserve(ens.size());
    for (std::size_t i = 0; i < ens.size(); ++i) paths_.push_back(std::make_shared<HermiteWorldline>(true));
}

void TrajectoryHistory::record(double t, const std::vector<Vec3>& X, const std::vector<Vec3>& V,
                               const std::vector<Vec3>& A) {
    if (X.size() != paths_.size()) throw ConfigError("TrajectoryHistory: ensemble size changed");
    for (std::size_t i = 0; i < paths_.size(); ++i) {
        auto& p = *paths_[i];
        if (p.size() && p.end() >= t) p.truncate_after(std::nextafter(t, -kInf));
        p.append(t, X[i], V[i], A.empty() ? Vec3{} : A[i]);
    }
}

void TrajectoryHistory::truncate_after(double t) {
    for (auto& p : paths_) p->truncate_after(t);
}

void TrajectoryHistory::extend_free(double t_end) {
    for (auto& p : paths_) {
        if (!p->size() || p->end() >= t_end) continue;
        WorldState s = p->node(p->size() - 1);
        double t = p->end(), tb = t + 1e-3;
        p->append(tb, s.X + (tb - t) * hat(s.V), s.V, {});
        if (t_end > tb) p->append(t_end, s.X + (t_end - t) * hat(s.V), s.V, {});
    }
}

TrajectoryHistory TrajectoryHistory::clone() const {
    TrajectoryHistory h;
    h.weight_ = weight_;
    h.width_ = width_;
    for (auto& p : paths_) h.paths_.push_back(std::make_shared<HermiteWorldline>(*p));
    return h;
}

SourceHistory TrajectoryHistory::source(bool extended, double t0) const {
    SourceHistory s;
    s.extended = extended;
    s.t0 = t0;
    for (std::size_t i = 0; i < paths_.size(); ++i) s.particles.push_back({weight_[i], Shape{width_}, paths_[i]});
    return s;
}

void TrajectoryHistory::write_csv(const std::string& file) const {
    std::ofstream out(file);
    if (!out) throw ConfigError("cannot write " + file);
    out.precision(17);
    out << "id,t,x,y,z,vx,vy,vz,weight,ax,ay,az\n";
    for (std::size_t i = 0; i < paths_.size(); ++i)
        for (std::size_t n = 0; n < paths_[i]->size(); ++n) {
            WorldState s = paths_[i]->node(n);
            out << i << ',' << paths_[i]->node_time(n) << ',' << s.X.x << ',' << s.X.y << ',' << s.X.z << ',' << s.V.x
                << ',' << s.V.y << ',' << s.V.z << ',' << weight_[i] << ',' << s.A.x << ',' << s.A.y << ',' << s.A.z
                << '\n';
        }
}

TrajectoryHistory TrajectoryHistory::read_csv(const std::string& file, double width) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot read " + file);
    std::string line;
    std::getline(in, line);
    if (line.rfind("id,t,x,y,z,vx,vy,vz,weight", 0) != 0) throw ConfigError("unrecognised trajectory header in " + file);
    TrajectoryHistory h;
    h.width_ = width;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto c = split_csv(line);
        if (c.size() < 9) throw ConfigError("short trajectory row in " + file);
        auto id = static_cast<std::size_t>(c[0]);
        while (h.paths_.size() <= id) {
            h.paths_.push_back(std::make_shared<HermiteWorldline>(true));
            h.weight_.push_back(0);
        }
        Vec3 A = c.size() >= 12 ? Vec3{c[9], c[10], c[11]} : Vec3{};
        h.paths_[id]->append(c[1], {c[2], c[3], c[4]}, {c[5], c[6], c[7]}, A);
        h.weight_[id] = c[8];
    }
    return h;
}

void push(ParticleEnsemble& ens, const FieldFunction* F, double t1, double dt, TrajectoryHistory* hist) {
    if (!(dt > 0)) throw ConfigError("push: dt must be positive");
    const double t0 = ens.t;
    if (t1 < t0) throw ConfigError("push: t1 before the ensemble time");
    const std::size_t n = ens.size();
    int steps = std::max(1, static_cast<int>(std::ceil((t1 - t0) / dt - 1e-12)));
    auto time_at = [&](int s) { return s == steps ? t1 : t0 + (t1 - t0) * s / steps; };
    std::vector<Vec3> A(n);
    if (!F) {
        if (!hist) steps = 1;
        if (hist) hist->record(t0, ens.X, ens.V, A);
        std::vector<Vec3> X0 = ens.X;
        for (int s = 1; s <= steps; ++s) {
            double t = time_at(s);
            for (std::size_t i = 0; i < n; ++i) ens.X[i] = X0[i] + (t - t0) * hat(ens.V[i]);
            if (hist) hist->record(t, ens.X, ens.V, A);
        }
        ens.t = t1;
        return;
    }
    push(ens, [F](std::size_t, double t, const Vec3& x, const Vec3& v) { return lorentz_force((*F)(t, x), v); },
         t1, dt, hist);
}

void push(ParticleEnsemble& ens, const ParticleForce& force_i, double t1, double dt, TrajectoryHistory* hist) {
    if (!(dt > 0)) throw ConfigError("push: dt must be positive");
    const double t0 = ens.t;
    if (t1 < t0) throw ConfigError("push: t1 before the ensemble time");
    if (t1 == t0) return;
    const std::size_t n = ens.size();
    const int steps = std::max(1, static_cast<int>(std::ceil((t1 - t0) / dt - 1e-12)));
    auto time_at = [&](int s) { return s == steps ? t1 : t0 + (t1 - t0) * s / steps; };
    std::vector<Vec3> A(n), Xs, Vs;
    for (int s = 0; s < steps; ++s) {
        double t = time_at(s), h = time_at(s + 1) - t;
        if (hist) Xs = ens.X, Vs = ens.V;
        parallel_for(n, [&](std::size_t i) {
            auto force = [&](double tt, const Vec3& x, const Vec3& v) { return force_i(i, tt, x, v); };
            Vec3 x = ens.X[i], v = ens.V[i];
            Vec3 kv1 = force(t, x, v), kx1 = hat(v);
            A[i] = kv1;
            Vec3 kv2 = force(t + h / 2, x + (h / 2) * kx1, v + (h / 2) * kv1), kx2 = hat(v + (h / 2) * kv1);
            Vec3 kv3 = force(t + h / 2, x + (h / 2) * kx2, v + (h / 2) * kv2), kx3 = hat(v + (h / 2) * kv2);
            Vec3 kv4 = force(t + h, x + h * kx3, v + h * kv3), kx4 = hat(v + h * kv3);
            ens.X[i] = x + (h / 6) * (kx1 + 2.0 * kx2 + 2.0 * kx3 + kx4);
            ens.V[i] = v + (h / 6) * (kv1 + 2.0 * kv2 + 2.0 * kv3 + kv4);
        });
        if (hist) hist->record(t, Xs, Vs, A);
        ens.t = time_at(s + 1);
    }
    if (hist) {
        parallel_for(n, [&](std::size_t i) { A[i] = force_i(i, t1, ens.X[i], ens.V[i]); });
        hist->record(t1, ens.X, ens.V, A);
    }
}

double default_dt(const ParticleEnsemble& ens, const FieldFunction* F) {
    if (!F || ens.size() == 0) return 0.1;
    std::vector<double> m(ens.size());
    parallel_for(ens.size(), [&](std::size_t i) { m[i] = (*F)(ens.t, ens.X[i]).max_abs(); });
    double mx = *std::max_element(m.begin(), m.end());
    return mx > 0 ? std::min(0.1, 0.05 / mx) : 0.1;
}

double velocity_average(const ParticleEnsemble& ens, const Vec3& x, const std::function<double(const Vec3&)>& psi,
                        double bandwidth) {
    Shape s{bandwidth};
    std::vector<double> c(ens.size());
    for (std::size_t i = 0; i < ens.size(); ++i) {
        double r = norm(x - ens.X[i]);
        c[i] = r < bandwidth ? ens.weight[i] * psi(ens.V[i]) * s.value(r) : 0.0;
    }
    return tree_sum(c);
}

double growing_bandwidth(const ParticleEnsemble& ens, double beta) { return std::max(ens.width, beta * ens.t); }

double spatial_average(const ParticleEnsemble& ens, const Vec3& v) {
    Shape s{ens.v_width};
    std::vector<double> c(ens.size());
    for (std::size_t i = 0; i < ens.size(); ++i) c[i] = ens.weight[i] * s.value(norm(v - ens.V[i]));
    return tree_sum(c);
}

double weighted_sup_norm(const ParticleEnsemble& ens, double p, double q) {
    double m = 0;
    for (std::size_t i = 0; i < ens.size(); ++i) {
        double z = conserved_weights(ens.t, ens.X[i], ens.V[i]).zbig;
        m = std::max(m, std::pow(japanese(ens.V[i]), p) * std::pow(z, q) * ens.f[i]);
    }
    return m;
}

CdvCheck cdv_identity(const std::function<double(double, const Vec3&, const Vec3&)>& g, double t, const Vec3& x,
                      int n_radial, int degree) {
    const SphereRule& rule = lebedev_rule(degree);
    CdvCheck out;
    // lhs: |v| on [0, 12] in pieces (g is assumed negligible beyond)
    const double vb[] = {0, 0.5, 1, 2, 4, 7, 12};
    for (int seg = 0; seg + 1 < 7; ++seg)
        out.lhs += integrate_gl(
            [&](double r) {
                double s = 0;
                for (std::size_t j = 0; j < rule.size(); ++j) {
                    Vec3 v = r * rule.x[j];
                    s += rule.w[j] * g(t, x - t * hat(v), v);
                }
                return 4 * kPi * r * r * s;
            },
            vb[seg], vb[seg + 1], n_radial);
    out.lhs *= t * t * t;
    // rhs: y = x - t z with |z| < 1, graded towards the boundary where check(z) blows up
    const double zb[] = {0, 0.5, 0.8, 0.9, 0.96, 0.99, 0.998, 1};
    for (int seg = 0; seg + 1 < 8; ++seg)
        out.rhs += integrate_gl(
            [&](double r) {
                double s = 0;
                for (std::size_t j = 0; j < rule.size(); ++j) {
                    Vec3 z = r * rule.x[j];
                    Vec3 v = check(z);
                    s += rule.w[j] * std::pow(japanese(v), 5) * g(t, x - t * z, v);
                }
                return 4 * kPi * r * r * s;
            },
            zb[seg], zb[seg + 1], n_radial);
    out.rhs *= t * t * t;
    return out;
}

void write_snapshot(const ParticleEnsemble& ens, const std::string& file) {
    std::ofstream out(file);
    if (!out) throw ConfigError("cannot write " + file);
    out.precision(17);
    out << "id,t,x,y,z,vx,vy,vz,weight,f\n";
    for (std::size_t i = 0; i < ens.size(); ++i)
        out << i << ',' << ens.t << ',' << ens.X[i].x << ',' << ens.X[i].y << ',' << ens.X[i].z << ',' << ens.V[i].x << ','
            << ens.V[i].y << ',' << ens.V[i].z << ',' << ens.weight[i] << ',' << ens.f[i] << '\n';
    // shape widths ride along as a trailing comment line
    out << "# width=" << ens.width << " v_width=" << ens.v_width << " dv=" << ens.dv << '\n';
}

ParticleEnsemble read_snapshot(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot read " + file);
    std::string line;
    std::getline(in, line);
    if (line != "id,t,x,y,z,vx,vy,vz,weight,f") throw ConfigError("unrecognised snapshot header in " + file);
    ParticleEnsemble ens;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::sscanf(line.c_str(), "# width=%lf v_width=%lf dv=%lf", &ens.width, &ens.v_width, &ens.dv);
            continue;
        }
        auto c = split_csv(line);
        if (c.size() != 10) throw ConfigError("bad snapshot row in " + file);
        ens.t = c[1];
        ens.X.push_back({c[2], c[3], c[4]});
        ens.V.push_back({c[5], c[6], c[7]});
        ens.weight.push_back(c[8]);
        ens.f.push_back(c[9]);
    }
    return ens;
}

}  // namespace vmax
