#include "vmax/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "vmax/errors.hpp"
#include "vmax/fieldsolve.hpp"
#include "vmax/fit.hpp"
#include "vmax/gskernels.hpp"
#include "vmax/parallel.hpp"
#include "vmax/quadrature.hpp"

namespace vmax {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Upper end of the radial variable on |z| + |z + vhat| < 1 in direction om.
double rho_max(const Vec3& om, const Vec3& vh) {
    return (1 - norm2(vh)) / (2 * (1 + dot(om, vh)));
}

// int over the z-domain of g(om, rho, w) d rho d om (the radial Jacobian is left to g).
template <class G>
Form6 z_integral_fixed(const Vec3& v, int degree, int n_rho, long& skipped, G&& g) {
    Vec3 vh = hat(v);
    const double guard = 1 / (4 * (1 + norm2(v)));  // 1/(4 v0^2)
    const SphereRule& rule = lebedev_rule(degree);
    // graded towards rho_max, where w runs off to infinity
    static const double cuts[] = {0, 0.5, 0.8, 0.92, 0.97, 0.99, 0.997, 1};
    std::vector<Form6> per(rule.size());
    std::vector<long> skip(rule.size(), 0);
    parallel_for(rule.size(), [&](std::size_t j) {
        const Vec3& om = rule.x[j];
        double rm = rho_max(om, vh);
        Form6 acc{};
        const GaussRule& gl = gauss_legendre(n_rho);
        for (int s = 0; s + 1 < 8; ++s) {
            double a = cuts[s] * rm, b = cuts[s + 1] * rm;
            for (std::size_t i = 0; i < gl.x.size(); ++i) {
                double rho = 0.5 * (a + b) + 0.5 * (b - a) * gl.x[i];
                double wq = 0.5 * (b - a) * gl.w[i];
                if (1 - rho < guard) {
                    ++skip[j];
                    continue;
                }
                Vec3 y = (rho * om + vh) / (1 - rho);
                if (norm2(y) >= 1) {
                    ++skip[j];
                    continue;
                }
                Form6 c = g(om, rho, check(y));
                for (int k = 0; k < 6; ++k) acc[k] += wq * c[k];
            }
        }
        for (int k = 0; k < 6; ++k) acc[k] *= 4 * kPi * rule.w[j];
        per[j] = acc;
    });
    Form6 out{};
    std::vector<double> comp(per.size());
    for (int k = 0; k < 6; ++k) {
        for (std::size_t j = 0; j < per.size(); ++j) comp[j] = per[j][k];
        out[k] = tree_sum(comp);
    }
    for (long s : skip) skipped += s;
    return out;
}

// Profiles far from vhat occupy a small cone of directions; raise the angular degree until two
// successive rules agree.
template <class G>
Form6 z_integral(const Vec3& v, const FinfQuadrature& quad, FinfValue& out, G&& g) {
    int deg = quad.degree;
    long skipped = 0;
    Form6 prev = z_integral_fixed(v, deg, quad.n_rho, skipped, g);
    while (deg < quad.max_degree) {
        int next = std::min(quad.max_degree, deg + 24);
        long sk = 0;
        Form6 cur = z_integral_fixed(v, next, quad.n_rho, sk, g);
        double diff = 0, mag = 0;
        for (int k = 0; k < 6; ++k) {
            diff = std::max(diff, std::fabs(cur[k] - prev[k]));
            mag = std::max(mag, std::fabs(cur[k]));
        }
        prev = cur;
        skipped = sk;
        deg = next;
        if (diff <= quad.tol * mag || mag == 0) break;
    }
    out.skipped = skipped;
    out.degree = deg;
    return prev;
}
}  // namespace

Vec3 VelocityGrid::node(std::size_t idx) const {
    std::size_t i = idx / (static_cast<std::size_t>(n) * n), j = (idx / n) % n, k = idx % n;
    double h = spacing();
    return {-v_max + i * h, -v_max + j * h, -v_max + k * h};
}

double ChargeProfile::value(const Vec3& v) const {
    double h = grid.spacing();
    double c[3];
    int i0[3];
    for (int a = 0; a < 3; ++a) {
        double s = (v[a] + grid.v_max) / h;
        if (s < 0 || s > grid.n - 1) return 0;
        i0[a] = std::min(static_cast<int>(s), grid.n - 2);
        c[a] = s - i0[a];
    }
    double out = 0;
    for (int da = 0; da < 2; ++da)
        for (int db = 0; db < 2; ++db)
            for (int dc = 0; dc < 2; ++dc) {
                std::size_t idx = (static_cast<std::size_t>(i0[0] + da) * grid.n + (i0[1] + db)) * grid.n + (i0[2] + dc);
                out += (da ? c[0] : 1 - c[0]) * (db ? c[1] : 1 - c[1]) * (dc ? c[2] : 1 - c[2]) * Q[idx];
            }
    return out;
}

VelocityProfile ChargeProfile::function() const {
    return [p = *this](const Vec3& v) { return p.value(v); };
}

ChargeProfile estimate_Qinf(const VelocityGrid& grid, const std::vector<double>& times,
                            const std::vector<std::vector<double>>& snapshots, double m, double delta) {
    if (times.size() < 3) throw ConfigError("estimate_Qinf: needs at least 3 snapshots");
    if (snapshots.size() != times.size()) throw ConfigError("estimate_Qinf: times and snapshots differ in length");
    for (auto& s : snapshots)
        if (s.size() != grid.size()) throw ConfigError("estimate_Qinf: snapshot does not match the grid");
    ChargeProfile p;
    p.grid = grid;
    p.Q.resize(grid.size());
    std::vector<double> res(grid.size());
    parallel_for(grid.size(), [&](std::size_t c) {
        std::vector<double> y(times.size());
        bool nonneg = true;
        for (std::size_t k = 0; k < times.size(); ++k) {
            y[k] = snapshots[k][c];
            nonneg = nonneg && y[k] >= 0;
        }
        Extrapolation e = extrapolate(times, y, m, delta);
        // a nonnegative sequence has a nonnegative limit
        p.Q[c] = nonneg ? std::max(0.0, e.a) : e.a;
        res[c] = e.residual;
    });
    p.residual = *std::max_element(res.begin(), res.end());
    std::vector<double> dev(times.size(), 0.0);
    for (std::size_t k = 0; k < times.size(); ++k)
        for (std::size_t c = 0; c < grid.size(); ++c) dev[k] = std::max(dev[k], std::fabs(snapshots[k][c] - p.Q[c]));
    bool positive = std::all_of(dev.begin(), dev.end(), [](double d) { return d > 0; });
    if (positive && times.size() >= 4) p.rate = fit_rate(times, dev, m).p;
    return p;
}

std::vector<double> spatial_average_grid(const ParticleEnsemble& ens, const VelocityGrid& grid) {
    std::vector<double> out(grid.size());
    parallel_for(grid.size(), [&](std::size_t c) { out[c] = spatial_average(ens, grid.node(c)); });
    return out;
}

ProfileReport current_profile_check(const ParticleEnsemble& ens, const std::vector<Vec3>& V_inf,
                                    const std::vector<Vec3>& xi_points, double beta) {
    const double t = ens.t;
    if (t < 3) throw DomainError("current_profile_check: needs t >= 3");
    if (V_inf.size() != ens.size()) throw ConfigError("current_profile_check: one asymptotic momentum per particle");
    ProfileReport r;
    r.t = t;
    Shape k{beta};
    for (const Vec3& xi : xi_points) {
        if (norm(xi) >= 1) throw DomainError("current_profile_check: |x| >= t lies outside the cone");
        for (int mu = 0; mu < 4; ++mu) {
            std::vector<double> a(ens.size()), b(ens.size());
            for (std::size_t p = 0; p < ens.size(); ++p) {
                Vec3 vh = hat(ens.V[p]), vi = hat(V_inf[p]);
                double cm = mu == 0 ? 1 : vh[mu - 1], pm = mu == 0 ? 1 : vi[mu - 1];
                // t^3 S_{beta t}(t xi - X) = S_beta(xi - X/t)
                a[p] = ens.weight[p] * cm * k.value(norm(xi - ens.X[p] / t));
                b[p] = ens.weight[p] * pm * k.value(norm(xi - vi));
            }
            ProfilePoint pt{xi, mu, tree_sum(a), tree_sum(b), 0};
            pt.residual = std::fabs(pt.current - pt.profile);
            r.max_residual = std::max(r.max_residual, pt.residual);
            r.points.push_back(pt);
        }
    }
    return r;
}

FinfValue Finf_from_Q(const VelocityProfile& Q, const Vec3& v, const FinfQuadrature& quad) {
    FinfValue out;
    Form6 I = z_integral(v, quad, out, [&](const Vec3& om, double rho, const Vec3& w) {
        double q = Q(w);
        Form6 c{};
        if (q == 0) return c;
        Form6 k = eval_kernel({Kernel::WT}, om, w);
        double f = std::pow(japanese(w), 5) * q / std::pow(1 - rho, 3);  // |z|^2 of dz cancels
        for (int i = 0; i < 6; ++i) c[i] = k[i] * f;
        return c;
    });
    for (double& c : I) c *= -1 / (4 * kPi);
    out.F = Faraday::from_form(I);
    return out;
}

FinfValue Finf_alternative(const std::array<VelocityProfile, 3>& Qboost, const Vec3& v, const FinfQuadrature& quad) {
    FinfValue out;
    Form6 I = z_integral(v, quad, out, [&](const Vec3& om, double rho, const Vec3& w) {
        (void)om;
        double qb[4] = {0, Qboost[0](w), Qboost[1](w), Qboost[2](w)};
        Vec3 wh = hat(w);
        double lo[4] = {-1, wh.x, wh.y, wh.z};  // lowered vhat
        double f = std::pow(japanese(w), 5) * rho / std::pow(1 - rho, 4);  // dz / |z| = rho d rho d om
        Form6 c{};
        for (int p = 0; p < 6; ++p) {
            int mu = kPairMu[p], nu = kPairNu[p];
            c[p] = f * (lo[mu] * qb[nu] - lo[nu] * qb[mu]);
        }
        return c;
    });
    for (double& c : I) c *= 1 / (4 * kPi);
    out.F = Faraday::from_form(I);
    return out;
}

std::array<VelocityProfile, 3> boost_profiles(const VelocityProfile& Q, double h) {
    std::array<VelocityProfile, 3> out;
    for (int i = 0; i < 3; ++i)
        out[i] = [Q, h, i](const Vec3& v) {
            Vec3 e{};
            e[i] = h;
            double d = (8 * (Q(v + e) - Q(v - e)) - (Q(v + 2.0 * e) - Q(v - 2.0 * e))) / (12 * h);
            return japanese(v) * d + hat(v)[i] * Q(v);
        };
    return out;
}

FinfExtrapolation Finf_from_simulation(const std::vector<double>& times, const std::vector<Faraday>& samples,
                                       double m, double delta) {
    if (times.size() < 3 || samples.size() != times.size()) throw ConfigError("Finf_from_simulation: needs >= 3 samples");
    for (double t : times)
        if (t < 3) throw ConfigError("Finf_from_simulation: sample times must be >= 3");
    FinfExtrapolation out;
    Form6 lim{};
    for (int c = 0; c < 6; ++c) {
        std::vector<double> y(times.size());
        for (std::size_t k = 0; k < times.size(); ++k) y[k] = times[k] * times[k] * samples[k].form()[c];
        Extrapolation e = extrapolate(times, y, m, delta);
        lim[c] = e.a;
        out.residual = std::max(out.residual, e.residual);
    }
    out.F = Faraday::from_form(lim);
    return out;
}

Vec3 correction_vector(double t, const Vec3& v, const Faraday& G) {
    if (!(t > 0)) throw DomainError("correction: t must be positive");
    Vec3 vh = hat(v);
    double u[4] = {1, vh.x, vh.y, vh.z};
    double g0 = 0;
    for (int mu = 0; mu < 4; ++mu) g0 += u[mu] * G(mu, 0);
    Vec3 c;
    for (int i = 1; i <= 3; ++i) {
        double gi = 0;
        for (int mu = 0; mu < 4; ++mu) gi += u[mu] * G(mu, i);
        c[i - 1] = -std::log(t) / japanese(v) * (gi + vh[i - 1] * g0);
    }
    return c;
}

Vec3 modified_characteristics(double t, const Vec3& x, const Vec3& v, const Faraday& Finf) {
    return x + t * hat(v) + correction_vector(t, v, Finf);
}

CorrectionCoefficients correction_coefficients(double t, const Vec3& v, const Faraday& Finf,
                                               const std::array<Faraday, 3>& boost_Finf,
                                               const std::array<Faraday, 3>& rot_Finf) {
    CorrectionCoefficients c;
    c.C = correction_vector(t, v, Finf);
    c.C_S = -1.0 * c.C;
    for (int k = 0; k < 3; ++k) {
        c.C_boost[k] = correction_vector(t, v, boost_Finf[k]);
        c.C_rot[k] = correction_vector(t, v, rot_Finf[k]);
    }
    return c;
}

namespace {
// Cauchy differences over interior probes (both maps) and exterior probes (straight lines only), and
// their plain power-law rates. For a log t / t law the fitted exponent is about 1 - 1/log t.
template <class D>
void cauchy(ScatteringReport& r, std::size_t np, D&& diff) {
    const std::size_t nk = r.times.size() - 1;
    std::vector<double> ext(nk, 0.0);
    bool any_ext = false;
    r.modified_diff.assign(nk, 0.0);
    r.unmodified_diff.assign(nk, 0.0);
    for (std::size_t k = 0; k < nk; ++k)
        for (std::size_t p = 0; p < np; ++p) {
            if (r.exterior[p]) {
                any_ext = true;
                ext[k] = std::max(ext[k], diff(k, p, false));
                continue;
            }
            r.modified_diff[k] = std::max(r.modified_diff[k], diff(k, p, true));
            r.unmodified_diff[k] = std::max(r.unmodified_diff[k], diff(k, p, false));
        }
    std::vector<double> tm(r.times.begin() + 1, r.times.end());
    auto rate = [&](const std::vector<double>& d) {
        if (tm.size() < 4) return 0.0;
        std::vector<double> y;
        for (double x : d) y.push_back(std::max(x, 1e-300));
        return fit_rate(tm, y).p;
    };
    r.modified_rate = rate(r.modified_diff);
    r.unmodified_rate = rate(r.unmodified_diff);
    if (any_ext) r.exterior_unmodified_rate = rate(ext);
}

void check_times(const std::vector<double>& times) {
    if (times.size() < 3) throw ConfigError("modified scattering: needs >= 3 times");
    for (std::size_t k = 0; k < times.size(); ++k)
        if (times[k] < 3 || (k && !(times[k] > times[k - 1]))) throw ConfigError("times must increase from t >= 3");
}
}  // namespace

ScatteringReport modified_scattering_diagnostic(const PhaseFn& f, const std::function<Faraday(const Vec3&)>& Finf,
                                                const std::vector<std::pair<Vec3, Vec3>>& probes,
                                                const std::vector<double>& times) {
    check_times(times);
    ScatteringReport r;
    r.times = times;
    std::size_t np = probes.size();
    std::vector<Faraday> Fi(np);
    for (std::size_t p = 0; p < np; ++p) Fi[p] = Finf(probes[p].second);
    std::vector<std::vector<double>> hm(times.size(), std::vector<double>(np)), hu = hm;
    for (std::size_t k = 0; k < times.size(); ++k)
        parallel_for(np, [&](std::size_t p) {
            const auto& [x, v] = probes[p];
            hm[k][p] = f(times[k], modified_characteristics(times[k], x, v, Fi[p]), v);
            hu[k][p] = f(times[k], x + times[k] * hat(v), v);
        });
    double peak = 0;
    for (double h : hm.back()) peak = std::max(peak, std::fabs(h));
    for (std::size_t p = 0; p < np; ++p) {
        r.f_inf.push_back(hm.back()[p]);
        r.low_confidence.push_back(std::fabs(hm.back()[p]) < 1e-3 * peak);
        r.exterior.push_back(norm(probes[p].first) >= times.front());
    }
    cauchy(r, np, [&](std::size_t k, std::size_t p, bool mod) {
        const auto& h = mod ? hm : hu;
        return std::fabs(h[k + 1][p] - h[k][p]);
    });
    return r;
}

ScatteringReport modified_scattering_particles(const TrajectoryHistory& hist,
                                               const std::function<Faraday(std::size_t, const Vec3&)>& Finf,
                                               const std::vector<double>& times) {
    check_times(times);
    ScatteringReport r;
    r.times = times;
    std::size_t np = hist.size();
    std::vector<std::vector<Vec3>> xm(times.size(), std::vector<Vec3>(np)), xu = xm;
    for (std::size_t k = 0; k < times.size(); ++k)
        parallel_for(np, [&](std::size_t p) {
            WorldState s = hist.path(p).state(times[k]);
            xu[k][p] = s.X - times[k] * hat(s.V);
            xm[k][p] = xu[k][p] - correction_vector(times[k], s.V, Finf(p, s.V));
        });
    for (std::size_t p = 0; p < np; ++p) {
        r.f_inf.push_back(hist.weight(p));
        r.low_confidence.push_back(false);
        r.exterior.push_back(false);  // particles stay inside the light cone of the support
    }
    cauchy(r, np, [&](std::size_t k, std::size_t p, bool mod) {
        const auto& x = mod ? xm : xu;
        return norm(x[k + 1][p] - x[k][p]);
    });
    return r;
}

}  // namespace vmax
