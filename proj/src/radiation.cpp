#include "vmax/radiation.hpp"

#include <gsl/gsl_sf_legendre.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>

#include "vmax/errors.hpp"
#include "vmax/fit.hpp"
#include "vmax/parallel.hpp"

namespace vmax {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Neville extrapolation of y(x) to x = 0 through the first n points.
double extrapolate_zero(const double* x, const double* y, int n) {
    double p[8];
    for (int i = 0; i < n; ++i) p[i] = y[i];
    for (int m = 1; m < n; ++m)
        for (int i = 0; i + m < n; ++i) p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
    return p[0];
}

// Real spherical-harmonic interpolant of a vector field sampled on a Lebedev rule (projection is exact
// up to degree rule.degree / 2).
class SphereInterp {
public:
    SphereInterp(const SphereRule& rule, const std::vector<Vec3>& vals) : L_(rule.degree / 2) {
        nb_ = (L_ + 1) * (L_ + 1);
        c_.assign(nb_, Vec3{});
        std::vector<double> y(nb_);
        for (std::size_t j = 0; j < rule.size(); ++j) {
            basis(rule.x[j], y);
            for (int b = 0; b < nb_; ++b) c_[b] += (4 * kPi * rule.w[j] * y[b]) * vals[j];
        }
    }
    Vec3 operator()(const Vec3& om) const {
        std::vector<double> y(nb_);
        basis(om, y);
        Vec3 s{};
        for (int b = 0; b < nb_; ++b) s += y[b] * c_[b];
        return s;
    }

private:
    void basis(const Vec3& om, std::vector<double>& y) const {
        double ct = std::clamp(om.z, -1.0, 1.0), ph = std::atan2(om.y, om.x);
        std::vector<double> P(gsl_sf_legendre_array_n(L_));
        gsl_sf_legendre_array_e(GSL_SF_LEGENDRE_SPHARM, L_, ct, -1, P.data());
        int b = 0;
        for (int l = 0; l <= L_; ++l) {
            y[b++] = P[gsl_sf_legendre_array_index(l, 0)];
            for (int m = 1; m <= l; ++m) {
                double p = std::sqrt(2.0) * P[gsl_sf_legendre_array_index(l, m)];
                y[b++] = p * std::cos(m * ph);
                y[b++] = p * std::sin(m * ph);
            }
        }
    }
    int L_, nb_;
    std::vector<Vec3> c_;
};

Vec3 cartesian(const NullFrame& fr, const std::array<double, 2>& a) { return a[0] * fr.e_theta + a[1] * fr.e_phi; }

// d/ds g(normalize(om + s W)) at s = 0
template <class G>
Vec3 sphere_derivative(const G& g, const Vec3& om, const Vec3& W) {
    const double h = 1e-3;
    auto at = [&](double s) { return g(unit(om + s * W)); };
    return (8.0 * (at(h) - at(-h)) - (at(2 * h) - at(-2 * h))) / (12 * h);
}
}  // namespace

double RadiationField::max_abs() const {
    double m = 0;
    for (auto& a : values) m = std::max({m, std::fabs(a[0]), std::fabs(a[1])});
    return m;
}

RadiationField RadiationField::like() const {
    RadiationField r;
    r.u = u;
    r.dirs = dirs;
    r.values.assign(values.size(), {0, 0});
    r.flagged.assign(values.size(), false);
    return r;
}

void RadiationField::write_csv(const std::string& file) const {
    std::ofstream os(file);
    if (!os) throw ConfigError("cannot write " + file);
    os << "u,theta,phi,alphabar_theta,alphabar_phi\n" << std::setprecision(17);
    for (std::size_t i = 0; i < nu(); ++i)
        for (std::size_t j = 0; j < ndir(); ++j) {
            NullFrame fr = NullFrame::at(dirs.x[j]);
            os << u[i] << ',' << fr.theta << ',' << fr.phi << ',' << at(i, j)[0] << ',' << at(i, j)[1] << '\n';
        }
}

std::vector<double> uniform_grid(double a, double b, int n) {
    if (n < 2 || !(b > a)) throw ConfigError("uniform_grid: needs n >= 2 and b > a");
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = a + (b - a) * i / (n - 1);
    return g;
}

namespace {
// Shared extraction loop: sample(t, x, omega) returns ncomp values already multiplied by r.
template <class S>
void extract_loop(const std::vector<double>& u, const SphereRule& dirs, const ExtractionOptions& opt, int ncomp,
                  S&& sample, std::vector<double>& out, std::vector<bool>& flagged, double& rate) {
    const int m = static_cast<int>(opt.radii.size());
    if (m < 2 || m > 8) throw ConfigError("extraction: between 2 and 8 radii");
    std::vector<double> r(m), x(m);
    for (int k = 0; k < m; ++k) {
        r[k] = opt.radii[k] * opt.scale;
        x[k] = 1 / r[k];
        if (k && !(r[k] > r[k - 1])) throw ConfigError("extraction radii must increase");
    }
    const std::size_t n = u.size() * dirs.size();
    out.assign(n * ncomp, 0.0);
    std::vector<double> coarse(n * ncomp), dev(n * ncomp * m);
    parallel_for(n, [&](std::size_t idx) {
        std::size_t iu = idx / dirs.size(), j = idx % dirs.size();
        std::vector<double> y(m * ncomp);
        for (int k = 0; k < m; ++k) {
            std::array<double, 6> s = sample(r[k] + u[iu], r[k] * dirs.x[j], dirs.x[j], r[k]);
            for (int c = 0; c < ncomp; ++c) y[c * m + k] = s[c];
        }
        for (int c = 0; c < ncomp; ++c) {
            double lim = extrapolate_zero(x.data(), y.data() + c * m, m);
            out[idx * ncomp + c] = lim;
            coarse[idx * ncomp + c] = extrapolate_zero(x.data(), y.data() + c * m, m - 1);
            for (int k = 0; k < m; ++k) dev[(idx * ncomp + c) * m + k] = std::fabs(y[c * m + k] - lim);
        }
    });
    double peak = 0;
    for (double v : out) peak = std::max(peak, std::fabs(v));
    flagged.assign(n, false);
    for (std::size_t idx = 0; idx < n; ++idx)
        for (int c = 0; c < ncomp; ++c)
            if (std::fabs(out[idx * ncomp + c] - coarse[idx * ncomp + c]) > opt.tol * peak) flagged[idx] = true;
    std::vector<double> d(m, 0.0);
    for (std::size_t i = 0; i < n * ncomp; ++i)
        for (int k = 0; k < m; ++k) d[k] = std::max(d[k], dev[i * m + k]);
    rate = 0;
    if (m >= 4 && std::all_of(d.begin(), d.end(), [](double v) { return v > 0; })) rate = -fit_rate(r, d).p;
}
}  // namespace

RadiationField extract_radiation(const FieldFunction& F, const std::vector<double>& u, const SphereRule& dirs,
                                 const ExtractionOptions& opt) {
    RadiationField a;
    a.u = u;
    a.dirs = dirs;
    for (double r : opt.radii) a.radii.push_back(r * opt.scale);
    std::vector<double> flat;
    extract_loop(u, dirs, opt, 2,
                 [&](double t, const Vec3& x, const Vec3&, double r) {
                     NullComponents nc = null_decompose(F(t, x), x);
                     return std::array<double, 6>{r * nc.alphabar[0], r * nc.alphabar[1]};
                 },
                 flat, a.flagged, a.rate);
    a.values.resize(u.size() * dirs.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] = {flat[2 * i], flat[2 * i + 1]};
    return a;
}

std::vector<double> extract_component(const FieldFunction& F, int mu, int nu, const std::vector<double>& u,
                                      const SphereRule& dirs, const ExtractionOptions& opt) {
    std::vector<double> out;
    std::vector<bool> flagged;
    double rate = 0;
    extract_loop(u, dirs, opt, 1,
                 [&](double t, const Vec3& x, const Vec3&, double r) {
                     return std::array<double, 6>{r * F(t, x)(mu, nu)};
                 },
                 out, flagged, rate);
    return out;
}

RadiationField u_derivative(const RadiationField& a) {
    const std::size_t n = a.nu();
    if (n < 5) throw DomainError("u_derivative: needs at least 5 u nodes");
    const double h = a.du();
    RadiationField d = a.like();
    for (std::size_t j = 0; j < a.ndir(); ++j)
        for (int c = 0; c < 2; ++c) {
            auto f = [&](std::size_t i) { return a.at(i, j)[c]; };
            for (std::size_t i = 0; i < n; ++i) {
                double v;
                if (i >= 2 && i + 2 < n)
                    v = (-f(i + 2) + 8 * f(i + 1) - 8 * f(i - 1) + f(i - 2)) / (12 * h);
                else if (i == 0)
                    v = (-25 * f(0) + 48 * f(1) - 36 * f(2) + 16 * f(3) - 3 * f(4)) / (12 * h);
                else if (i == 1)
                    v = (-3 * f(0) - 10 * f(1) + 18 * f(2) - 6 * f(3) + f(4)) / (12 * h);
                else if (i == n - 1)
                    v = (25 * f(n - 1) - 48 * f(n - 2) + 36 * f(n - 3) - 16 * f(n - 4) + 3 * f(n - 5)) / (12 * h);
                else
                    v = (3 * f(n - 1) + 10 * f(n - 2) - 18 * f(n - 3) + 6 * f(n - 4) - f(n - 5)) / (12 * h);
                d.at(i, j)[c] = v;
            }
        }
    return d;
}

RadiationField radiation_of_derivative(const RadiationField& base, const SymmetryField& Z) {
    RadiationField out = base.like();
    const std::size_t nd = base.ndir();
    std::vector<NullFrame> fr(nd);
    for (std::size_t j = 0; j < nd; ++j) fr[j] = NullFrame::at(base.dirs.x[j]);
    const ZId id = Z.id;
    const bool angular = id == ZId::Om12 || id == ZId::Om13 || id == ZId::Om23 || id == ZId::Om01 ||
                         id == ZId::Om02 || id == ZId::Om03;
    const bool needs_du = id != ZId::Om12 && id != ZId::Om13 && id != ZId::Om23;
    RadiationField du = needs_du ? u_derivative(base) : base.like();
    if (angular && 2 * (base.dirs.degree / 2) < 4) throw DomainError("radiation_of_derivative: angular rule too coarse");
    auto jac = Z.jacobian();
    parallel_for(base.nu(), [&](std::size_t iu) {
        std::unique_ptr<SphereInterp> interp;
        if (angular) {
            std::vector<Vec3> cart(nd);
            for (std::size_t j = 0; j < nd; ++j) cart[j] = cartesian(fr[j], base.at(iu, j));
            interp = std::make_unique<SphereInterp>(base.dirs, cart);
        }
        const double u = base.u[iu];
        for (std::size_t j = 0; j < nd; ++j) {
            const Vec3& om = base.dirs.x[j];
            const auto& a = base.at(iu, j);
            const auto& da = du.at(iu, j);
            std::array<double, 2> r{};
            switch (id) {
                case ZId::Dt: r = da; break;
                case ZId::D1:
                case ZId::D2:
                case ZId::D3: {
                    double wi = om[static_cast<int>(id) - static_cast<int>(ZId::D1)];
                    r = {-wi * da[0], -wi * da[1]};
                    break;
                }
                case ZId::S: r = {u * da[0] + a[0], u * da[1] + a[1]}; break;
                case ZId::Om12:
                case ZId::Om13:
                case ZId::Om23: {
                    auto zc = Z.coefficients(0, om);
                    Vec3 V{zc[1], zc[2], zc[3]};
                    Vec3 acart = cartesian(fr[j], a);
                    Vec3 L = sphere_derivative(*interp, om, V);
                    for (int i = 0; i < 3; ++i)
                        for (int k = 0; k < 3; ++k) L[i] += jac[i + 1][k + 1] * acart[k];
                    r = {dot(L, fr[j].e_theta), dot(L, fr[j].e_phi)};
                    break;
                }
                default: {  // boosts
                    int i = static_cast<int>(id) - static_cast<int>(ZId::Om01);
                    double wi = om[i];
                    Vec3 ei{};
                    ei[i] = 1;
                    Vec3 W = ei - wi * om;
                    Vec3 D = sphere_derivative(*interp, om, W);
                    for (int A = 0; A < 2; ++A) r[A] = -wi * u * da[A] - 2 * wi * a[A] + dot(D, fr[j].e(A));
                    break;
                }
            }
            out.at(iu, j) = r;
        }
    });
    return out;
}

namespace {
// omega_mu and omega_mu^{e_A} with omega_0 = -1 and omega_0^{e_A} = 0
void omega_components(const NullFrame& fr, double w[4], double wA[4][2]) {
    w[0] = -1;
    wA[0][0] = wA[0][1] = 0;
    for (int i = 0; i < 3; ++i) {
        w[i + 1] = fr.omega[i];
        wA[i + 1][0] = fr.e_theta[i];
        wA[i + 1][1] = fr.e_phi[i];
    }
}
}  // namespace

std::vector<double> component_radiation(const RadiationField& a, int mu, int nu) {
    if (mu < 0 || mu > 3 || nu < 0 || nu > 3) throw DomainError("component_radiation: index out of range");
    std::vector<double> out(a.values.size());
    for (std::size_t j = 0; j < a.ndir(); ++j) {
        NullFrame fr = NullFrame::at(a.dirs.x[j]);
        double w[4], wA[4][2];
        omega_components(fr, w, wA);
        for (std::size_t iu = 0; iu < a.nu(); ++iu) {
            const auto& ab = a.at(iu, j);
            double s = 0;
            for (int A = 0; A < 2; ++A) s += (wA[mu][A] * w[nu] - w[mu] * wA[nu][A]) * ab[A];
            out[iu * a.ndir() + j] = -0.5 * s;
        }
    }
    return out;
}

ConstraintResiduals constraint_residuals(const RadiationField& a) {
    RadiationField d = u_derivative(a);
    std::array<std::vector<double>, 16> R;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) R[mu * 4 + nu] = component_radiation(d, mu, nu);
    ConstraintResiduals out;
    const double etad[4] = {-1, 1, 1, 1};
    for (std::size_t j = 0; j < a.ndir(); ++j) {
        NullFrame fr = NullFrame::at(a.dirs.x[j]);
        double w[4], wA[4][2];
        omega_components(fr, w, wA);
        for (std::size_t iu = 0; iu < a.nu(); ++iu) {
            std::size_t idx = iu * a.ndir() + j;
            for (int nu = 0; nu < 4; ++nu) {
                double s = 0;
                for (int mu = 0; mu < 4; ++mu) s += etad[mu] * w[mu] * R[mu * 4 + nu][idx];
                out.divergence = std::max(out.divergence, std::fabs(s));
            }
            for (int l = 0; l < 4; ++l)
                for (int mu = l + 1; mu < 4; ++mu)
                    for (int nu = mu + 1; nu < 4; ++nu) {
                        double s = w[l] * R[mu * 4 + nu][idx] + w[mu] * R[nu * 4 + l][idx] + w[nu] * R[l * 4 + mu][idx];
                        out.bianchi = std::max(out.bianchi, std::fabs(s));
                    }
        }
    }
    return out;
}

EnergyEstimate flux_energy(const RadiationField& a, double tol) {
    const std::size_t n = a.nu();
    if (n < 3) throw DomainError("flux_energy: needs at least 3 u nodes");
    std::vector<double> slice(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> s(a.ndir());
        for (std::size_t j = 0; j < a.ndir(); ++j) {
            const auto& v = a.at(i, j);
            s[j] = 4 * kPi * a.dirs.w[j] * (v[0] * v[0] + v[1] * v[1]);
        }
        slice[i] = 0.25 * tree_sum(s);
    }
    const double h = a.du();
    EnergyEstimate e;
    if (n % 2 == 1) {
        double s = slice[0] + slice[n - 1];
        for (std::size_t i = 1; i + 1 < n; ++i) s += (i % 2 ? 4 : 2) * slice[i];
        e.value = s * h / 3;
    } else {
        double s = 0.5 * (slice[0] + slice[n - 1]);
        for (std::size_t i = 1; i + 1 < n; ++i) s += slice[i];
        e.value = s * h;
    }
    e.tail = (slice[0] + slice[n - 1]) * (a.u.back() - a.u.front());
    if (e.value > 0 && e.tail > tol * e.value)
        throw DomainError("flux_energy: u window truncates the flux (tail " + std::to_string(e.tail) + ")");
    return e;
}

EnergyEstimate cone_energy(const FieldFunction& F, double ubar, int n_u, int degree) {
    if (!(ubar > 0)) return {};
    const SphereRule& rule = lebedev_rule(degree);
    const GaussRule& gl = gauss_legendre(8);
    std::vector<double> seg(n_u);
    parallel_for(n_u, [&](std::size_t s) {
        double a = -ubar + 2 * ubar * s / n_u, b = -ubar + 2 * ubar * (s + 1) / n_u, acc = 0;
        for (std::size_t i = 0; i < gl.x.size(); ++i) {
            double u = 0.5 * (a + b) + 0.5 * (b - a) * gl.x[i];
            double t = 0.5 * (ubar + u), r = 0.5 * (ubar - u);
            double sph = 0;
            for (std::size_t j = 0; j < rule.size(); ++j) {
                Vec3 x = r * rule.x[j];
                NullComponents nc = null_decompose(F(t, x), r > 0 ? x : rule.x[j]);
                double q = nc.alphabar[0] * nc.alphabar[0] + nc.alphabar[1] * nc.alphabar[1] + nc.rho * nc.rho +
                           nc.sigma * nc.sigma;
                sph += 4 * kPi * rule.w[j] * q;
            }
            acc += 0.5 * (b - a) * gl.w[i] * 0.25 * sph * r * r;
        }
        seg[s] = acc;
    });
    return {tree_sum(seg), 0};
}

EnergyEstimate slice_energy(const FieldFunction& F, double t, double R, int n_r, int degree, double tol) {
    const SphereRule& rule = lebedev_rule(degree);
    const GaussRule& gl = gauss_legendre(8);
    auto shell = [&](double r) {
        double s = 0;
        for (std::size_t j = 0; j < rule.size(); ++j) s += 4 * kPi * rule.w[j] * F(t, r * rule.x[j]).norm2();
        return 0.5 * s * r * r;
    };
    std::vector<double> seg(n_r);
    parallel_for(n_r, [&](std::size_t s) {
        double a = R * s / n_r, b = R * (s + 1) / n_r, acc = 0;
        for (std::size_t i = 0; i < gl.x.size(); ++i) acc += 0.5 * (b - a) * gl.w[i] * shell(0.5 * (a + b) + 0.5 * (b - a) * gl.x[i]);
        seg[s] = acc;
    });
    EnergyEstimate e{tree_sum(seg), R * shell(R)};
    if (e.value > 0 && e.tail > tol * e.value)
        throw DomainError("slice_energy: radius truncates the energy (tail " + std::to_string(e.tail) + ")");
    return e;
}

double field_energy_particles(const FieldFunction& F, double t, const std::vector<Vec3>& centres, double ell,
                              int n_r, int degree) {
    return integrate_particle_pou([&](std::size_t, const Vec3& x) { return 0.5 * F(t, x).norm2(); }, centres, ell, n_r,
                                  degree);
}

double integrate_particle_pou(const std::function<double(std::size_t, const Vec3&)>& density,
                              const std::vector<Vec3>& centres, double ell, int n_r, int degree) {
    if (centres.empty()) return 0;
    if (!(ell > 0)) throw ConfigError("field_energy_particles: length scale must be positive");
    const SphereRule& rule = lebedev_rule(degree);
    const GaussRule& gl = gauss_legendre(n_r);
    auto K = [&](const Vec3& d) { return std::pow(1 + norm2(d) / (ell * ell), -3); };
    const std::size_t nr = gl.x.size(), nd = rule.size();
    // flat over (centre, radius, direction) so the work spreads over all threads
    std::vector<double> part(centres.size() * nr * nd);
    parallel_for(part.size(), [&](std::size_t idx) {
        std::size_t p = idx / (nr * nd), i = (idx / nd) % nr, j = idx % nd;
        double s = 0.5 * (1 + gl.x[i]);
        double r = ell * s / (1 - s), dr = ell / ((1 - s) * (1 - s)) * 0.5 * gl.w[i];
        Vec3 x = centres[p] + r * rule.x[j];
        double den = 0;
        for (const Vec3& c : centres) den += K(x - c);
        part[idx] = 4 * kPi * rule.w[j] * dr * r * r * density(p, x) * K(x - centres[p]) / den;
    });
    return tree_sum(part);
}

EnergyLedger energy_balance(const std::vector<double>& times, const std::vector<double>& matter,
                            const std::vector<double>& field, double matter_inf, const EnergyEstimate& radiated,
                            double budget) {
    if (times.empty() || matter.size() != times.size() || field.size() != times.size())
        throw ConfigError("energy_balance: missing or mismatched energy samples");
    EnergyLedger L;
    L.times = times;
    L.matter = matter;
    L.field = field;
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (matter[k] < 0 || field[k] < 0) throw DomainError("energy_balance: negative energy entry");
        L.total.push_back(matter[k] + field[k]);
    }
    L.E0 = L.total.front();
    for (double e : L.total) L.max_drift = std::max(L.max_drift, std::fabs(e - L.E0) / L.E0);
    L.matter_inf = matter_inf;
    L.radiated = radiated.value;
    L.E_inf = matter_inf + radiated.value;
    L.inf_residual = std::fabs(L.E_inf - L.E0) / L.E0;
    L.budget = budget + radiated.tail / L.E0;
    return L;
}

}  // namespace vmax
