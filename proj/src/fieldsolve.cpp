#include "vmax/fieldsolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vmax/errors.hpp"
#include "vmax/gskernels.hpp"
#include "vmax/parallel.hpp"
#include "vmax/relgeom.hpp"

namespace vmax {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec3 vhat_rate(const Vec3& V, const Vec3& A) {
    // d/dt vhat = (A - vhat (vhat.A)) / v0
    double v0 = japanese(V);
    Vec3 vh = V / v0;
    return (A - dot(vh, A) * vh) / v0;
}

// Root of an increasing function on [a, b] with fn(a) <= 0 <= fn(b); fn returns (value, slope).
template <class Fn>
double solve_increasing(Fn&& fn, double a, double b) {
    double s = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
        auto [g, dg] = fn(s);
        if (g == 0) return s;
        if (g < 0) a = s; else b = s;
        double next = dg > 0 ? s - g / dg : 0.5 * (a + b);
        if (!(next > a && next < b)) next = 0.5 * (a + b);
        if (std::fabs(next - s) <= 1e-14 * (1 + std::fabs(s)) || b - a <= 1e-14 * (1 + std::fabs(s))) return next;
        s = next;
    }
    return s;
}

Form6 add_scaled(Form6 a, const Form6& b, double c) {
    for (int i = 0; i < 6; ++i) a[i] += c * b[i];
    return a;
}

Faraday to_faraday(const Form6& f) { return Faraday::from_form(f); }

int auto_nphi(const ConeQuadrature& q, const Vec3& V) {
    if (q.n_phi > 0) return q.n_phi;
    double b = norm(hat(V));
    if (b < 1e-3) return 12;
    double ratio = b / (1 + std::sqrt(1 - b * b));
    int n = static_cast<int>(std::ceil(std::log(1e-9) / std::log(ratio)));
    return std::clamp(n, 12, 96);
}

// Nodes on the sphere of radius s about x, in cos(chi) about the axis towards Xc and azimuth.
// Calls f(omega, S(rho'), grad S, weight) on the part inside the shape support, and on the outside
// part too (with S = 0) when full is set. Weights integrate d omega.
template <class F>
void cap_nodes(const Vec3& x, double s, const Vec3& Xc, const Shape& sh, int n_u, int n_phi, bool full, F&& f) {
    Vec3 d = Xc - x;
    double rho = norm(d);
    Vec3 e = rho > 1e-14 * (1 + s) ? d / rho : Vec3{0, 0, 1};
    Vec3 e1 = any_orthogonal(e), e2 = cross(e, e1);
    double w = sh.w;
    double uw;
    if (rho > 1e-14 * (1 + s))
        uw = (s * s + rho * rho - w * w) / (2 * s * rho);
    else
        uw = s * s + rho * rho < w * w ? -kInf : kInf;
    double lo = std::max(uw, -1.0);
    std::vector<double> cphi(n_phi), sphi(n_phi);
    for (int j = 0; j < n_phi; ++j) {
        double ph = 2 * kPi * (j + 0.5) / n_phi;
        cphi[j] = std::cos(ph);
        sphi[j] = std::sin(ph);
    }
    const GaussRule& g = gauss_legendre(n_u);
    auto segment = [&](double a, double b, bool inside) {
        if (b <= a) return;
        double c = 0.5 * (a + b), h = 0.5 * (b - a);
        for (std::size_t i = 0; i < g.x.size(); ++i) {
            double u = c + h * g.x[i];
            double su = std::sqrt(std::max(0.0, 1 - u * u));
            double wt = g.w[i] * h * 2 * kPi / n_phi;
            double rp2 = std::max(0.0, s * s + rho * rho - 2 * s * rho * u);
            double Sv = inside ? sh.value(std::sqrt(rp2)) : 0.0;
            for (int j = 0; j < n_phi; ++j) {
                Vec3 om = u * e + su * (cphi[j] * e1 + sphi[j] * e2);
                Vec3 gS = inside ? sh.gradient(s * om - d) : Vec3{};
                f(om, Sv, gS, wt);
            }
        }
    };
    if (lo < 1) segment(lo, 1.0, true);
    if (full && lo > -1) segment(-1.0, std::min(lo, 1.0), false);
}

struct Breaks {
    double sa = 0, sb = 0;
    std::vector<double> pts;  // sorted, including sa and sb
    bool empty = true;
};

// s-range of the cone/tube intersection plus interior kinks.
Breaks cone_breaks(const SourceParticle& p, const SourceHistory& src, double t, const Vec3& x, double s_max,
                   const std::vector<double>& extra) {
    Breaks br;
    const Worldline& path = *p.path;
    double w = p.shape.w;
    double sl = retarded_s(path, t, x, -w, s_max);
    double sh = retarded_s(path, t, x, w, s_max);
    if (std::isnan(sl)) return br;  // history does not reach the support
    br.sa = std::max(0.0, sl);
    br.sb = std::isnan(sh) ? s_max : sh;
    if (!(br.sb > br.sa)) return br;
    br.empty = false;
    br.pts = {br.sa, br.sb};
    double sc = retarded_s(path, t, x, 0, s_max);
    if (!std::isnan(sc)) br.pts.push_back(sc);
    // s + rho(s) = w: the whole sphere enters the support
    WorldState st0 = path.state(t);
    if (norm(x - st0.X) < w) {
        auto fn = [&](double s) {
            WorldState st = path.state(t - s);
            Vec3 dd = x - st.X;
            double r = norm(dd);
            double slope = r > 0 ? 1 + dot(dd, hat(st.V)) / r : 1.0;
            return std::pair<double, double>{s + r - w, slope};
        };
        double hi = std::min(w, br.sb);
        if (fn(hi).first >= 0) br.pts.push_back(solve_increasing(fn, 0.0, hi));
    }
    if (src.extended && t - src.t0 > 0) br.pts.push_back(t - src.t0);
    for (double e : extra) br.pts.push_back(e);
    std::vector<double> keep;
    for (double v : br.pts)
        if (v >= br.sa && v <= br.sb) keep.push_back(v);
    std::sort(keep.begin(), keep.end());
    br.pts.clear();
    for (double v : keep)
        if (br.pts.empty() || v - br.pts.back() > 1e-12 * (1 + v)) br.pts.push_back(v);
    if (br.pts.size() < 2) br.empty = true;
    return br;
}

template <class F>
void s_nodes(const Breaks& br, int n, F&& f) {
    const GaussRule& g = gauss_legendre(n);
    for (std::size_t k = 0; k + 1 < br.pts.size(); ++k) {
        double a = br.pts[k], b = br.pts[k + 1];
        double c = 0.5 * (a + b), h = 0.5 * (b - a);
        for (std::size_t i = 0; i < g.x.size(); ++i) f(c + h * g.x[i], g.w[i] * h);
    }
}

// 7-point cubature of the shape: centre plus six axis points, exact through degree 3 and for xi_i^4.
struct XiRule {
    std::array<Vec3, 7> x;
    std::array<double, 7> w;
};
XiRule xi_rule(double width) {
    XiRule r;
    double a = width * std::sqrt(3.0 / 13.0);
    double c1 = 13.0 / 66.0;
    r.x[0] = {};
    r.w[0] = 1 - 6 * c1;
    for (int i = 0; i < 3; ++i) {
        Vec3 e{};
        e[i] = a;
        r.x[1 + 2 * i] = e;
        r.x[2 + 2 * i] = -e;
        r.w[1 + 2 * i] = r.w[2 + 2 * i] = c1;
    }
    return r;
}

Faraday far_field(const SourceParticle& p, double t, const Vec3& x) {
    XiRule r = xi_rule(p.shape.w);
    Faraday F;
    for (int i = 0; i < 7; ++i) F += r.w[i] * lienard_wiechert(*p.path, p.weight, t, x - r.x[i]);
    return F;
}

double history_s_max(const SourceHistory& src, double t) { return src.extended ? kInf : t - src.t0; }

}  // namespace

double Shape::value(double r) const {
    if (r >= w) return 0;
    double q = 1 - r * r / (w * w);
    return 315.0 / (64.0 * kPi * w * w * w) * q * q * q;
}

double Shape::dvalue(double r) const {
    if (r >= w) return 0;
    double q = 1 - r * r / (w * w);
    return 315.0 / (64.0 * kPi * w * w * w) * 3 * q * q * (-2 * r / (w * w));
}

Vec3 Shape::gradient(const Vec3& d) const {
    double r2 = norm2(d);
    if (r2 >= w * w) return {};
    double q = 1 - r2 / (w * w);
    return (315.0 / (64.0 * kPi * w * w * w) * 3 * q * q * (-2 / (w * w))) * d;
}

WorldState FreeWorldline::state(double tau) const { return {X0_ + (tau - t0_) * hat(V_), V_, {}, {}}; }

void HermiteWorldline::append(double t, const Vec3& X, const Vec3& V, const Vec3& A) {
    if (!t_.empty() && !(t > t_.back())) throw ConfigError("HermiteWorldline: node times must increase");
    t_.push_back(t);
    X_.push_back(X);
    V_.push_back(V);
    A_.push_back(A);
}

void HermiteWorldline::truncate_after(double t) {
    while (!t_.empty() && t_.back() > t) {
        t_.pop_back();
        X_.pop_back();
        V_.pop_back();
        A_.pop_back();
    }
}

WorldState HermiteWorldline::state(double tau) const {
    if (t_.empty()) throw DomainError("empty trajectory");
    if (tau < t_.front()) {
        if (!extend_) throw DomainError("trajectory queried before its first node");
        return {X_[0] + (tau - t_[0]) * hat(V_[0]), V_[0], {}, {}};
    }
    if (tau > t_.back()) {
        if (tau - t_.back() <= 1e-12 * (1 + std::fabs(tau))) tau = t_.back();
        else throw DomainError("trajectory queried after its last node");
    }
    if (t_.size() == 1) return {X_[0], V_[0], A_[0], {}};
    std::size_t k = std::upper_bound(t_.begin(), t_.end(), tau) - t_.begin();
    if (k == 0) k = 1;
    if (k >= t_.size()) k = t_.size() - 1;
    std::size_t i = k - 1;
    double h = t_[k] - t_[i];
    double s = (tau - t_[i]) / h;
    double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
    // cubic Hermite for V
    double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s, h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
    double d00 = 6 * s2 - 6 * s, d10 = 3 * s2 - 4 * s + 1, d01 = -6 * s2 + 6 * s, d11 = 3 * s2 - 2 * s;
    double e00 = 12 * s - 6, e10 = 6 * s - 4, e01 = -12 * s + 6, e11 = 6 * s - 2;
    WorldState st;
    st.V = h00 * V_[i] + (h * h10) * A_[i] + h01 * V_[k] + (h * h11) * A_[k];
    st.A = (d00 / h) * V_[i] + d10 * A_[i] + (d01 / h) * V_[k] + d11 * A_[k];
    st.J = (e00 / (h * h)) * V_[i] + (e10 / h) * A_[i] + (e01 / (h * h)) * V_[k] + (e11 / h) * A_[k];
    // quintic Hermite for X
    double H0 = 1 - 10 * s3 + 15 * s4 - 6 * s5, H1 = s - 6 * s3 + 8 * s4 - 3 * s5,
           H2 = 0.5 * (s2 - 3 * s3 + 3 * s4 - s5), H3 = 10 * s3 - 15 * s4 + 6 * s5, H4 = -4 * s3 + 7 * s4 - 3 * s5,
           H5 = 0.5 * (s3 - 2 * s4 + s5);
    st.X = H0 * X_[i] + (h * H1) * hat(V_[i]) + (h * h * H2) * vhat_rate(V_[i], A_[i]) + H3 * X_[k] +
           (h * H4) * hat(V_[k]) + (h * h * H5) * vhat_rate(V_[k], A_[k]);
    return st;
}

double SourceHistory::total_charge() const {
    double q = 0;
    for (auto& p : particles) q += p.weight;
    return q;
}

double retarded_s(const Worldline& path, double t, const Vec3& x, double c, double s_max) {
    double s_lo = std::max(0.0, t - path.end());
    double s_cap = std::min(s_max, t - path.begin());
    auto fn = [&](double s) {
        WorldState st = path.state(t - s);
        Vec3 d = x - st.X;
        double r = norm(d);
        double slope = r > 0 ? 1 - dot(d, hat(st.V)) / r : 1.0;
        return std::pair<double, double>{s - r - c, slope};
    };
    if (s_cap < s_lo) return std::nan("");
    double g0 = fn(s_lo).first;
    if (g0 > 0) {
        if (s_lo > 0) throw DomainError("source history ends before the retarded time");
        return -1;  // no root with s >= 0
    }
    if (g0 == 0) return s_lo;
    double step = std::max(1.0, std::fabs(c) + norm(x - path.state(t - s_lo).X));
    double hi = s_lo + step;
    while (true) {
        if (hi >= s_cap) {
            if (!std::isfinite(s_cap) || fn(s_cap).first < 0) return std::nan("");
            hi = s_cap;
            break;
        }
        if (fn(hi).first >= 0) break;
        step *= 2;
        hi = s_lo + step;
    }
    return solve_increasing(fn, s_lo, hi);
}

Faraday lienard_wiechert(const Worldline& path, double q, double t, const Vec3& x) {
    double s = retarded_s(path, t, x, 0);
    if (std::isnan(s) || s < 0) return {};
    WorldState st = path.state(t - s);
    Vec3 R = x - st.X;
    double Rn = norm(R);
    if (Rn == 0) throw DomainError("Lienard-Wiechert field evaluated on the worldline");
    Vec3 n = R / Rn;
    Vec3 b = hat(st.V);
    Vec3 bd = vhat_rate(st.V, st.A);
    double kappa = 1 - dot(n, b);
    double k3 = kappa * kappa * kappa;
    Vec3 E = ((1 - norm2(b)) / (k3 * Rn * Rn)) * (n - b) + (1 / (k3 * Rn)) * cross(n, cross(n - b, bd));
    E *= q / (4 * kPi);
    return {E, cross(n, E)};
}

ParticleField particle_field(const SourceParticle& p, const SourceHistory& src, double t, const Vec3& x,
                             const ConeQuadrature& quad) {
    ParticleField out;
    if (p.weight == 0) return out;
    double s_max = history_s_max(src, t);
    if (s_max < 0) return out;
    const Worldline& path = *p.path;
    double w = p.shape.w;
    if (quad.far_factor > 0 && src.extended) {
        double sc = retarded_s(path, t, x, 0, s_max);
        if (!std::isnan(sc) && sc > quad.far_factor * w) {
            out.T = (4 * kPi) * far_field(p, t, x);
            out.far = true;
            return out;
        }
    }
    Breaks br = cone_breaks(p, src, t, x, s_max, {});
    if (br.empty) return out;
    Form6 T{}, S{};
    s_nodes(br, quad.n_s, [&](double s, double ws) {
        WorldState st = path.state(t - s);
        int nphi = auto_nphi(quad, st.V);
        bool accel = norm2(st.A) > 0;
        cap_nodes(x, s, st.X, p.shape, quad.n_u, nphi, false, [&](const Vec3& om, double Sv, const Vec3&, double wt) {
            double c = ws * wt * Sv;
            T = add_scaled(T, eval_kernel({Kernel::WT}, om, st.V), -c);
            if (accel) {
                auto g = grad_W_closed(om, st.V);
                Form6 k{};
                for (int i = 0; i < 6; ++i) k[i] = dot(g[i], st.A);
                S = add_scaled(S, k, -c * s);
            }
        });
    });
    out.T = p.weight * to_faraday(T);
    out.S = p.weight * to_faraday(S);
    // t = t0 sphere term of the data part
    if (!src.extended && t > 0 && br.sb >= s_max - 1e-14 * (1 + s_max) && br.sa <= s_max) {
        double s = s_max;
        WorldState st = path.state(src.t0);
        Vec3 vh = hat(st.V);
        Form6 Bd{};
        cap_nodes(x, s, st.X, p.shape, quad.n_u, auto_nphi(quad, st.V), false,
                  [&](const Vec3& om, double Sv, const Vec3&, double wt) {
                      Form6 k = eval_kernel({Kernel::W}, om, st.V);
                      for (int i = 0; i < 3; ++i) k[i] -= vh[i];
                      Bd = add_scaled(Bd, k, -s * wt * Sv);
                  });
        out.boundary = p.weight * to_faraday(Bd);
    }
    return out;
}

std::array<Faraday, 3> ParticleDerivative::total() const {
    std::array<Faraday, 3> r;
    for (int k = 0; k < 3; ++k) r[k] = TT[k] + TS[k] + SS[k] + ver[k] + data[k] + jump[k];
    return r;
}

namespace {

// Hessian-level kernel data of C^k and the contraction pieces of the SS term at one node.
void ss_integrand(const Vec3& om, const WorldState& st, const Vec3& gS, double Sv, int k, Form6& out) {
    KernelHessian H = eval_kernel_hessian({Kernel::C, k}, om, st.V);
    for (int c = 0; c < 6; ++c) {
        double a = dot(H.grad[c], st.J);
        double q = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) q += st.A[i] * H.hess[c][i][j] * st.A[j];
        out[c] = Sv * (a + q);
    }
    if (norm2(gS) > 0 && norm2(st.A) > 0) {
        for (int n = 1; n <= 3; ++n)
            for (int j = 1; j <= 3; ++j) {
                double f = st.A[j - 1] * gS[n - 1];
                if (f == 0) continue;
                Form6 c = eval_kernel({Kernel::Ckn, k, n, j}, om, st.V);
                out = add_scaled(out, c, f);
            }
    }
}

Form6 jump_integrand(const Vec3& om, const Vec3& V, const Vec3& A, int k) {
    auto g = eval_kernel_grad({Kernel::C, k}, om, V);
    Form6 r{};
    for (int c = 0; c < 6; ++c) r[c] = dot(g[c], A);
    return r;
}

}  // namespace

ParticleDerivative particle_derivative(const SourceParticle& p, const SourceHistory& src, double t, const Vec3& x,
                                       const ConeQuadrature& quad) {
    ParticleDerivative out;
    if (p.weight == 0) return out;
    double s_max = history_s_max(src, t);
    if (s_max < 0) return out;
    const Worldline& path = *p.path;
    const double w = p.shape.w, q = p.weight;
    if (!(quad.split_factor > 0)) throw ConfigError("split radius must be positive");
    // the subtracted term has zero sphere mean, so the split radius is free; keep it inside the data-mode cone
    const double eps = src.extended ? quad.split_factor * w : std::min(quad.split_factor * w, t);

    if (quad.far_factor > 0 && src.extended) {
        double sc = retarded_s(path, t, x, 0, s_max);
        if (!std::isnan(sc) && sc > quad.far_factor * w) {
            double h = 1e-3 * sc;
            for (int k = 0; k < 3; ++k) {
                Vec3 e{};
                e[k] = h;
                Faraday d = (8.0 * (far_field(p, t, x + e) - far_field(p, t, x - e)) -
                             (far_field(p, t, x + 2.0 * e) - far_field(p, t, x - 2.0 * e)));
                out.TT[k] = (4 * kPi / (12 * h)) * d;
            }
            return out;
        }
    }

    // vertex term: S(x - X(t)) times the sphere integral of D^k
    {
        WorldState st = path.state(t);
        double Sv = p.shape.value(norm(x - st.X));
        if (Sv > 0) {
            SphereRule r = velocity_adapted_rule(st.V, 35);
            for (int k = 0; k < 3; ++k) {
                Form6 acc{};
                for (std::size_t i = 0; i < r.size(); ++i)
                    acc = add_scaled(acc, eval_kernel({Kernel::D, k + 1}, r.x[i], st.V), r.w[i]);
                out.ver[k] = (4 * kPi * q * Sv) * to_faraday(acc);
            }
        }
    }

    Breaks br = cone_breaks(p, src, t, x, s_max, {eps});
    if (!br.empty) {
        std::array<Form6, 3> TT{}, TS{}, SS{};
        s_nodes(br, quad.n_s, [&](double s, double ws) {
            WorldState st = path.state(t - s);
            int nphi = auto_nphi(quad, st.V);
            bool inner = s < eps;
            double S0 = inner ? p.shape.value(norm(x - st.X)) : 0.0;
            bool accel = norm2(st.A) > 0 || norm2(st.J) > 0;
            cap_nodes(x, s, st.X, p.shape, quad.n_u, nphi, inner && S0 > 0,
                      [&](const Vec3& om, double Sv, const Vec3& gS, double wt) {
                          double c = ws * wt;
                          for (int k = 0; k < 3; ++k) {
                              Form6 a = eval_kernel({Kernel::A, k + 1}, om, st.V);
                              TT[k] = add_scaled(TT[k], a, c * (Sv - S0) / s);
                              if (!accel) continue;
                              if (Sv > 0) {
                                  auto gb = eval_kernel_grad({Kernel::B, k + 1}, om, st.V);
                                  Form6 b{};
                                  for (int i = 0; i < 6; ++i) b[i] = dot(gb[i], st.A);
                                  TS[k] = add_scaled(TS[k], b, c * Sv);
                                  Form6 ss{};
                                  ss_integrand(om, st, gS, Sv, k + 1, ss);
                                  SS[k] = add_scaled(SS[k], ss, -c * s);
                              }
                          }
                      });
        });
        for (int k = 0; k < 3; ++k) {
            out.TT[k] = q * to_faraday(TT[k]);
            out.TS[k] = q * to_faraday(TS[k]);
            out.SS[k] = q * to_faraday(SS[k]);
        }
        // bottom of the cone: acceleration switches on at t0 (extension), or the t=0 sphere (data mode)
        double sj = t - src.t0;
        if (sj > 0 && sj >= br.sa && sj <= br.sb) {
            WorldState st = path.state(src.t0);
            if (src.extended ? norm2(st.A) > 0 : true) {
                std::array<Form6, 3> J{}, Dd{};
                Vec3 vh = hat(st.V);
                cap_nodes(x, sj, st.X, p.shape, quad.n_u, auto_nphi(quad, st.V), false,
                          [&](const Vec3& om, double Sv, const Vec3& gS, double wt) {
                              Form6 K{};
                              if (!src.extended) {
                                  K = eval_kernel({Kernel::W}, om, st.V);
                                  for (int i = 0; i < 3; ++i) K[i] -= vh[i];
                              }
                              for (int k = 0; k < 3; ++k) {
                                  if (norm2(st.A) > 0) J[k] = add_scaled(J[k], jump_integrand(om, st.V, st.A, k + 1), -sj * wt * Sv);
                                  if (!src.extended) {
                                      Dd[k] = add_scaled(Dd[k], eval_kernel({Kernel::D, k + 1}, om, st.V), -wt * Sv);
                                      // d_k of the t = 0 sphere term itself
                                      Dd[k] = add_scaled(Dd[k], K, -sj * wt * gS[k]);
                                  }
                              }
                          });
                for (int k = 0; k < 3; ++k) {
                    if (src.extended) out.jump[k] = q * to_faraday(J[k]);
                    else out.data[k] = q * (to_faraday(J[k]) + to_faraday(Dd[k]));
                }
            }
        }
    }
    return out;
}

double kirchhoff(const std::function<double(const Vec3&)>& phi0, const std::function<double(const Vec3&)>& phi1,
                 double t, const Vec3& x, const SphereRule& rule, double h) {
    if (t < 0) throw DomainError("kirchhoff: t must be nonnegative");
    if (t == 0) return phi0(x);
    double m0 = 0, md = 0, m1 = 0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const Vec3& om = rule.x[i];
        m0 += rule.w[i] * phi0(x + t * om);
        double d = 8 * (phi0(x + (t + h) * om) - phi0(x + (t - h) * om)) -
                   (phi0(x + (t + 2 * h) * om) - phi0(x + (t - 2 * h) * om));
        md += rule.w[i] * d / (12 * h);
        m1 += rule.w[i] * phi1(x + t * om);
    }
    return m0 + t * md + t * m1;
}

Faraday kirchhoff_field(const InitialFieldData& data, double t, const Vec3& x) {
    if (data.empty()) return {};
    const FieldFunction& F0 = *data.F0;
    if (t == 0) return F0(0, x);
    const SphereRule& rule = data.rule.size() ? data.rule : lebedev_rule(data.sphere_degree);
    double h = 1e-3 * F0.scale();
    std::vector<Faraday> terms(rule.size());
    parallel_for(rule.size(), [&](std::size_t i) {
        const Vec3& om = rule.x[i];
        Vec3 y = x + t * om;
        Faraday d = 8.0 * (F0(0, y + h * om) - F0(0, y - h * om)) - (F0(0, y + 2 * h * om) - F0(0, y - 2 * h * om));
        Faraday f1 = data.dtF0 ? (*data.dtF0)(0, y) : partial_derivative(F0, 0, 0, y);
        terms[i] = rule.w[i] * (F0(0, y) + (t / (12 * h)) * d + t * f1);
    });
    return tree_sum(terms);
}

Faraday field_data_part(const InitialFieldData& data, const SourceHistory& src, double t, const Vec3& x,
                        const ConeQuadrature& quad) {
    Faraday F = (4 * kPi) * kirchhoff_field(data, t, x);
    if (!src.extended && t > 0) {
        ConeQuadrature q = quad;
        q.far_factor = 0;
        std::vector<Faraday> b(src.particles.size());
        parallel_for(b.size(), [&](std::size_t i) { b[i] = particle_field(src.particles[i], src, t, x, q).boundary; });
        F += tree_sum(b);
    }
    return F;
}

Faraday field_T_part(const SourceHistory& src, double t, const Vec3& x, const ConeQuadrature& quad) {
    ConeQuadrature q = quad;
    q.far_factor = 0;
    std::vector<Faraday> b(src.particles.size());
    parallel_for(b.size(), [&](std::size_t i) { b[i] = particle_field(src.particles[i], src, t, x, q).T; });
    return tree_sum(b);
}

Faraday field_S_part(const SourceHistory& src, double t, const Vec3& x, const ConeQuadrature& quad) {
    ConeQuadrature q = quad;
    q.far_factor = 0;
    std::vector<Faraday> b(src.particles.size());
    parallel_for(b.size(), [&](std::size_t i) { b[i] = particle_field(src.particles[i], src, t, x, q).S; });
    return tree_sum(b);
}

Faraday field_total(const InitialFieldData& data, const SourceHistory& src, double t, const Vec3& x,
                    const ConeQuadrature& quad, long skip) {
    std::vector<Faraday> b(src.particles.size());
    parallel_for(b.size(), [&](std::size_t i) {
        if (static_cast<long>(i) == skip) return;
        ParticleField pf = particle_field(src.particles[i], src, t, x, quad);
        b[i] = pf.T + pf.S + pf.boundary;
    });
    Faraday F = tree_sum(b);
    F *= 1 / (4 * kPi);
    if (!data.empty()) F += kirchhoff_field(data, t, x);
    return F;
}

std::array<Faraday, 3> field_derivative(const InitialFieldData& data, const SourceHistory& src, double t,
                                        const Vec3& x, const ConeQuadrature& quad) {
    std::vector<std::array<Faraday, 3>> b(src.particles.size());
    parallel_for(b.size(), [&](std::size_t i) { b[i] = particle_derivative(src.particles[i], src, t, x, quad).total(); });
    std::array<Faraday, 3> r{};
    for (int k = 0; k < 3; ++k) {
        std::vector<Faraday> c(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) c[i] = b[i][k];
        r[k] = (1 / (4 * kPi)) * tree_sum(c);
    }
    if (!data.empty() && t > 0) {
        double h = 1e-3 * data.F0->scale();
        for (int k = 0; k < 3; ++k) {
            Vec3 e{};
            e[k] = h;
            Faraday d = 8.0 * (kirchhoff_field(data, t, x + e) - kirchhoff_field(data, t, x - e)) -
                        (kirchhoff_field(data, t, x + 2.0 * e) - kirchhoff_field(data, t, x - 2.0 * e));
            r[k] += (1 / (12 * h)) * d;
        }
    } else if (!data.empty()) {
        for (int k = 0; k < 3; ++k) r[k] += partial_derivative(*data.F0, k + 1, 0, x);
    }
    return r;
}

Faraday GSField::operator()(double t, const Vec3& x) const { return field_total(*data_, *src_, t, x, quad_); }

double cone_integral(const std::function<double(double, double)>& g, double p, double t, const Vec3& x,
                     const ConeQuadrature& quad, double r_min) {
    if (t <= r_min) return 0;
    double R = norm(x);
    auto segments = [&](std::vector<double> cuts) {
        cuts.push_back(r_min);
        cuts.push_back(t);
        std::sort(cuts.begin(), cuts.end());
        std::vector<double> out;
        for (double c : cuts)
            if (c >= r_min && c <= t && (out.empty() || c - out.back() > 1e-12 * (1 + t))) out.push_back(c);
        // geometric refinement towards r = 0 and long segments
        std::vector<double> fine;
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
            double a = out[i], b = out[i + 1];
            fine.push_back(a);
            if (a == 0) {
                double c = b;
                std::vector<double> tmp;
                while (c > 1e-6 * std::max(1.0, b)) {
                    c *= 0.25;
                    tmp.push_back(c);
                }
                std::reverse(tmp.begin(), tmp.end());
                fine.insert(fine.end(), tmp.begin(), tmp.end());
            } else {
                while (b / a > 4) {
                    a *= 4;
                    fine.push_back(a);
                }
            }
        }
        fine.push_back(out.back());
        return fine;
    };
    if (R < 1e-12) {
        auto pts = segments({});
        double s = 0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            s += integrate_gl([&](double r) { return 4 * kPi * std::pow(r, 2 - p) * g(t - r, r); }, pts[i], pts[i + 1],
                              quad.n_tau);
        return s;
    }
    if (quad.rule == ConeQuadrature::Rule::Reduced) {
        auto inner = [&](double r) {
            double tau = t - r;
            double a = std::fabs(R - r), b = R + r;
            std::vector<double> cut = {a, b};
            if (tau > a && tau < b) cut.insert(cut.begin() + 1, tau);
            double s = 0;
            for (std::size_t i = 0; i + 1 < cut.size(); ++i)
                s += integrate_gl([&](double l) { return g(tau, l) * l; }, cut[i], cut[i + 1], quad.n_lambda);
            return s * std::pow(r, 1 - p);
        };
        auto pts = segments({R, std::fabs(t - R) / 2, (t + R) / 2, t - R});
        double s = 0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) s += integrate_gl(inner, pts[i], pts[i + 1], quad.n_tau);
        return 2 * kPi / R * s;
    }
    const SphereRule& rule = lebedev_rule(quad.sphere_degree);
    auto shell = [&](double r) {
        double m = 0;
        for (std::size_t i = 0; i < rule.size(); ++i) m += rule.w[i] * g(t - r, norm(x + r * rule.x[i]));
        return 4 * kPi * std::pow(r, 2 - p) * m;
    };
    auto pts = segments({R});
    double s = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) s += integrate_gl(shell, pts[i], pts[i + 1], quad.n_r);
    return s;
}

const char* bound_name(BoundKind k) {
    switch (k) {
        case BoundKind::Yp1: return "Yp1";
        case BoundKind::Yp2: return "Yp2";
        case BoundKind::Yp3: return "Yp3";
    }
    return "?";
}

BoundReport verify_integral_bounds(BoundKind kind, double b, const std::vector<std::pair<double, double>>& points,
                                   const ConeQuadrature& quad) {
    if (kind == BoundKind::Yp1 && b < 4) throw ConfigError("Yp1 requires b >= 4");
    if (kind == BoundKind::Yp2 && b < 3) throw ConfigError("Yp2 requires b >= 3");
    if (kind == BoundKind::Yp3) b = 3;
    BoundReport rep;
    rep.kind = kind;
    rep.b = b;
    rep.points.resize(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        auto [t, r] = points[i];
        if (kind == BoundKind::Yp3 && t < 1) throw DomainError("Yp3 requires t >= 1");
        if (t < 0 || r < 0) throw DomainError("bound point must have t >= 0 and |x| >= 0");
        BoundPoint bp;
        bp.t = t;
        bp.r = r;
        Vec3 x{r, 0, 0};
        double d = std::fabs(t - r);
        switch (kind) {
            case BoundKind::Yp1:
                bp.integral = cone_integral(
                    [&](double ta, double l) { return std::pow(1 + ta + l, -b) / (1 + std::fabs(ta - l)); }, 1, t, x,
                    quad);
                bp.bound = std::log(3 + d) / ((1 + t + r) * std::pow(1 + d, b - 2));
                break;
            case BoundKind::Yp2:
                bp.integral = cone_integral([&](double ta, double l) { return std::pow(1 + ta + l, -b); }, 2, t, x, quad);
                bp.bound = std::log(1 + t) / (std::pow(1 + t + r, 2) * std::pow(1 + d, b - 3));
                break;
            case BoundKind::Yp3:
                bp.integral = cone_integral([&](double ta, double l) { return std::pow(1 + ta + l, -3); }, 3, t, x, quad, 1);
                bp.bound = std::log(t) / std::pow(1 + t + r, 3);
                break;
        }
        bp.ratio = bp.bound > 0 ? bp.integral / bp.bound : 0;
        rep.points[i] = bp;
    });
    bool first = true;
    for (auto& p : rep.points) {
        if (p.bound <= 0) continue;
        rep.max_ratio = first ? p.ratio : std::max(rep.max_ratio, p.ratio);
        rep.min_ratio = first ? p.ratio : std::min(rep.min_ratio, p.ratio);
        first = false;
    }
    return rep;
}

}  // namespace vmax
