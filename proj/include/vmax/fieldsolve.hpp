#pragma once

#include <array>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "vmax/faraday.hpp"
#include "vmax/quadrature.hpp"
#include "vmax/vec.hpp"

namespace vmax {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Compact C^2 radial shape, S(r) = 315/(64 pi w^3) (1 - r^2/w^2)^3 for r < w. Unit mass.
struct Shape {
    double w = 0.5;
    double value(double r) const;
    double dvalue(double r) const;          // dS/dr
    Vec3 gradient(const Vec3& d) const;     // grad_y S(y - X) at y - X = d
    double second_moment() const { return 3.0 / 11.0 * w * w; }  // int |xi|^2 S
};

struct WorldState {
    Vec3 X, V;
    Vec3 A;  // dV/dtau
    Vec3 J;  // d^2V/dtau^2
};

class Worldline {
public:
    virtual ~Worldline() = default;
    virtual WorldState state(double tau) const = 0;
    virtual double begin() const = 0;  // -inf when the worldline extends into the past
    virtual double end() const = 0;
};

// Free motion through X0 at time t0.
class FreeWorldline : public Worldline {
public:
    FreeWorldline(const Vec3& X0, const Vec3& V, double t0 = 0) : X0_(X0), V_(V), t0_(t0) {}
    WorldState state(double tau) const override;
    double begin() const override { return -kInf; }
    double end() const override { return kInf; }

private:
    Vec3 X0_, V_;
    double t0_;
};

class AnalyticWorldline : public Worldline {
public:
    using Fn = std::function<WorldState(double)>;
    AnalyticWorldline(Fn fn, double begin = -kInf, double end = kInf) : fn_(std::move(fn)), b_(begin), e_(end) {}
    WorldState state(double tau) const override { return fn_(tau); }
    double begin() const override { return b_; }
    double end() const override { return e_; }

private:
    Fn fn_;
    double b_, e_;
};

// Stored trajectory. V is cubic Hermite in (V, dV/dt), X quintic Hermite in (X, vhat, d vhat/dt).
// With extend_past, tau < first node follows the free line with the first node's momentum.
class HermiteWorldline : public Worldline {
public:
    explicit HermiteWorldline(bool extend_past = true) : extend_(extend_past) {}
    void append(double t, const Vec3& X, const Vec3& V, const Vec3& A);
    void truncate_after(double t);  // drop nodes with time > t
    WorldState state(double tau) const override;
    double begin() const override { return extend_ ? -kInf : (t_.empty() ? kInf : t_.front()); }
    double end() const override { return t_.empty() ? -kInf : t_.back(); }
    std::size_t size() const { return t_.size(); }
    double node_time(std::size_t i) const { return t_[i]; }
    WorldState node(std::size_t i) const { return {X_[i], V_[i], A_[i], {}}; }

private:
    bool extend_;
    std::vector<double> t_;
    std::vector<Vec3> X_, V_, A_;
};

struct SourceParticle {
    double weight = 0;  // charge (and mass) carried by the particle
    Shape shape;
    std::shared_ptr<const Worldline> path;
};

// Particle-backed phase-space source. With extended=true the particles move freely before t0 and the
// corresponding fields are part of the solution (self-consistent initial data); otherwise the history
// starts at t0 = 0 and the initial-data terms of the decomposition are used.
struct SourceHistory {
    std::vector<SourceParticle> particles;
    double t0 = 0;
    bool extended = true;

    double total_charge() const;
};

struct ConeQuadrature {
    enum class Rule { Reduced, Shells };
    Rule rule = Rule::Reduced;  // for radial cone integrals (integral-bound verifiers)
    int n_tau = 48, n_lambda = 24;  // reduced rule resolution per segment
    int n_r = 48, sphere_degree = 35;  // shells rule resolution

    // Particle path.
    int n_s = 10;       // Gauss nodes per s-segment
    int n_u = 8;        // Gauss nodes in cos(chi) per cap segment
    int n_phi = 0;      // azimuthal trapezoid nodes; 0 picks from |vhat|
    double far_factor = 6;    // Lienard-Wiechert path once the retarded distance exceeds far_factor*w; <=0 disables
    double split_factor = 2;  // principal-value subtraction radius, in units of w
    double tolerance = 1e-4;  // nominal quadrature tolerance, reported with results
};

// Retarded-cone parameter s of the solution of s - |x - X(t - s)| = c, or NaN when the stored
// history does not reach it. The left side is strictly increasing in s.
double retarded_s(const Worldline& path, double t, const Vec3& x, double c, double s_max = kInf);

// Field of a point charge q on the worldline (Lienard-Wiechert), or zero when the cone misses the history.
Faraday lienard_wiechert(const Worldline& path, double q, double t, const Vec3& x);

// Per-particle contributions, 4 pi times the physical field.
struct ParticleField {
    Faraday T, S, boundary;  // retarded T and S parts and the t=0 sphere term (data mode only)
    bool far = false;
};
ParticleField particle_field(const SourceParticle& p, const SourceHistory& src, double t, const Vec3& x,
                             const ConeQuadrature& quad);

// 4 pi d_k F from one particle, k = 1..3, split by term.
struct ParticleDerivative {
    std::array<Faraday, 3> TT, TS, SS, ver, data, jump;
    std::array<Faraday, 3> total() const;
};
ParticleDerivative particle_derivative(const SourceParticle& p, const SourceHistory& src, double t, const Vec3& x,
                                       const ConeQuadrature& quad);

// Vacuum part of the initial data on t = 0.
struct InitialFieldData {
    std::shared_ptr<const FieldFunction> F0;    // evaluated at t = 0
    std::shared_ptr<const FieldFunction> dtF0;  // d_t F at t = 0; null: taken from F0 by differencing in t
    double charge = 0;                           // total charge Q_F of the data
    int sphere_degree = 47;                      // Lebedev degree for the Kirchhoff means
    SphereRule rule;                             // overrides sphere_degree when non-empty

    bool empty() const { return !F0; }
};

// Kirchhoff solution of the wave equation with data (phi0, phi1), using sphere means with the given rule.
double kirchhoff(const std::function<double(const Vec3&)>& phi0, const std::function<double(const Vec3&)>& phi1,
                 double t, const Vec3& x, const SphereRule& rule, double h = 1e-3);
// Componentwise Kirchhoff of the Faraday data: the homogeneous solution F^hom.
Faraday kirchhoff_field(const InitialFieldData& data, double t, const Vec3& x);

// 4 pi F^hom minus the t=0 sphere term of the particles (data mode); t = 0 gives 4 pi F(0,x).
Faraday field_data_part(const InitialFieldData& data, const SourceHistory& src, double t, const Vec3& x,
                        const ConeQuadrature& quad);
Faraday field_T_part(const SourceHistory& src, double t, const Vec3& x, const ConeQuadrature& quad);
Faraday field_S_part(const SourceHistory& src, double t, const Vec3& x, const ConeQuadrature& quad);

// Physical field (F^data + F^T + F^S)/(4 pi). skip >= 0 omits that particle.
Faraday field_total(const InitialFieldData& data, const SourceHistory& src, double t, const Vec3& x,
                    const ConeQuadrature& quad, long skip = -1);

// Physical d_k F for k = 1..3 via the derivative decomposition.
std::array<Faraday, 3> field_derivative(const InitialFieldData& data, const SourceHistory& src, double t,
                                        const Vec3& x, const ConeQuadrature& quad);

// FieldFunction view of field_total.
class GSField : public FieldFunction {
public:
    GSField(std::shared_ptr<const InitialFieldData> data, std::shared_ptr<const SourceHistory> src, ConeQuadrature quad,
            double scale = 1.0)
        : data_(std::move(data)), src_(std::move(src)), quad_(quad), scale_(scale) {}
    Faraday operator()(double t, const Vec3& x) const override;
    double scale() const override { return scale_; }

private:
    std::shared_ptr<const InitialFieldData> data_;
    std::shared_ptr<const SourceHistory> src_;
    ConeQuadrature quad_;
    double scale_;
};

// Radial cone integrals int_{|y-x|<=t, |y-x|>=r_min} g(t-|y-x|, |y|) |y-x|^-p dy.
double cone_integral(const std::function<double(double, double)>& g, double p, double t, const Vec3& x,
                     const ConeQuadrature& quad, double r_min = 0);

enum class BoundKind { Yp1, Yp2, Yp3 };
struct BoundPoint {
    double t = 0, r = 0;  // |x| = r
    double integral = 0, bound = 0, ratio = 0;
};
struct BoundReport {
    BoundKind kind = BoundKind::Yp2;
    double b = 3;
    std::vector<BoundPoint> points;
    double max_ratio = 0, min_ratio = 0;
};
BoundReport verify_integral_bounds(BoundKind kind, double b, const std::vector<std::pair<double, double>>& points,
                                   const ConeQuadrature& quad);
const char* bound_name(BoundKind k);

}  // namespace vmax
