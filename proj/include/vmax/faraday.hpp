#pragma once

#include <array>
#include <functional>

#include "vmax/relgeom.hpp"
#include "vmax/vec.hpp"

namespace vmax {

// Independent components of a 2-form in the order 01,02,03,12,13,23.
using Form6 = std::array<double, 6>;
inline constexpr int kPairMu[6] = {0, 0, 0, 1, 1, 2};
inline constexpr int kPairNu[6] = {1, 2, 3, 2, 3, 3};

// Index of the pair (mu,nu) with mu<nu, or -1 when mu==nu.
int pair_index(int mu, int nu);

struct Faraday {
    Vec3 E, B;  // E^i = F_{0i}, B^1 = F_{32}, B^2 = F_{13}, B^3 = F_{21}

    double operator()(int mu, int nu) const;  // F_{mu nu}, lowered indices
    Form6 form() const;
    static Faraday from_form(const Form6& c);

    Faraday& operator+=(const Faraday& o) { E += o.E; B += o.B; return *this; }
    Faraday& operator-=(const Faraday& o) { E -= o.E; B -= o.B; return *this; }
    Faraday& operator*=(double s) { E *= s; B *= s; return *this; }
    double norm2() const { return vmax::norm2(E) + vmax::norm2(B); }
    double max_abs() const;
};
inline Faraday operator+(Faraday a, const Faraday& b) { return a += b; }
inline Faraday operator-(Faraday a, const Faraday& b) { return a -= b; }
inline Faraday operator*(double s, Faraday a) { return a *= s; }

struct NullComponents {
    std::array<double, 2> alpha{}, alphabar{};
    double rho = 0, sigma = 0;
};

NullComponents null_decompose(const Faraday& F, const Vec3& x);
Faraday pure_charge_field(double Q, const Vec3& x);
Vec3 lorentz_force(const Faraday& F, const Vec3& v);

struct StressEnergy {
    double T00 = 0, TLL = 0, TLbarLbar = 0, TLLbar = 0;
};
StressEnergy stress_energy(const Faraday& F, const Vec3& x);

// Evaluatable field (t,x) -> F. Implementations must be re-entrant.
class FieldFunction {
public:
    virtual ~FieldFunction() = default;
    virtual Faraday operator()(double t, const Vec3& x) const = 0;
    // Number of nested directional derivatives that may be requested.
    virtual int smoothness() const { return 4; }
    // Characteristic length used to pick finite-difference steps.
    virtual double scale() const { return 1.0; }
    // Analytic d_mu F when available (mu = 0..3); default returns false.
    virtual bool derivative(int mu, double t, const Vec3& x, Faraday& out) const {
        (void)mu; (void)t; (void)x; (void)out;
        return false;
    }
};

// Wraps a callable as a FieldFunction.
class LambdaField : public FieldFunction {
public:
    using Fn = std::function<Faraday(double, const Vec3&)>;
    explicit LambdaField(Fn fn, double scale = 1.0, int smooth = 4) : fn_(std::move(fn)), scale_(scale), smooth_(smooth) {}
    Faraday operator()(double t, const Vec3& x) const override { return fn_(t, x); }
    int smoothness() const override { return smooth_; }
    double scale() const override { return scale_; }

private:
    Fn fn_;
    double scale_;
    int smooth_;
};

// d/dh F((t,x) + h dir) at h=0, 4th-order central differences (or analytic if declared).
Faraday directional_derivative(const FieldFunction& F, const std::array<double, 4>& dir, double t, const Vec3& x,
                               double h = 0);
Faraday partial_derivative(const FieldFunction& F, int mu, double t, const Vec3& x, double h = 0);

Faraday lie_derivative(const FieldFunction& F, const SymmetryField& Z, double t, const Vec3& x, double h = 0);

// Supplies int Psi(v) f(t,x,v) dv.
class MomentProvider {
public:
    virtual ~MomentProvider() = default;
    virtual double moment(double t, const Vec3& x, const std::function<double(const Vec3&)>& psi) const = 0;
};

struct FourCurrent {
    std::array<double, 4> lowered{};  // (-int f, int vhat f)
    std::array<double, 4> raised{};   // (int f, int vhat f)
};
FourCurrent current_density(const MomentProvider& f, double t, const Vec3& x);

}  // namespace vmax
