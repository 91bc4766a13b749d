#include <cmath>
#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "vmax/fit.hpp"
#include "vmax/oracles.hpp"
#include "vmax/relgeom.hpp"
#include "vmax/vlasov.hpp"

using namespace vmax;

namespace {
constexpr double kPi = 3.14159265358979323846;

struct ConstantField : FieldFunction {
    Faraday F;
    explicit ConstantField(Faraday f) : F(f) {}
    Faraday operator()(double, const Vec3&) const override { return F; }
};

ParticleEnsemble single(const Vec3& X, const Vec3& V) {
    ParticleEnsemble e;
    e.X = {X};
    e.V = {V};
    e.weight = {1};
    e.f = {1};
    return e;
}

std::string tmp(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }
}  // namespace

TEST_CASE("sampling: empty and invalid inputs") {
    DistributionSpec s;
    CHECK(sample_initial(s, 4, 4).size() == 0);
    s.f0 = [](const Vec3&, const Vec3&) { return 0.0; };
    CHECK(sample_initial(s, 3, 3).size() == 0);
    CHECK_THROWS_AS(sample_initial(s, 0, 4), ConfigError);
    CHECK_THROWS_AS(sample_initial(s, 4, 1), ConfigError);
}

TEST_CASE("sampling: midpoint mass converges at second order") {
    double sx = 0.6, sv = 0.5, L = 1.5, Lv = 1.2;
    auto spec = gaussian_spec(1.0, sx, sv, L, Lv);
    // exact integral over the truncated box
    double ix = std::sqrt(2 * kPi) * sx * std::erf(L / (std::sqrt(2.0) * sx));
    double iv = std::sqrt(2 * kPi) * sv * std::erf(Lv / (std::sqrt(2.0) * sv));
    double exact = std::pow(ix * iv, 3);
    double e1 = std::fabs(sample_initial(spec, 4, 4).total_mass() - exact);
    double e2 = std::fabs(sample_initial(spec, 8, 8).total_mass() - exact);
    CHECK(e1 / e2 == doctest::Approx(4).epsilon(0.1));
    CHECK(e2 / exact < 2e-2);
    CHECK(spec.satisfies_smallness(1000, 7));
}

TEST_CASE("free push is exact and preserves the conserved weights") {
    auto spec = gaussian_spec(1.0, 0.5, 0.7, 1.0, 1.5);
    auto ens = sample_initial(spec, 3, 4);
    auto ref = ens;
    double m0 = ens.total_mass(), e0 = ens.matter_energy(), s0 = weighted_sup_norm(ens, 2, spec.N_x);
    double q0 = spatial_average(ens, {0.2, 0, -0.1});
    push(ens, nullptr, 37.5, 0.1);
    for (std::size_t i = 0; i < ens.size(); ++i) {
        Vec3 X = ref.X[i] + 37.5 * hat(ref.V[i]);
        CHECK(norm(ens.X[i] - X) <= 1e-13 * (1 + norm(X)));
        CHECK(ens.V[i].x == ref.V[i].x);
    }
    CHECK(ens.total_mass() == m0);
    CHECK(ens.matter_energy() == e0);
    CHECK(spatial_average(ens, {0.2, 0, -0.1}) == doctest::Approx(q0).epsilon(1e-12));
    CHECK(weighted_sup_norm(ens, 2, spec.N_x) == doctest::Approx(s0).epsilon(1e-10));
    CHECK(weighted_sup_norm(ens, 0, 0) == doctest::Approx(weighted_sup_norm(ref, 0, 0)).epsilon(1e-15));
}

TEST_CASE("RK4 gyration in a constant magnetic field") {
    double B0 = 1.3;
    ConstantField F({{}, {0, 0, B0}});
    Vec3 V0{0.8, 0, 0.3};
    double v0 = japanese(V0), period = 2 * kPi * v0 / B0;
    auto err = [&](double dt) {
        auto e = single({0, 0, 0}, V0);
        push(e, &F, period, dt);
        CHECK(std::fabs(japanese(e.V[0]) - v0) < 1e-2 * std::pow(dt, 4));
        // after one period the transverse motion closes; z advances uniformly
        return norm(e.X[0] - Vec3{0, 0, period * V0.z / v0});
    };
    double a = err(0.2), b = err(0.1);
    CHECK(a < 1e-3);
    CHECK(std::log2(a / b) == doctest::Approx(4).epsilon(0.1));
}

TEST_CASE("RK4 hyperbolic motion in a constant electric field") {
    double E0 = 0.7, T = 5;
    ConstantField F({{E0, 0, 0}, {}});
    auto err = [&](double dt) {
        auto e = single({0, 0, 0}, {0, 0, 0});
        TrajectoryHistory h(e);
        push(e, &F, T, dt, &h);
        double X = (std::sqrt(1 + E0 * E0 * T * T) - 1) / E0;
        CHECK(e.V[0].x == doctest::Approx(E0 * T).epsilon(1e-13));
        // dV0/dt = vhat.E along the path
        WorldState s = h.path(0).state(2.3);
        CHECK(norm(s.A - Vec3{E0, 0, 0}) < 1e-12);
        return std::fabs(e.X[0].x - X);
    };
    double a = err(0.25), b = err(0.125);
    CHECK(a < 1e-5);
    CHECK(std::log2(a / b) == doctest::Approx(4).epsilon(0.12));
}

TEST_CASE("recorded trajectory interpolates the motion") {
    ConstantField F({{0.3, 0.1, 0}, {0, 0, 0.5}});
    auto e = single({0, 0, 0}, {0.5, 0, 0});
    TrajectoryHistory h(e);
    push(e, &F, 4, 0.05, &h);
    auto fine = single({0, 0, 0}, {0.5, 0, 0});
    push(fine, &F, 2.5, 0.005);
    CHECK(norm(h.path(0).state(2.5).X - fine.X[0]) < 1e-6);
    CHECK(h.end() == 4);
    auto src = h.source(true);
    CHECK(src.particles.size() == 1);
    CHECK(src.total_charge() == 1);
}

TEST_CASE("free-streaming velocity average decays like t^-3") {
    auto spec = gaussian_spec(1.0, 0.5, 0.5, 1.0, 2.0);
    auto ens = sample_initial(spec, 4, 12);
    double beta = 2 * ens.dv;
    CHECK(velocity_average(ParticleEnsemble{}, {}, [](const Vec3&) { return 1.0; }, 1.0) == 0);
    std::vector<double> ts, ys;
    for (double t : {10.0, 15.0, 22.0, 33.0, 50.0, 70.0, 100.0}) {
        push(ens, nullptr, t, 1.0);
        double h = growing_bandwidth(ens, beta), best = 0;
        for (Vec3 xi : {Vec3{}, Vec3{0.05, 0, 0}, Vec3{0, 0.05, 0}, Vec3{0, 0, 0.05}, Vec3{-0.05, 0, 0}})
            best = std::max(best, velocity_average(ens, t * xi, [](const Vec3&) { return 1.0; }, h));
        ts.push_back(t);
        ys.push_back(best);
    }
    RateFit f = fit_rate(ts, ys);
    CHECK(f.p == doctest::Approx(3).epsilon(0.05));
}

TEST_CASE("change of variables identity for velocity averages") {
    auto g = [](double, const Vec3& y, const Vec3& v) {
        return std::exp(-0.5 * norm2(y - Vec3{0.3, 0, 0}) - norm2(v - Vec3{0.2, -0.1, 0}));
    };
    for (double t : {1.0, 4.0}) {
        CdvCheck c = cdv_identity(g, t, {0.5, 0.2, -0.3});
        CHECK(c.lhs > 0);
        CHECK(std::fabs(c.lhs - c.rhs) < 1e-4 * c.lhs);
    }
}

TEST_CASE("snapshot and trajectory files round trip") {
    auto spec = gaussian_spec(1.0, 0.5, 0.5, 1.0, 1.0);
    auto ens = sample_initial(spec, 2, 2);
    ens.t = 1.25;
    write_snapshot(ens, tmp("vmax_snap.csv"));
    auto back = read_snapshot(tmp("vmax_snap.csv"));
    REQUIRE(back.size() == ens.size());
    CHECK(back.t == ens.t);
    CHECK(back.width == ens.width);
    for (std::size_t i = 0; i < ens.size(); ++i) {
        CHECK(back.X[i].y == ens.X[i].y);
        CHECK(back.weight[i] == ens.weight[i]);
    }
    ConstantField F({{0.3, 0, 0}, {}});
    TrajectoryHistory h(ens);
    push(ens, &F, 2, 0.25, &h);
    h.write_csv(tmp("vmax_traj.csv"));
    auto h2 = TrajectoryHistory::read_csv(tmp("vmax_traj.csv"), h.width());
    REQUIRE(h2.size() == h.size());
    CHECK(norm(h2.path(3).state(1.7).X - h.path(3).state(1.7).X) == 0);
    CHECK(h2.weight(3) == h.weight(3));
}
