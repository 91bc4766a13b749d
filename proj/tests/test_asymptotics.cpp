#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "vmax/asymptotics.hpp"
#include "vmax/errors.hpp"
#include "vmax/fit.hpp"
#include "vmax/oracles.hpp"
#include "vmax/quadrature.hpp"

using namespace vmax;

namespace {

double gauss_q(const Vec3& u) {
    const Vec3 c{0.3, -0.1, 0.2};
    return 0.8 * std::exp(-norm2(u - c) / (2 * 0.35 * 0.35));
}

double max_diff(const Faraday& a, const Faraday& b) {
    Form6 x = a.form(), y = b.form();
    double m = 0;
    for (int k = 0; k < 6; ++k) m = std::max(m, std::fabs(x[k] - y[k]));
    return m;
}
double max_abs(const Faraday& a) { return max_diff(a, Faraday{}); }
}  // namespace

TEST_CASE("velocity grid and trilinear profile") {
    VelocityGrid g{1, 5};
    CHECK(g.size() == 125);
    CHECK(norm(g.node(0) - Vec3{-1, -1, -1}) == 0);
    CHECK(norm(g.node(124) - Vec3{1, 1, 1}) < 1e-15);
    ChargeProfile p;
    p.grid = g;
    for (std::size_t c = 0; c < g.size(); ++c) {
        Vec3 v = g.node(c);
        p.Q.push_back(1 + v.x - 2 * v.y + 0.5 * v.z);
    }
    // trilinear reproduces affine data
    CHECK(p.value({0.3, -0.7, 0.1}) == doctest::Approx(1 + 0.3 + 1.4 + 0.05).epsilon(1e-13));
    CHECK(p.value({1.5, 0, 0}) == 0);
}

TEST_CASE("charge profile extrapolation recovers the limit") {
    VelocityGrid g{2, 5};
    std::vector<double> times{4, 8, 16, 32, 64, 128};
    std::vector<std::vector<double>> snaps;
    for (double t : times) {
        std::vector<double> s;
        for (std::size_t c = 0; c < g.size(); ++c) {
            Vec3 v = g.node(c);
            s.push_back(gauss_q(v) + 0.3 * std::cos(v.x) * std::log(t) / t);
        }
        snaps.push_back(s);
    }
    ChargeProfile p = estimate_Qinf(g, times, snaps, 1, 1);
    double err = 0;
    for (std::size_t c = 0; c < g.size(); ++c) err = std::max(err, std::fabs(p.Q[c] - gauss_q(g.node(c))));
    CHECK(err < 1e-6);
    CHECK(p.residual < 1e-10);
    // the rate fit divides out log(3 + t), not log t
    CHECK(p.rate == doctest::Approx(1).epsilon(0.1));
    CHECK_THROWS_AS(estimate_Qinf(g, {4, 8}, {snaps[0], snaps[1]}), ConfigError);
}

TEST_CASE("asymptotic field matches superposed Coulomb fields") {
    for (Vec3 v : {Vec3{0, 0, 0}, Vec3{0.5, 0.2, -0.3}, Vec3{1.2, -0.4, 0.3}}) {
        FinfValue a = Finf_from_Q(gauss_q, v);
        Faraday b = superposed_coulomb(gauss_q, v);
        CAPTURE(v.x);
        CHECK(max_diff(a.F, b) < 1e-4 * max_abs(b));
        CHECK(a.skipped == 0);
    }
}

TEST_CASE("alternative representation agrees") {
    auto boost = boost_profiles(gauss_q);
    for (Vec3 v : {Vec3{0.1, 0, 0}, Vec3{0.5, 0.2, -0.3}, Vec3{-0.8, 0.6, 0.1}}) {
        Faraday a = Finf_from_Q(gauss_q, v).F;
        Faraday b = Finf_alternative(boost, v).F;
        CAPTURE(v.x);
        CHECK(max_diff(a, b) < 1e-2 * max_abs(a));
    }
}

TEST_CASE("radial profile has no magnetic part") {
    VelocityProfile Q = [](const Vec3& u) { return std::exp(-norm2(u)); };
    for (Vec3 v : {Vec3{0, 0, 0}, Vec3{0.7, -0.2, 0.4}}) {
        Faraday F = Finf_from_Q(Q, v).F;
        CHECK(norm(F.B) < 1e-8 * norm(F.E) + 1e-12);
    }
    CHECK(norm(Finf_from_Q(Q, {}).F.E) < 1e-12);
    // radial electric field pointing along v
    Vec3 v{0.7, -0.2, 0.4};
    Vec3 E = Finf_from_Q(Q, v).F.E;
    CHECK(norm(E - dot(E, hat(v)) / norm2(hat(v)) * hat(v)) < 1e-8 * norm(E));
    CHECK(dot(E, v) > 0);
}

TEST_CASE("limit of t^2 F from samples") {
    Faraday Finf({0.2, -0.1, 0.05}, {0.01, 0.3, -0.2});
    Faraday c({1, 2, 3}, {-1, 0.5, 0.25});
    std::vector<double> ts{4, 6, 9, 13.5, 20};
    std::vector<Faraday> samples;
    for (double t : ts) {
        Form6 a = Finf.form(), b = c.form(), s{};
        for (int k = 0; k < 6; ++k) s[k] = a[k] / (t * t) + b[k] / (t * t * t);
        samples.push_back(Faraday::from_form(s));
    }
    FinfExtrapolation e = Finf_from_simulation(ts, samples);
    CHECK(max_diff(e.F, Finf) < 1e-8);
    CHECK_THROWS_AS(Finf_from_simulation({1, 2, 4}, {samples[0], samples[1], samples[2]}), ConfigError);
}

TEST_CASE("modified characteristics in trivial cases") {
    Vec3 x{0.1, 0.2, 0.3}, v{0.4, -0.5, 0.6};
    Faraday F({0.3, 0.1, -0.2}, {0.05, -0.1, 0.2});
    CHECK(norm(modified_characteristics(7, x, v, Faraday{}) - (x + 7 * hat(v))) < 1e-15);
    CHECK(norm(modified_characteristics(1, x, v, F) - (x + hat(v))) < 1e-15);
    // at rest only the electric field enters
    Vec3 c = correction_vector(std::exp(1.0), {}, F);
    CHECK(norm(c + F.E) < 1e-15);
    CHECK_THROWS_AS(modified_characteristics(0, x, v, F), DomainError);
    CorrectionCoefficients cc = correction_coefficients(5, v, F, {F, F, F}, {Faraday{}, Faraday{}, Faraday{}});
    CHECK(norm(cc.C + cc.C_S) == 0);
    CHECK(norm(cc.C_rot[1]) == 0);
}

TEST_CASE("velocity derivative of the correction follows the boost lift") {
    // v0 d_{v^k} C^i = C^i_{0k} - vhat^i C^k, with C_{0k} built from the field of the lifted profile
    auto boost = boost_profiles(gauss_q);
    Vec3 v{0.4, -0.3, 0.2};
    double t = 20, h = 1e-3;
    auto C = [&](const Vec3& u) { return correction_vector(t, u, Finf_from_Q(gauss_q, u).F); };
    Vec3 Cv = C(v);
    for (int k = 0; k < 3; ++k) {
        Vec3 e{};
        e[k] = h;
        Vec3 d = (8.0 * (C(v + e) - C(v - e)) - (C(v + 2.0 * e) - C(v - 2.0 * e))) / (12 * h);
        Vec3 lhs = japanese(v) * d;
        Vec3 Ck = correction_vector(t, v, Finf_from_Q(boost[k], v).F);
        Vec3 rhs = Ck - Cv[k] * hat(v);
        CAPTURE(k);
        CHECK(norm(lhs - rhs) < 1e-5 * (1 + norm(lhs)));
    }
}

TEST_CASE("modified scattering on a self-similar field") {
    std::vector<std::pair<Vec3, Vec3>> probes;
    for (Vec3 x : {Vec3{}, Vec3{0.3, 0, 0}, Vec3{0, -0.3, 0.2}})
        for (Vec3 v : {Vec3{0.2, 0, 0}, Vec3{0.5, 0.3, 0}, Vec3{-0.2, 0.1, 0.3}}) probes.push_back({x, v});
    // late window: the differences go like log t / t
    std::vector<double> times{32, 64, 128, 256, 512, 1024, 2048, 4096};
    ScatteringReport r = modified_scattering_diagnostic(self_similar_f, self_similar_Finf, probes, times);
    CHECK(r.modified_rate >= 0.8);
    CHECK(r.unmodified_rate <= 0.2);
    CHECK(r.modified_diff.back() < 0.2 * r.unmodified_diff.back());
    CHECK(r.f_inf.size() == probes.size());
    // free transport: both maps are exact
    ScatteringReport z = modified_scattering_diagnostic(
        [](double t, const Vec3& x, const Vec3& v) { return std::exp(-norm2(x - t * hat(v)) - norm2(v)); },
        [](const Vec3&) { return Faraday{}; }, probes, times);
    CHECK(*std::max_element(z.modified_diff.begin(), z.modified_diff.end()) < 1e-13);
    CHECK(*std::max_element(z.unmodified_diff.begin(), z.unmodified_diff.end()) < 1e-13);
    CHECK_THROWS_AS(modified_scattering_diagnostic(self_similar_f, self_similar_Finf, probes, {1, 2, 4}), ConfigError);
}

TEST_CASE("self-similar current profile of free streaming") {
    auto spec = gaussian_spec(1.0, 0.5, 0.5, 1.0, 1.5);
    auto ens = sample_initial(spec, 3, 8);
    std::vector<Vec3> Vinf = ens.V;
    std::vector<Vec3> xi{{0, 0, 0}, {0.2, 0, 0}, {0, -0.15, 0.1}};
    double beta = 2 * ens.dv;
    std::vector<double> res;
    for (double t : {10.0, 20.0, 40.0, 80.0}) {
        push(ens, nullptr, t, 1);
        res.push_back(current_profile_check(ens, Vinf, xi, beta).max_residual);
    }
    // O(1/t) in general; the symmetric grid cancels the first order
    CHECK(fit_rate({10, 20, 40, 80}, res).p > 0.9);
    CHECK_THROWS_AS(current_profile_check(ens, Vinf, {{1.0, 0, 0}}, beta), DomainError);
    ens.t = 2;
    CHECK_THROWS_AS(current_profile_check(ens, Vinf, xi, beta), DomainError);
}
