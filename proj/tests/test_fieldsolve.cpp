#include <cmath>
#include <random>

#include "doctest.h"
#include "vmax/fieldsolve.hpp"
#include "vmax/oracles.hpp"
#include "vmax/relgeom.hpp"

using namespace vmax;

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel_err(const Faraday& a, const Faraday& b) {
    return std::sqrt((a - b).norm2()) / std::max(1e-300, std::sqrt(b.norm2()));
}

SourceHistory single(std::shared_ptr<const Worldline> path, double q = 1, double w = 0.5, bool extended = true,
                     double t0 = 0) {
    SourceHistory s;
    s.particles.push_back({q, Shape{w}, std::move(path)});
    s.extended = extended;
    s.t0 = t0;
    return s;
}

ConeQuadrature near_only() {
    ConeQuadrature q;
    q.far_factor = 0;
    return q;
}
}  // namespace

TEST_CASE("triweight shape moments") {
    Shape s{0.7};
    double m0 = integrate_gl([&](double r) { return 4 * kPi * r * r * s.value(r); }, 0, s.w, 20);
    double m2 = integrate_gl([&](double r) { return 4 * kPi * r * r * r * r * s.value(r); }, 0, s.w, 20);
    CHECK(m0 == doctest::Approx(1).epsilon(1e-13));
    CHECK(m2 == doctest::Approx(s.second_moment()).epsilon(1e-13));
    CHECK(s.value(0.7) == 0);
    double h = 1e-6;
    CHECK(s.dvalue(0.3) == doctest::Approx((s.value(0.3 + h) - s.value(0.3 - h)) / (2 * h)).epsilon(1e-7));
}

TEST_CASE("Hermite trajectory reproduces a smooth worldline") {
    auto osc = oscillating_worldline({0, 0, 0}, {1, 0.5, 0}, 0.4, 1.1);
    auto err = [&](double dt) {
        HermiteWorldline h(false);
        for (double t = 0; t <= 6 + 1e-12; t += dt) {
            auto st = osc->state(t);
            h.append(t, st.X, st.V, st.A);
        }
        double e = 0;
        for (double t = 0.013; t < 6; t += 0.0371) e = std::max(e, norm(h.state(t).X - osc->state(t).X));
        return e;
    };
    double e1 = err(0.2), e2 = err(0.1);
    CHECK(e1 < 1e-4);
    CHECK(e1 / e2 > 12);  // at least third order
    HermiteWorldline h(true);
    h.append(0, {1, 0, 0}, {1, 0, 0}, {0, 1, 0});
    h.append(1, {1.7, 0.1, 0}, {1, 1, 0}, {0, 1, 0});
    CHECK(norm(h.state(-2).X - Vec3{1 - 2 / std::sqrt(2.0), 0, 0}) < 1e-14);
    CHECK_THROWS_AS(h.state(1.5), DomainError);
}

TEST_CASE("retarded parameter on a free worldline") {
    FreeWorldline fw({0, 0, 0}, {0.6, 0, 0});
    double b = 0.6 / std::sqrt(1.36);
    Vec3 x{3, 1, 0};
    double t = 5;
    double s = retarded_s(fw, t, x, 0);
    // |x - b (t - s) e1| = s
    CHECK(norm(x - Vec3{b * (t - s), 0, 0}) == doctest::Approx(s).epsilon(1e-13));
    double s2 = retarded_s(fw, t, x, 0.3);
    CHECK(s2 - norm(x - Vec3{b * (t - s2), 0, 0}) == doctest::Approx(0.3).epsilon(1e-12));
    // history beginning at 0 and a cone that has not reached it
    SourceHistory src = single(std::make_shared<FreeWorldline>(Vec3{}, Vec3{}), 1, 0.5, false);
    CHECK(std::isnan(retarded_s(FreeWorldline({}, {}), 1, {5, 0, 0}, 0, 1)));
}

TEST_CASE("static smoothed charge gives the Coulomb field") {
    auto src = single(std::make_shared<FreeWorldline>(Vec3{0.2, -0.1, 0.3}, Vec3{}), 0.8, 0.5);
    SmoothedCoulomb exact(0.8, 0.5, {0.2, -0.1, 0.3});
    InitialFieldData none;
    for (Vec3 x : {Vec3{2, 0.5, -1}, Vec3{0.6, 0.1, 0.3}, Vec3{0.3, -0.1, 0.35}, Vec3{-4, 3, 1}}) {
        Faraday F = field_total(none, src, 7.0, x, near_only());
        CHECK(rel_err(F, exact(0, x)) < 1e-6);
        Faraday Ff = field_total(none, src, 7.0, x, ConeQuadrature{});
        CHECK(rel_err(Ff, exact(0, x)) < 1e-5);
    }
}

TEST_CASE("uniformly moving charge against the convolved boosted Coulomb field") {
    Vec3 X0{0.1, 0, -0.2}, V{0.8, -0.3, 0.5};
    auto src = single(std::make_shared<FreeWorldline>(X0, V), 1.3, 0.6);
    InitialFieldData none;
    double t = 2;
    for (Vec3 x : {Vec3{3, 1, 0}, Vec3{2.0, -0.6, 0.9}, Vec3{-2, 2, 2}}) {
        Faraday ref = shape_convolve([&](const Vec3& y) { return boosted_coulomb(1.3, X0, V, t, y); }, 0.6, x, 16, 35);
        CHECK(rel_err(field_total(none, src, t, x, near_only()), ref) < 1e-5);
        CHECK(field_S_part(src, t, x, near_only()).max_abs() == 0);
    }
    // far path: 7-point smearing rule, error O((w/R)^4)
    ConeQuadrature q;
    q.far_factor = 1;
    double prev = 0;
    for (double d : {3.0, 6.0, 12.0}) {
        Vec3 x{d, 1, 0};
        Faraday ref = shape_convolve([&](const Vec3& y) { return boosted_coulomb(1.3, X0, V, t, y); }, 0.6, x, 16, 35);
        double e = rel_err(field_total(none, src, t, x, q), ref);
        CHECK(e < 1e-3);
        if (prev > 0) CHECK(prev / e > 8);
        prev = e;
    }
}

TEST_CASE("accelerated charge against convolved Lienard-Wiechert fields") {
    for (auto path : {hyperbolic_worldline({0, 0, 0}, {0.4, 0.2, 0}), oscillating_worldline({0, 0, 0}, {0, 0, 1}, 0.3, 1.5)}) {
        auto src = single(path, 1.0, 0.5);
        if (path.use_count() > 0 && dynamic_cast<const AnalyticWorldline*>(path.get())) {}
        src.t0 = 0;
        InitialFieldData none;
        for (Vec3 x : {Vec3{1.5, 1, 0.5}, Vec3{-1, 0.5, 2}}) {
            double t = 3;
            Faraday ref = shape_convolve([&](const Vec3& y) { return lienard_wiechert(*path, 1.0, t, y); }, 0.5, x, 16, 35);
            Faraday got = field_total(none, src, t, x, near_only());
            CHECK(rel_err(got, ref) < 1e-4);
        }
    }
}

TEST_CASE("linearity in the source weights") {
    auto path = hyperbolic_worldline({0, 0, 0}, {0.4, 0.2, 0});
    auto s1 = single(path, 1.0), s2 = single(path, 2.0);
    Vec3 x{0.8, 0.4, -0.3};
    Faraday a = field_T_part(s1, 2.5, x, near_only()), b = field_T_part(s2, 2.5, x, near_only());
    CHECK(std::sqrt((b - 2.0 * a).norm2()) <= 1e-13 * std::sqrt(b.norm2()));
    Faraday c = field_S_part(s1, 2.5, x, near_only()), d = field_S_part(s2, 2.5, x, near_only());
    CHECK(std::sqrt((d - 2.0 * c).norm2()) <= 1e-13 * std::sqrt(d.norm2()));
    CHECK(c.max_abs() > 0);
}

TEST_CASE("data mode: static charge with Coulomb initial data stays Coulomb") {
    auto src = single(std::make_shared<FreeWorldline>(Vec3{}, Vec3{}), 1.0, 0.5, false);
    auto data = std::make_shared<InitialFieldData>();
    data->F0 = std::make_shared<SmoothedCoulomb>(1.0, 0.5);
    data->dtF0 = std::make_shared<LambdaField>([](double, const Vec3&) { return Faraday{}; });
    data->sphere_degree = 83;
    SmoothedCoulomb exact(1.0, 0.5);
    ConeQuadrature q = near_only();
    q.n_u = 12;
    for (double t : {0.0, 0.5, 1.4, 1.6, 2.0, 4.0}) {
        Vec3 x{1.5, 0.2, -0.1};
        Faraday F = field_total(*data, src, t, x, q);
        INFO("t = " << t);
        CHECK(rel_err(F, exact(0, x)) < 2e-4);
    }
    // vacuum reduction and t = 0
    SourceHistory empty;
    empty.extended = false;
    Vec3 x{3, 0, 0};
    CHECK(rel_err(field_total(*data, empty, 0, x, q), exact(0, x)) < 1e-14);
    CHECK(rel_err((1 / (4 * kPi)) * field_data_part(*data, empty, 1.0, x, q), exact(0, x)) < 1e-6);
}

TEST_CASE("derivative decomposition against finite differences") {
    struct Case {
        std::shared_ptr<Worldline> path;
        bool extended;
        double t;
        Vec3 x;
    };
    std::vector<Case> cases = {
        {std::make_shared<FreeWorldline>(Vec3{}, Vec3{0.5, 0.2, 0}), true, 2, {0.3, 0.1, 0.2}},
        {std::make_shared<FreeWorldline>(Vec3{}, Vec3{0.5, 0.2, 0}), true, 2, {1.4, 0.5, 0.2}},
        {hyperbolic_worldline({0, 0, 0}, {0.5, 0.3, 0}), true, 2.5, {0.9, 0.6, 0.1}},
        {hyperbolic_worldline({0, 0, 0}, {0.5, 0.3, 0}), true, 2.5, {2.0, 0.5, -0.4}},
        {oscillating_worldline({0, 0, 0}, {0, 0, 1}, 0.3, 1.5), true, 3, {0.2, 0.1, 0.3}},
        {std::make_shared<FreeWorldline>(Vec3{}, Vec3{0.5, 0.2, 0}), false, 1.2, {1.0, 0.4, 0.2}},
        {hyperbolic_worldline({0, 0, 0}, {0.5, 0.3, 0}), false, 1.3, {0.9, 0.6, 0.1}},
        {hyperbolic_worldline({0, 0, 0}, {0.5, 0.3, 0}), false, 2.5, {0.9, 0.6, 0.1}},
    };
    ConeQuadrature q = near_only();
    q.n_s = 20;
    q.n_u = 20;
    InitialFieldData none;
    for (auto& c : cases) {
        auto src = single(c.path, 1.0, 0.5, c.extended);
        if (dynamic_cast<const AnalyticWorldline*>(c.path.get()) && c.t == 3) src.t0 = -kInf;
        auto D = field_derivative(none, src, c.t, c.x, q);
        double h = 1e-3;
        for (int k = 0; k < 3; ++k) {
            Vec3 e{};
            e[k] = h;
            Faraday fd = (1 / (12 * h)) * (8.0 * (field_total(none, src, c.t, c.x + e, q) - field_total(none, src, c.t, c.x - e, q)) -
                                           (field_total(none, src, c.t, c.x + 2.0 * e, q) - field_total(none, src, c.t, c.x - 2.0 * e, q)));
            double scale = std::sqrt(fd.norm2()) + 1e-3 * std::sqrt(field_total(none, src, c.t, c.x, q).norm2());
            INFO("x = " << c.x.x << "," << c.x.y << "," << c.x.z << " k = " << k + 1);
            CHECK(std::sqrt((D[k] - fd).norm2()) / scale < 1e-4);
        }
    }
}

TEST_CASE("Kirchhoff against the radial solution") {
    auto g = [](double l) { return std::exp(-l * l); };
    auto exact = [&](double t, double r) {
        return integrate_gl([&](double l) { return l * g(l); }, std::fabs(t - r), t + r, 40) / (2 * r);
    };
    auto zero = [](const Vec3&) { return 0.0; };
    auto phi1 = [&](const Vec3& y) { return g(norm(y)); };
    Vec3 x{0.7, 0.2, -0.4};
    double t = 1.3;
    double ref = exact(t, norm(x));
    CHECK(kirchhoff(zero, phi1, t, x, lebedev_rule(41)) == doctest::Approx(ref).epsilon(1e-8));
    double e1 = std::fabs(kirchhoff(zero, phi1, t, x, midpoint_sphere_rule(16, 32)) - ref);
    double e2 = std::fabs(kirchhoff(zero, phi1, t, x, midpoint_sphere_rule(32, 64)) - ref);
    CHECK(std::log2(e1 / e2) == doctest::Approx(2).epsilon(0.15));
    CHECK(kirchhoff(zero, zero, t, x, lebedev_rule(11)) == 0);
    auto phi0 = [&](const Vec3& y) { return g(norm(y)); };
    CHECK(kirchhoff(phi0, zero, 0, x, lebedev_rule(11)) == doctest::Approx(g(norm(x))));
}

TEST_CASE("cone integrals: reduced rule against shells") {
    ConeQuadrature red, sh;
    sh.rule = ConeQuadrature::Rule::Shells;
    auto one = [](double, double) { return 1.0; };
    for (double t : {0.5, 2.0, 7.0}) {
        CHECK(cone_integral(one, 0, t, {1, 0.5, 0}, red) == doctest::Approx(4.0 / 3 * kPi * t * t * t).epsilon(1e-10));
        CHECK(cone_integral(one, 0, t, {1, 0.5, 0}, sh) == doctest::Approx(4.0 / 3 * kPi * t * t * t).epsilon(1e-10));
    }
    auto g = [](double tau, double l) { return std::exp(-0.3 * tau) / (1 + l * l); };
    for (double p : {1.0, 2.0}) {
        double a = cone_integral(g, p, 5.0, {2, 1, 0}, red);
        double b = cone_integral(g, p, 5.0, {2, 1, 0}, sh);
        CHECK(a == doctest::Approx(b).epsilon(1e-6));
    }
}

TEST_CASE("integral bound verifier") {
    ConeQuadrature q;
    auto r0 = verify_integral_bounds(BoundKind::Yp2, 3, {{0, 0}}, q);
    CHECK(r0.points[0].integral == 0);
    CHECK_THROWS_AS(verify_integral_bounds(BoundKind::Yp1, 3, {{1, 1}}, q), ConfigError);
    CHECK_THROWS_AS(verify_integral_bounds(BoundKind::Yp3, 3, {{0.5, 1}}, q), DomainError);
    auto r1 = verify_integral_bounds(BoundKind::Yp1, 4, {{10, 5}, {30, 15}, {100, 50}}, q);
    CHECK(r1.max_ratio / r1.min_ratio < 3);
    auto r3 = verify_integral_bounds(BoundKind::Yp3, 3, {{50, 50}}, q);
    CHECK(r3.points[0].ratio > 0);
    CHECK(r3.points[0].ratio < 1e3);
}

TEST_CASE("data mode derivative of a static charge") {
    auto src = single(std::make_shared<FreeWorldline>(Vec3{}, Vec3{}), 1.0, 0.5, false);
    InitialFieldData data;
    data.F0 = std::make_shared<SmoothedCoulomb>(1.0, 0.5);
    data.dtF0 = std::make_shared<LambdaField>([](double, const Vec3&) { return Faraday{}; });
    data.sphere_degree = 83;
    SmoothedCoulomb exact(1.0, 0.5);
    ConeQuadrature q = near_only();
    q.n_s = 20;
    q.n_u = 20;
    Vec3 x{1.2, 0.3, -0.2};
    for (double t : {0.4, 1.0}) {
        auto D = field_derivative(data, src, t, x, q);
        for (int k = 0; k < 3; ++k) {
            Vec3 e{};
            e[k] = 1e-4;
            Faraday fd = (1 / 2e-4) * (exact(0, x + e) - exact(0, x - e));
            INFO("t = " << t << " k = " << k + 1);
            CHECK(std::sqrt((D[k] - fd).norm2()) < 2e-3 * std::sqrt(fd.norm2()) + 1e-6);
        }
    }
}
