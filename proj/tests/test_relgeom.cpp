#include <cmath>
#include <random>

#include "doctest.h"
#include "vmax/relgeom.hpp"

using namespace vmax;

namespace {
Vec3 rand_vec(std::mt19937_64& g, double scale) {
    std::uniform_real_distribution<double> u(-1, 1);
    Vec3 r;
    do r = {u(g), u(g), u(g)};
    while (norm2(r) > 1);
    return scale * r;
}
}  // namespace

TEST_CASE("hat and check") {
    Vec3 h = hat({0, 0, 0});
    CHECK(norm(h) == 0);
    Vec3 c = check({0.6, 0, 0});
    CHECK(c.x == doctest::Approx(0.75).epsilon(1e-15));
    CHECK_THROWS_AS(check({1, 0, 0}), DomainError);
    CHECK_THROWS_AS(check({0.8, 0.7, 0}), DomainError);

    std::mt19937_64 g(11);
    double worst = 0, worst2 = 0;
    for (int i = 0; i < 10000; ++i) {
        Vec3 v = rand_vec(g, 10);
        worst = std::max(worst, norm(check(hat(v)) - v) / std::max(1.0, norm(v)));
        Vec3 y = rand_vec(g, 0.999);
        worst2 = std::max(worst2, norm(hat(check(y)) - y));
    }
    CHECK(worst < 1e-12);
    CHECK(worst2 < 1e-12);
}

TEST_CASE("momentum invariants") {
    std::mt19937_64 g(5);
    for (int i = 0; i < 1000; ++i) {
        Momentum m = Momentum::of(rand_vec(g, 20));
        CHECK(m.v0 >= 1);
        CHECK(norm(m.vhat) < 1);
        CHECK(std::fabs(m.v0 * m.v0 - norm2(m.v) - 1) < 1e-12 * m.v0 * m.v0);
        CHECK(1.0 / (2 * m.v0 * m.v0) <= 1 - norm(m.vhat) + 1e-15);
    }
}

TEST_CASE("momentum jacobian") {
    CHECK(momentum_jacobian(2, {0, 0, 0}) == doctest::Approx(-8));
    CHECK(momentum_jacobian(1, {std::sqrt(3.0), 0, 0}) == doctest::Approx(-1.0 / 32));
    std::mt19937_64 g(3);
    for (int trial = 0; trial < 50; ++trial) {
        double t = 0.5 + 3 * std::uniform_real_distribution<double>(0, 1)(g);
        Vec3 x = rand_vec(g, 2), v = rand_vec(g, 3);
        double J[3][3];
        double h = 1e-5;
        for (int j = 0; j < 3; ++j) {
            Vec3 dv;
            dv[j] = h;
            Vec3 a = x - t * hat(v + dv), b = x - t * hat(v - dv);
            for (int i = 0; i < 3; ++i) J[i][j] = (a[i] - b[i]) / (2 * h);
        }
        double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) - J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                     J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
        double ex = momentum_jacobian(t, v);
        CHECK(std::fabs(det - ex) < 1e-6 * std::fabs(ex));
    }
}

TEST_CASE("null components of momentum") {
    NullMomentum n = null_components_momentum({1, 0, 0}, {std::sqrt(3.0), 0, 0});
    CHECK(n.vL == doctest::Approx((2 + std::sqrt(3.0)) / 2));
    CHECK(n.vLbar == doctest::Approx((2 - std::sqrt(3.0)) / 2));
    CHECK(std::hypot(n.vslash[0], n.vslash[1]) < 1e-15);
    n = null_components_momentum({1, 0, 0}, {0, 1, 0});
    CHECK(n.vL == doctest::Approx(std::sqrt(2.0) / 2));
    CHECK(n.vLbar == doctest::Approx(std::sqrt(2.0) / 2));
    CHECK(std::hypot(n.vslash[0], n.vslash[1]) == doctest::Approx(1));
    CHECK_THROWS_AS(null_components_momentum({0, 0, 0}, {1, 0, 0}), DomainError);

    std::mt19937_64 g(9);
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
        Vec3 x = rand_vec(g, 5), v = rand_vec(g, 5);
        if (norm(x) < 1e-6) continue;
        NullMomentum m = null_components_momentum(x, v);
        double s2 = m.vslash[0] * m.vslash[0] + m.vslash[1] * m.vslash[1];
        worst = std::max(worst, std::fabs(4 * m.vL * m.vLbar - 1 - s2) / (1 + s2));
        CHECK(m.vL > 0);
        CHECK(m.vLbar > 0);
        // |v0|^-2 + |vslash hat|^2 <= 4 vhat^Lbar
        double v0 = std::sqrt(1 + norm2(v));
        CHECK(1 / (v0 * v0) + s2 / (v0 * v0) <= 4 * m.vLbar / v0 + 1e-12);
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("null frame invariants") {
    std::mt19937_64 g(1);
    for (int i = 0; i < 1000; ++i) {
        Vec3 x = rand_vec(g, 10);
        NullFrame f = NullFrame::at(x);
        CHECK(std::fabs(eta(f.L, f.L)) < 1e-14);
        CHECK(std::fabs(eta(f.Lbar, f.Lbar)) < 1e-14);
        CHECK(eta(f.L, f.Lbar) == doctest::Approx(-2));
        CHECK(eta(f.eth4, f.eth4) == doctest::Approx(1));
        CHECK(std::fabs(eta(f.eth4, f.eph4)) < 1e-14);
        CHECK(std::fabs(eta(f.eth4, f.L)) < 1e-14);
        CHECK(std::fabs(eta(f.eph4, f.Lbar)) < 1e-14);
        CHECK(norm(cross(f.omega, f.e_theta) - f.e_phi) < 1e-14);
        CHECK(f.omega_eA[0][0] == doctest::Approx(std::cos(f.phi) * std::cos(f.theta)));
    }
    NullFrame pole = NullFrame::at({0, 0, 2});
    CHECK(norm(cross(pole.omega, pole.e_theta) - pole.e_phi) < 1e-14);
    CHECK_THROWS_AS(NullFrame::at({0, 0, 1e-12}), DomainError);
}

TEST_CASE("conserved weights") {
    Vec3 v{0.3, -1.2, 0.5};
    ConservedWeights w = conserved_weights(5, 5 * hat(v), v);
    CHECK(norm(w.z0i) < 1e-14);
    CHECK(std::fabs(w.z12) + std::fabs(w.z13) + std::fabs(w.z23) < 1e-14);
    CHECK(w.zbig == doctest::Approx(1));
    Vec3 x{1, 2, 3};
    w = conserved_weights(0, x, v);
    CHECK(norm(w.z0i + x) < 1e-15);
    CHECK(w.zjk(2, 1) == -w.z12);

    std::mt19937_64 g(2);
    double worst = 0;
    for (int p = 0; p < 1000; ++p) {
        Vec3 x0 = rand_vec(g, 5), v0 = rand_vec(g, 4);
        ConservedWeights a = conserved_weights(0, x0, v0);
        CHECK(a.zbig >= 1);
        for (int s = 1; s <= 100; ++s) {
            double t = 0.1 * s;
            ConservedWeights b = conserved_weights(t, x0 + t * hat(v0), v0);
            worst = std::max({worst, norm(b.z0i - a.z0i), std::fabs(b.z12 - a.z12), std::fabs(b.z13 - a.z13),
                              std::fabs(b.z23 - a.z23)});
            // zbig(t, x + t vhat, v) >= <x>
            CHECK(b.zbig >= japanese(x0) - 1e-12);
        }
    }
    CHECK(worst < 1e-13);
}

TEST_CASE("null coordinates") {
    NullCoords n = null_coords(3, {1, 0, 0});
    CHECK(n.u == 2);
    CHECK(n.ubar == 4);
    double t;
    Vec3 x;
    null_coords_inverse(-1, 1, {0, 1, 0}, t, x);
    CHECK(t == 0);
    CHECK(norm(x - Vec3{0, 1, 0}) == 0);
    CHECK_THROWS_AS(null_coords(1, {0, 0, 0}), DomainError);
    std::mt19937_64 g(4);
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
        Vec3 y = rand_vec(g, 10);
        double t0 = 10 * std::uniform_real_distribution<double>(-1, 1)(g);
        NullCoords c = null_coords(t0, y);
        double t1;
        Vec3 y1;
        null_coords_inverse(c.u, c.ubar, c.omega, t1, y1);
        worst = std::max({worst, std::fabs(t1 - t0), norm(y1 - y)});
    }
    CHECK(worst < 1e-13);
}

TEST_CASE("complete lifts commute with v0 T0") {
    PhaseFn g = [](double t, const Vec3& x, const Vec3& v) {
        return std::exp(-0.3 * norm2(x - 0.2 * t * v) - 0.5 * norm2(v - Vec3{0.2, 0, 0.1})) * (1 + 0.1 * x.y * v.z);
    };
    Vec3 x{0.3, -0.4, 0.2}, v{0.5, 0.2, -0.3};
    double t = 0.7;
    for (ZId id : kAllZ) {
        SymmetryField Z{id};
        double h = 1e-3;
        PhaseFn Zg = [&](double tt, const Vec3& xx, const Vec3& vv) { return apply_lift(Z, g, tt, xx, vv, h); };
        PhaseFn Tg = [&](double tt, const Vec3& xx, const Vec3& vv) { return apply_v0T0(g, tt, xx, vv, h); };
        double comm = apply_v0T0(Zg, t, x, v, h) - apply_lift(Z, Tg, t, x, v, h);
        if (Z.is_killing()) {
            CHECK(std::fabs(comm) < 1e-6);
        } else {
            // [v0 T0, S] = v0 T0
            CHECK(std::fabs(comm - apply_v0T0(g, t, x, v, h)) < 1e-6);
        }
    }
    CHECK(symmetry_field("Om23").id == ZId::Om23);
    CHECK_THROWS_AS(symmetry_field("bogus"), DomainError);
}
