#include <cmath>
#include <random>

#include "doctest.h"
#include "vmax/gskernels.hpp"
#include "vmax/quadrature.hpp"

using namespace vmax;

namespace {
std::mt19937_64 rng(23);
Vec3 rand_unit() {
    std::normal_distribution<double> n;
    return unit(Vec3{n(rng), n(rng), n(rng)});
}
Vec3 rand_v(double vmax) {
    std::uniform_real_distribution<double> u(-1, 1);
    Vec3 r;
    do r = {u(rng), u(rng), u(rng)};
    while (norm2(r) > 1);
    return vmax * r;
}
const KernelId kAll[] = {{Kernel::w},        {Kernel::W},        {Kernel::WT},       {Kernel::A, 1},
                         {Kernel::A, 3},     {Kernel::B, 2},     {Kernel::C, 1},     {Kernel::Ckn, 2, 1, 3},
                         {Kernel::Ckn, 3, 2, 2}, {Kernel::D, 2}};
}  // namespace

TEST_CASE("kernel values at v = 0") {
    Vec3 om = rand_unit();
    Form6 W = eval_kernel({Kernel::W}, om, {});
    for (int i = 0; i < 3; ++i) CHECK(W[i] == doctest::Approx(om[i]));
    for (int p = 3; p < 6; ++p) CHECK(W[p] == 0);
    for (int k = 1; k <= 3; ++k) {
        Form6 A = eval_kernel({Kernel::A, k}, om, {});
        for (int i = 1; i <= 3; ++i)
            CHECK(A[i - 1] == doctest::Approx(-3 * om[i - 1] * om[k - 1] + (i == k ? 1 : 0)));
        for (int p = 3; p < 6; ++p) CHECK(A[p] == 0);
    }
    // antisymmetric generation: w_{0i} = omega_i + vhat_i, w_jk = omega_j vhat_k - omega_k vhat_j
    Vec3 v{0.4, -0.2, 1.3};
    Form6 w = eval_kernel({Kernel::w}, om, v);
    Vec3 vh = hat(v);
    CHECK(w[0] == doctest::Approx(om.x + vh.x));
    CHECK(w[3] == doctest::Approx(om.x * vh.y - om.y * vh.x));
    CHECK(w[5] == doctest::Approx(om.y * vh.z - om.z * vh.y));
}

TEST_CASE("kernel bounds on random samples") {
    int viol_W = 0, viol_WT = 0, viol_dW = 0;
    for (int s = 0; s < 100000; ++s) {
        Vec3 om = rand_unit(), v = rand_v(20);
        double v0 = std::sqrt(1 + norm2(v));
        Form6 W = eval_kernel({Kernel::W}, om, v);
        Form6 WT = eval_kernel({Kernel::WT}, om, v);
        auto g = grad_W_closed(om, v);
        for (int p = 0; p < 6; ++p) {
            if (std::fabs(W[p]) > 2 * v0) ++viol_W;
            if (std::fabs(WT[p]) > 4 * v0) ++viol_WT;
            if (norm(g[p]) > 6 * v0) ++viol_dW;
        }
    }
    CHECK(viol_W == 0);
    CHECK(viol_WT == 0);
    CHECK(viol_dW == 0);
}

TEST_CASE("analytic gradients against finite differences") {
    double worst = 0;
    for (int s = 0; s < 300; ++s) {
        Vec3 om = rand_unit(), v = rand_v(3);
        for (const KernelId& id : kAll) {
            KernelHessian H = eval_kernel_hessian(id, om, v);
            double h = 1e-5;
            for (int j = 0; j < 3; ++j) {
                Vec3 dv;
                dv[j] = h;
                Form6 a = eval_kernel(id, om, v + dv), b = eval_kernel(id, om, v - dv);
                auto ga = eval_kernel_grad(id, om, v + dv), gb = eval_kernel_grad(id, om, v - dv);
                for (int p = 0; p < 6; ++p) {
                    double fd = (a[p] - b[p]) / (2 * h);
                    double scale = 1 + std::fabs(fd);
                    worst = std::max(worst, std::fabs(fd - H.grad[p][j]) / scale);
                    for (int i = 0; i < 3; ++i) {
                        double fd2 = (ga[p][i] - gb[p][i]) / (2 * h);
                        worst = std::max(worst, std::fabs(fd2 - H.hess[p][i][j]) / (1 + std::fabs(fd2)));
                    }
                }
            }
        }
        auto gc = grad_W_closed(om, v);
        auto gj = eval_kernel_grad({Kernel::W}, om, v);
        for (int p = 0; p < 6; ++p) CHECK(norm(gc[p] - gj[p]) < 1e-12 * (1 + norm(gj[p])));
    }
    CHECK(worst < 1e-7);
    // at v = 0 as well
    Vec3 om = rand_unit();
    auto g = eval_kernel_grad({Kernel::W}, om, {});
    for (int j = 0; j < 3; ++j) {
        Vec3 dv;
        dv[j] = 1e-5;
        Form6 a = eval_kernel({Kernel::W}, om, dv), b = eval_kernel({Kernel::W}, om, -dv);
        for (int p = 0; p < 6; ++p) CHECK(std::fabs((a[p] - b[p]) / 2e-5 - g[p][j]) < 1e-8);
    }
}

TEST_CASE("cubic growth of the derivative kernels") {
    // sup over samples of |K| / v0^3 stays bounded as |v| grows
    auto fitted = [&](double vlo, double vhi) {
        double c = 0;
        std::uniform_real_distribution<double> u(vlo, vhi);
        for (int s = 0; s < 4000; ++s) {
            Vec3 v = u(rng) * rand_unit();
            Vec3 om = rand_unit();
            double v0 = std::sqrt(1 + norm2(v));
            for (KernelId id : {KernelId{Kernel::A, 1}, KernelId{Kernel::B, 2}, KernelId{Kernel::C, 3},
                                KernelId{Kernel::Ckn, 1, 2, 3}, KernelId{Kernel::D, 3}}) {
                KernelHessian H = eval_kernel_hessian(id, om, v);
                for (int p = 0; p < 6; ++p) {
                    double m = std::fabs(H.value[p]);
                    if (id.kind != Kernel::A && id.kind != Kernel::Ckn && id.kind != Kernel::D) m = 0;
                    m = std::max(m, norm(H.grad[p]));
                    if (id.kind == Kernel::C) {
                        double hn = 0;
                        for (int a = 0; a < 3; ++a)
                            for (int b = 0; b < 3; ++b) hn += H.hess[p][a][b] * H.hess[p][a][b];
                        m = std::max(m, std::sqrt(hn));
                    }
                    c = std::max(c, m / (v0 * v0 * v0));
                }
            }
        }
        return c;
    };
    double c1 = fitted(0, 2), c2 = fitted(2, 8), c3 = fitted(8, 20);
    MESSAGE("fitted constants: " << c1 << " " << c2 << " " << c3);
    CHECK(c2 < 3 * c1 + 1);
    CHECK(c3 < 3 * c2 + 1);
}

TEST_CASE("sharpness witness") {
    Vec3 v{std::sqrt(3.0), 0, 0};
    Vec3 om = sharpness_witness(v);
    CHECK(dot(om, hat(v)) == doctest::Approx(-0.75));
    Form6 W = eval_kernel({Kernel::W}, om, v);
    // v0 = 2 here: the electric part has squared norm v0^2
    CHECK(W[0] * W[0] + W[1] * W[1] + W[2] * W[2] == doctest::Approx(4).epsilon(1e-12));
    double worst = 0;
    for (int s = 0; s < 1000; ++s) {
        Vec3 u = rand_v(10);
        Vec3 o = sharpness_witness(u);
        double v0 = std::sqrt(1 + norm2(u));
        Form6 K = eval_kernel({Kernel::W}, o, u);
        worst = std::max(worst, std::fabs(K[0] * K[0] + K[1] * K[1] + K[2] * K[2] - v0 * v0) / (v0 * v0));
        CHECK(std::fabs(1 + dot(o, hat(u)) - 1 / (v0 * v0)) < 1e-12);
    }
    CHECK(worst < 1e-10);
    CHECK_THROWS_AS(sharpness_witness({0, 0, 0}), DomainError);
    // small |v|: the witness cosine approaches -|vhat|
    Vec3 tiny{1e-6, 0, 0};
    CHECK(dot(sharpness_witness(tiny), Vec3{1, 0, 0}) == doctest::Approx(-1e-6).epsilon(1e-3));
}

TEST_CASE("mean-zero identity") {
    auto a0 = spherical_average_A({0, 0, 0}, 35);
    for (auto& f : a0)
        for (double c : f) CHECK(std::fabs(c) < 1e-14);
    auto a = spherical_average_A({1, 2, -0.5}, 35);
    for (auto& f : a)
        for (double c : f) CHECK(std::fabs(c) < 1e-8);
    for (int s = 0; s < 100; ++s) {
        auto b = spherical_average_A(rand_v(5), 35);
        for (auto& f : b)
            for (double c : f) CHECK(std::fabs(c) < 1e-8);
    }
}

TEST_CASE("mean-zero identity with the raw rule converges with degree") {
    Vec3 v{1, 2, -0.5};
    double prev = 1e300;
    for (int deg : {23, 35, 59, 83, 107}) {
        auto b = spherical_average_A(v, deg, false);
        double m = 0;
        for (auto& f : b)
            for (double c : f) m = std::max(m, std::fabs(c));
        CHECK(m < prev);
        prev = m;
    }
    CHECK(prev < 1e-12);
}

TEST_CASE("B kernel is the integration-by-parts kernel") {
    // r^2 d_{y_j}[ G_j(omega)/r ] - D^k with G_j = W (delta_kj - omega_k vhat_j / (1 + omega.vhat)),
    // and r^3 d_{y_j}[ K_j(omega)/r^2 ] = A^k with K_j built from W^T.
    for (int s = 0; s < 50; ++s) {
        Vec3 v = rand_v(2), y = rand_unit();
        int k = 1 + s % 3;
        auto field = [&](const Vec3& yy, Kernel base, double power, int j) {
            double r = norm(yy);
            Vec3 om = yy / r;
            Form6 W = eval_kernel({base}, om, v);
            Vec3 vh = hat(v);
            double D = 1 + dot(om, vh);
            double c = (k == j ? 1.0 : 0.0) - om[k - 1] * vh[j - 1] / D;
            Form6 out;
            for (int p = 0; p < 6; ++p) out[p] = W[p] * c / std::pow(r, power);
            return out;
        };
        Form6 divA{}, divB{};
        double h = 1e-5;
        for (int j = 1; j <= 3; ++j) {
            Vec3 e;
            e[j - 1] = h;
            Form6 a1 = field(y + e, Kernel::WT, 2, j), a2 = field(y - e, Kernel::WT, 2, j);
            Form6 b1 = field(y + e, Kernel::W, 1, j), b2 = field(y - e, Kernel::W, 1, j);
            for (int p = 0; p < 6; ++p) {
                divA[p] += (a1[p] - a2[p]) / (2 * h);
                divB[p] += (b1[p] - b2[p]) / (2 * h);
            }
        }
        Form6 A = eval_kernel({Kernel::A, k}, y, v), B = eval_kernel({Kernel::B, k}, y, v),
              D = eval_kernel({Kernel::D, k}, y, v);
        for (int p = 0; p < 6; ++p) {
            CHECK(std::fabs(A[p] - divA[p]) < 1e-7 * (1 + std::fabs(A[p])));
            CHECK(std::fabs(B[p] - (divB[p] - D[p])) < 1e-7 * (1 + std::fabs(B[p])));
        }
    }
}
