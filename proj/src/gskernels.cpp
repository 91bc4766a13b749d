#include "vmax/gskernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>

#include "vmax/errors.hpp"
#include "vmax/quadrature.hpp"

namespace vmax {

namespace {

Vec3 normalized(const Vec3& om) {
    double n = norm(om);
    if (std::fabs(n - 1) > 1e-10) {
        static std::atomic<bool> warned{false};
        if (!warned.exchange(true)) std::fprintf(stderr, "vmax: kernel direction not unit (|omega|=%g), normalizing\n", n);
    }
    return om / n;
}

// delta_{k mu} vhat_nu - delta_{k nu} vhat_mu with vhat_0 = -1
template <class T>
T delta_term(int p, int k, const T vh[3]) {
    int mu = kPairMu[p], nu = kPairNu[p];
    auto comp = [&](int a) -> T { return a == 0 ? T(-1.0) : vh[a - 1]; };
    T r(0.0);
    if (k == mu) r = r + comp(nu);
    if (k == nu) r = r - comp(mu);
    return r;
}

}  // namespace

template <class T>
std::array<T, 6> kernel_components(const KernelId& id, const Vec3& om, const T v[3]) {
    T s = T(1.0) + v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    T v0 = sqrt(s);
    T iv0 = inv(v0);
    T vh[3] = {v[0] * iv0, v[1] * iv0, v[2] * iv0};
    T D = T(1.0) + om.x * vh[0] + om.y * vh[1] + om.z * vh[2];
    T w[6] = {om.x + vh[0], om.y + vh[1], om.z + vh[2], om.x * vh[1] - om.y * vh[0], om.x * vh[2] - om.z * vh[0],
              om.y * vh[2] - om.z * vh[1]};
    T iD = inv(D);
    T iv02 = iv0 * iv0;
    int k = id.k;
    double ok = k >= 1 && k <= 3 ? om[k - 1] : 0.0;
    std::array<T, 6> out;
    switch (id.kind) {
        case Kernel::w:
            for (int p = 0; p < 6; ++p) out[p] = w[p];
            break;
        case Kernel::W:
            for (int p = 0; p < 6; ++p) out[p] = w[p] * iD;
            break;
        case Kernel::WT: {
            T f = iv02 * iD * iD;
            for (int p = 0; p < 6; ++p) out[p] = w[p] * f;
            break;
        }
        case Kernel::A: {
            T iD2 = iD * iD, iD3 = iD2 * iD;
            T c1 = (-3.0 * ok) * iv02 * iv02 * iD3 * iD;
            T c2 = -3.0 * vh[k - 1] * iv02 * iD3;
            T c3 = iv02 * iD2;
            for (int p = 0; p < 6; ++p) out[p] = w[p] * (c1 + c2) + delta_term(p, k, vh) * c3;
            break;
        }
        case Kernel::B: {
            T iD2 = iD * iD;
            T c1 = (-3.0 * ok) * iv02 * iD2 * iD;
            T c2 = -2.0 * vh[k - 1] * iD2;
            for (int p = 0; p < 6; ++p) out[p] = w[p] * (c1 + c2) + delta_term(p, k, vh) * iD;
            break;
        }
        case Kernel::C: {
            T f = ok * (iD * iD);
            for (int p = 0; p < 6; ++p) out[p] = w[p] * f;
            break;
        }
        case Kernel::Ckn: {
            int j = id.j, n = id.n;
            T proj = T(j == n ? 1.0 : 0.0) - vh[j - 1] * vh[n - 1];
            T f = ok * (iD * iD) * proj * iv0;
            for (int p = 0; p < 6; ++p) out[p] = w[p] * f;
            break;
        }
        case Kernel::D: {
            T f = ok * iv02 * iD * iD * iD;
            for (int p = 0; p < 6; ++p) out[p] = w[p] * f;
            break;
        }
    }
    return out;
}

template std::array<double, 6> kernel_components<double>(const KernelId&, const Vec3&, const double*);
template std::array<Jet, 6> kernel_components<Jet>(const KernelId&, const Vec3&, const Jet*);

Form6 eval_kernel(const KernelId& id, const Vec3& omega, const Vec3& v) {
    double vv[3] = {v.x, v.y, v.z};
    auto c = kernel_components<double>(id, normalized(omega), vv);
    Form6 r;
    for (int p = 0; p < 6; ++p) r[p] = c[p];
    return r;
}

KernelHessian eval_kernel_hessian(const KernelId& id, const Vec3& omega, const Vec3& v) {
    Jet vv[3] = {Jet::variable(0, v.x), Jet::variable(1, v.y), Jet::variable(2, v.z)};
    auto c = kernel_components<Jet>(id, normalized(omega), vv);
    KernelHessian r;
    for (int p = 0; p < 6; ++p) {
        r.value[p] = c[p].v;
        r.grad[p] = {c[p].g[0], c[p].g[1], c[p].g[2]};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) r.hess[p][a][b] = c[p].h[a][b];
    }
    return r;
}

KernelValue eval_kernel_full(const KernelId& id, const Vec3& omega, const Vec3& v) {
    KernelHessian h = eval_kernel_hessian(id, omega, v);
    return {h.value, h.grad};
}

std::array<Vec3, 6> eval_kernel_grad(const KernelId& id, const Vec3& omega, const Vec3& v) {
    return eval_kernel_full(id, omega, v).grad;
}

std::array<Vec3, 6> grad_W_closed(const Vec3& omega, const Vec3& v) {
    Vec3 om = normalized(omega);
    double v0 = std::sqrt(1 + norm2(v));
    Vec3 vh = v / v0;
    double D = 1 + dot(om, vh);
    double w[6] = {om.x + vh.x, om.y + vh.y, om.z + vh.z, om.x * vh.y - om.y * vh.x, om.x * vh.z - om.z * vh.x,
                   om.y * vh.z - om.z * vh.y};
    // d_j vhat^i = (delta_ij - vhat_i vhat_j)/v0
    auto dvh = [&](int i, int j) { return ((i == j ? 1.0 : 0.0) - vh[i] * vh[j]) / v0; };
    std::array<Vec3, 6> g;
    for (int j = 0; j < 3; ++j) {
        // d_j (1/D) = vhat_j/(v0 D) - w_{0j}/(v0 D^2)
        double dinvD = vh[j] / (v0 * D) - w[j] / (v0 * D * D);
        double dw[6] = {dvh(0, j), dvh(1, j), dvh(2, j), om.x * dvh(1, j) - om.y * dvh(0, j),
                        om.x * dvh(2, j) - om.z * dvh(0, j), om.y * dvh(2, j) - om.z * dvh(1, j)};
        for (int p = 0; p < 6; ++p) g[p][j] = dw[p] / D + w[p] * dinvD;
    }
    return g;
}

Vec3 sharpness_witness(const Vec3& v) {
    double a = norm(v);
    if (!(a > 0)) throw DomainError("sharpness_witness: no witness at v = 0");
    double v0 = std::sqrt(1 + a * a);
    double c = -a / v0;  // cosine between omega_v and vhat
    Vec3 e = v / a;
    Vec3 perp = any_orthogonal(e);
    return c * e + std::sqrt(std::max(0.0, 1 - c * c)) * perp;
}

SphereRule velocity_adapted_rule(const Vec3& v, int degree) {
    return aberrated_rule(lebedev_rule(degree), -hat(v));
}

std::array<Form6, 3> spherical_average_A(const Vec3& v, int degree, bool adapted) {
    SphereRule q = adapted ? velocity_adapted_rule(v, degree) : lebedev_rule(degree);
    std::array<Form6, 3> avg{};
    double vv[3] = {v.x, v.y, v.z};
    for (int k = 1; k <= 3; ++k) {
        KernelId id{Kernel::A, k};
        for (std::size_t i = 0; i < q.size(); ++i) {
            auto c = kernel_components<double>(id, q.x[i], vv);
            for (int p = 0; p < 6; ++p) avg[k - 1][p] += q.w[i] * c[p];
        }
    }
    return avg;
}

}  // namespace vmax
