#pragma once

#include <array>

#include "vmax/faraday.hpp"
#include "vmax/jet.hpp"
#include "vmax/quadrature.hpp"
#include "vmax/vec.hpp"

namespace vmax {

enum class Kernel { w, W, WT, A, B, C, Ckn, D };

struct KernelId {
    Kernel kind = Kernel::W;
    int k = 1, n = 1, j = 1;  // 1-based slots, used where the kernel carries them
};

struct KernelValue {
    Form6 value{};
    std::array<Vec3, 6> grad{};  // d/dv of each component
};

struct KernelHessian {
    Form6 value{};
    std::array<Vec3, 6> grad{};
    std::array<std::array<std::array<double, 3>, 3>, 6> hess{};
};

Form6 eval_kernel(const KernelId& id, const Vec3& omega, const Vec3& v);
KernelValue eval_kernel_full(const KernelId& id, const Vec3& omega, const Vec3& v);
std::array<Vec3, 6> eval_kernel_grad(const KernelId& id, const Vec3& omega, const Vec3& v);
KernelHessian eval_kernel_hessian(const KernelId& id, const Vec3& omega, const Vec3& v);

// grad_v W assembled directly from the elementary derivative rules (no jets).
std::array<Vec3, 6> grad_W_closed(const Vec3& omega, const Vec3& v);

// omega_v with 1 + omega_v.vhat = 1/v0^2, lying in a plane containing vhat.
Vec3 sharpness_witness(const Vec3& v);

// Mean over the sphere of A^k_{mu nu}(sigma, v) for k = 1..3, with a Lebedev rule of the given
// degree. adapted=true evaluates it through the aberrated rule with b = -vhat (exact up to rounding
// for degree >= 11); adapted=false uses the raw rule.
std::array<Form6, 3> spherical_average_A(const Vec3& v, int degree, bool adapted = true);

// Lebedev rule of the given degree, aberrated for momentum v (identity at v = 0).
SphereRule velocity_adapted_rule(const Vec3& v, int degree);

// Scalar-generic kernel evaluation (T = double or Jet); v holds the three momentum components.
template <class T>
std::array<T, 6> kernel_components(const KernelId& id, const Vec3& om, const T v[3]);

}  // namespace vmax
