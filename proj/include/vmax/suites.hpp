#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vmax/fieldsolve.hpp"
#include "vmax/report.hpp"

namespace vmax {

// Self-contained verification suites. Each returns a report whose checks carry the measured value and
// the threshold it was compared against.

struct KernelSuiteOptions {
    long samples = 100000;    // random (omega, v) pairs for the pointwise bounds
    int quad_order = 35;      // Lebedev degree for the mean-zero identity
    int mean_points = 100;    // random momenta for the mean-zero identity
    int witness_points = 1000;
    double v_max = 20;        // momenta drawn uniformly from the ball of this radius
    std::uint64_t seed = 23;
};
RunReport kernel_suite(const KernelSuiteOptions& opt = {});

RunReport geometry_suite(std::uint64_t seed = 5);

// Static charge against Coulomb, Kirchhoff against the radial solution, Gauss law and div B by differences.
RunReport oracle_field_suite();

// field_derivative against fourth-order differences of field_total at random probes.
RunReport derivative_suite(int probes = 100, std::uint64_t seed = 7);

struct BoundSweep {
    std::vector<double> times{3, 10, 30, 100};
    std::vector<double> radius_factors{0, 0.25, 0.5, 0.75, 1, 1.25, 1.5};  // |x| = factor * t
    double b1 = 4, b2 = 3;
    double max_spread = 3;  // allowed max/min over t of the constant sup_x integral/bound
    ConeQuadrature quad;
};
RunReport bound_suite(const BoundSweep& sweep = {});

RunReport asymptotic_field_suite();

// Modified against straight characteristics in the self-similar test field.
RunReport synthetic_scattering_suite();

// Dipole isometry, dual paths, constraints, Coulomb fields.
RunReport radiation_suite();

}  // namespace vmax
