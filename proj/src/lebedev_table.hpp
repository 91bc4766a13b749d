#pragma once

#include <vector>

namespace vmax::detail {

struct LebedevOrbit {
    int kind;  // octahedral orbit type 1..6
    double w, a, b;
};

struct LebedevRule {
    int npoints;
    std::vector<LebedevOrbit> orbits;
};

const std::vector<LebedevRule>& lebedev_rules();

}  // namespace vmax::detail
