#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "doctest.h"
#include "vmax/oracles.hpp"
#include "vmax/radiation.hpp"

using namespace vmax;

namespace {
constexpr double kPi = 3.14159265358979323846;

double max_diff(const RadiationField& a, const RadiationField& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        for (int c = 0; c < 2; ++c) m = std::max(m, std::fabs(a.values[i][c] - b.values[i][c]));
    return m;
}

struct Dipole {
    HertzDipole F{1.0, 1.0};
    std::vector<double> u = uniform_grid(-7, 7, 113);
    const SphereRule& dirs = lebedev_rule(23);
    RadiationField a = extract_radiation(F, u, dirs);
};
const Dipole& dipole() {
    static Dipole d;
    return d;
}
}  // namespace

TEST_CASE("Coulomb fields do not radiate") {
    SmoothedCoulomb C(1.0, 0.5);
    RadiationField a = extract_radiation(C, uniform_grid(-2, 2, 9), lebedev_rule(11));
    CHECK(a.max_abs() < 1e-14);
    for (ZId z : kAllZ) CHECK(radiation_of_derivative(a, {z}).max_abs() < 1e-12);
}

TEST_CASE("dipole radiation field matches the closed form") {
    const Dipole& d = dipole();
    double err = 0, peak = 0;
    for (std::size_t i = 0; i < d.a.nu(); ++i)
        for (std::size_t j = 0; j < d.a.ndir(); ++j) {
            NullFrame fr = NullFrame::at(d.dirs.x[j]);
            double ref = d.F.radiation_theta(d.u[i], fr.theta);
            err = std::max({err, std::fabs(d.a.at(i, j)[0] - ref), std::fabs(d.a.at(i, j)[1])});
            peak = std::max(peak, std::fabs(ref));
        }
    CHECK(err < 1e-3 * peak);
    CHECK(d.a.rate == doctest::Approx(-1).epsilon(0.1));
    CHECK(std::none_of(d.a.flagged.begin(), d.a.flagged.end(), [](bool b) { return b; }));
}

TEST_CASE("extraction is linear") {
    HertzDipole A(1.0, 1.0), B(0.5, 0.7);
    LambdaField sum([&](double t, const Vec3& x) { return 2.0 * A(t, x) + B(t, x); });
    auto u = uniform_grid(-3, 3, 7);
    const SphereRule& dirs = lebedev_rule(11);
    RadiationField s = extract_radiation(sum, u, dirs), a = extract_radiation(A, u, dirs), b = extract_radiation(B, u, dirs);
    double err = 0;
    for (std::size_t i = 0; i < s.values.size(); ++i)
        for (int c = 0; c < 2; ++c) err = std::max(err, std::fabs(s.values[i][c] - 2 * a.values[i][c] - b.values[i][c]));
    CHECK(err < 1e-9 * s.max_abs());
}

TEST_CASE("radiation fields of Lie derivatives: two paths agree") {
    const Dipole& d = dipole();
    // shorter window keeps the second extraction cheap
    auto u = uniform_grid(-5, 5, 81);
    RadiationField base = extract_radiation(d.F, u, d.dirs);
    for (const char* name : {"dt", "d1", "d3", "S", "Om12", "Om13", "Om23", "Om01", "Om03"}) {
        SymmetryField Z = symmetry_field(name);
        LambdaField LZ([&](double t, const Vec3& x) { return lie_derivative(d.F, Z, t, x); }, 1.0);
        RadiationField direct = extract_radiation(LZ, u, d.dirs);
        RadiationField formula = radiation_of_derivative(base, Z);
        std::string zn = name;
        CAPTURE(zn);
        // axial symmetry makes Om12 vanish; measure against the base field then
        CHECK(max_diff(direct, formula) < 1e-3 * std::max(direct.max_abs(), base.max_abs()));
    }
}

TEST_CASE("component radiation fields") {
    const Dipole& d = dipole();
    for (auto [mu, nu] : {std::pair{0, 1}, std::pair{0, 3}, std::pair{1, 2}, std::pair{2, 3}}) {
        std::vector<double> R = component_radiation(d.a, mu, nu);
        std::vector<double> direct = extract_component(d.F, mu, nu, d.u, d.dirs);
        double err = 0;
        for (std::size_t i = 0; i < R.size(); ++i) err = std::max(err, std::fabs(R[i] - direct[i]));
        CAPTURE(mu);
        CAPTURE(nu);
        CHECK(err < 1e-3 * d.a.max_abs());
    }
    ConstraintResiduals c = constraint_residuals(d.a);
    CHECK(c.divergence < 1e-12);
    CHECK(c.bianchi < 1e-12);

    // the constraints are algebraic: any tangential field satisfies them
    RadiationField rnd = d.a.like();
    std::mt19937_64 gen(11);
    std::normal_distribution<double> n01;
    for (auto& v : rnd.values) v = {n01(gen), n01(gen)};
    c = constraint_residuals(rnd);
    CHECK(c.divergence < 1e-12);
    CHECK(c.bianchi < 1e-12);
    RadiationField zero = d.a.like();
    double zmax = 0;
    for (int mu = 0; mu < 4; ++mu)
        for (double x : component_radiation(zero, mu, (mu + 1) % 4)) zmax = std::max(zmax, std::fabs(x));
    CHECK(zmax == 0);
}

TEST_CASE("energy isometry for the dipole") {
    const Dipole& d = dipole();
    EnergyEstimate flux = flux_energy(d.a);
    double exact = 8 * kPi / 3 * d.F.g2_norm();
    CHECK(flux.value == doctest::Approx(exact).epsilon(1e-4));
    EnergyEstimate slice = slice_energy(d.F, 0, 8);
    CHECK(std::fabs(slice.value - flux.value) < 1e-2 * slice.value);
    // energy through the backward cone t + r = ubar equals the energy of the data in |x| <= ubar
    double prev = 0;
    for (double ub : {0.5, 1.0, 2.0, 4.0}) {
        double c = cone_energy(d.F, ub).value;
        double ball = slice_energy(d.F, 0, ub, 64, 35, 1e300).value;
        CHECK(c == doctest::Approx(ball).epsilon(1e-6));
        CHECK(c > prev);
        prev = c;
    }
    CHECK(prev == doctest::Approx(flux.value).epsilon(1e-2));
    // truncated windows are reported
    RadiationField cut = extract_radiation(d.F, uniform_grid(-1, 1, 9), lebedev_rule(11));
    CHECK_THROWS_AS(flux_energy(cut), DomainError);
    CHECK(flux_energy(d.a.like()).value == 0);
}

TEST_CASE("particle-centred field energy") {
    double q = 0.7, w = 0.5;
    SmoothedCoulomb one(q, w);
    // static smoothed charge: compare with shells about the centre
    double self_ref = slice_energy(one, 0, 400, 400, 11, 1).value + 0.5 * q * q / (4 * kPi * 400);
    double self = field_energy_particles(one, 0, {Vec3{}}, w, 24, 11);
    CHECK(self == doctest::Approx(self_ref).epsilon(1e-3));
    // two charges: the cross term is q1 q2 / (4 pi d) when the supports are disjoint
    double q2 = -0.4, dist = 2;
    SmoothedCoulomb two(q2, w, {dist, 0, 0});
    LambdaField both([&](double t, const Vec3& x) { return one(t, x) + two(t, x); });
    double e = field_energy_particles(both, 0, {Vec3{}, Vec3{dist, 0, 0}}, w, 24, 17);
    double e2 = field_energy_particles(two, 0, {Vec3{dist, 0, 0}}, w, 24, 11);
    CHECK(e - self - e2 == doctest::Approx(q * q2 / (4 * kPi * dist)).epsilon(2e-3));
}

TEST_CASE("energy ledger") {
    EnergyLedger L = energy_balance({0, 1, 2}, {3, 3, 3}, {0, 0, 0}, 3, {}, 0);
    CHECK(L.max_drift == 0);
    CHECK(L.inf_residual == 0);
    CHECK_THROWS_AS(energy_balance({0, 1}, {1, -1}, {0, 0}, 1, {}, 0), DomainError);
    CHECK_THROWS_AS(energy_balance({0, 1}, {1}, {0, 0}, 1, {}, 0), ConfigError);
}

TEST_CASE("radiation field CSV") {
    auto file = (std::filesystem::temp_directory_path() / "vmax_rad.csv").string();
    RadiationField a = extract_radiation(HertzDipole(), uniform_grid(-1, 1, 3), lebedev_rule(3));
    a.write_csv(file);
    std::ifstream is(file);
    std::string line;
    std::getline(is, line);
    CHECK(line == "u,theta,phi,alphabar_theta,alphabar_phi");
    int n = 0;
    while (std::getline(is, line)) ++n;
    CHECK(n == static_cast<int>(a.values.size()));
}
