#include "vmax/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "vmax/asymptotics.hpp"
#include "vmax/gskernels.hpp"
#include "vmax/oracles.hpp"
#include "vmax/parallel.hpp"
#include "vmax/radiation.hpp"
#include "vmax/relgeom.hpp"

namespace vmax {

namespace {
constexpr double kPi = 3.14159265358979323846;

Vec3 rand_ball(std::mt19937_64& g, double radius) {
    std::uniform_real_distribution<double> u(-1, 1);
    Vec3 r;
    do r = {u(g), u(g), u(g)};
    while (norm2(r) > 1);
    return radius * r;
}
Vec3 rand_unit(std::mt19937_64& g) {
    std::normal_distribution<double> n;
    return unit(Vec3{n(g), n(g), n(g)});
}

double form_max(const Faraday& a) { return a.max_abs(); }
double rel(const Faraday& a, const Faraday& b) {
    return std::sqrt((a - b).norm2()) / std::max(1e-300, std::sqrt(b.norm2()));
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

ConeQuadrature near_only(int n_s = 10, int n_u = 8) {
    ConeQuadrature q;
    q.far_factor = 0;
    q.n_s = n_s;
    q.n_u = n_u;
    return q;
}

SourceHistory one_particle(std::shared_ptr<const Worldline> path, double q, double w, bool extended) {
    SourceHistory s;
    s.particles.push_back({q, Shape{w}, std::move(path)});
    s.extended = extended;
    return s;
}

// Central-difference divergences of E and B.
std::pair<double, double> divergences(const std::function<Faraday(const Vec3&)>& F, const Vec3& x, double h) {
    double dE = 0, dB = 0;
    for (int k = 0; k < 3; ++k) {
        Vec3 e{};
        e[k] = h;
        Faraday p = F(x + e), m = F(x - e);
        dE += (p.E[k] - m.E[k]) / (2 * h);
        dB += (p.B[k] - m.B[k]) / (2 * h);
    }
    return {dE, dB};
}
}  // namespace

RunReport kernel_suite(const KernelSuiteOptions& opt) {
    RunReport rep;
    rep.kind = "kernels";
    std::mt19937_64 g(opt.seed);

    double mean_worst = 0;
    for (int s = 0; s < opt.mean_points; ++s) {
        auto avg = spherical_average_A(rand_ball(g, 5), opt.quad_order);
        for (auto& f : avg)
            for (double c : f) mean_worst = std::max(mean_worst, std::fabs(c));
    }
    rep.add("mean_zero_A", mean_worst < 1e-8, mean_worst, 1e-8,
            std::to_string(opt.mean_points) + " momenta, Lebedev degree " + std::to_string(opt.quad_order));

    long viol_W = 0, viol_WT = 0, viol_dW = 0;
    double r_W = 0, r_WT = 0, r_dW = 0;
    for (long s = 0; s < opt.samples; ++s) {
        Vec3 om = rand_unit(g), v = rand_ball(g, opt.v_max);
        double v0 = japanese(v);
        Form6 W = eval_kernel({Kernel::W}, om, v);
        Form6 WT = eval_kernel({Kernel::WT}, om, v);
        auto dW = grad_W_closed(om, v);
        for (int p = 0; p < 6; ++p) {
            r_W = std::max(r_W, std::fabs(W[p]) / v0);
            r_WT = std::max(r_WT, std::fabs(WT[p]) / v0);
            r_dW = std::max(r_dW, norm(dW[p]) / v0);
            viol_W += std::fabs(W[p]) > 2 * v0;
            viol_WT += std::fabs(WT[p]) > 4 * v0;
            viol_dW += norm(dW[p]) > 6 * v0;
        }
    }
    std::string n = std::to_string(opt.samples) + " samples";
    rep.add("bound_W", viol_W == 0, static_cast<double>(viol_W), 0, n + ", max |W|/v0 = " + fmt(r_W) + " (bound 2)");
    rep.add("bound_WT", viol_WT == 0, static_cast<double>(viol_WT), 0,
            n + ", max |W|/(v0^3 (1+omega.vhat)) = " + fmt(r_WT) + " (bound 4)");
    rep.add("bound_grad_W", viol_dW == 0, static_cast<double>(viol_dW), 0,
            n + ", max |grad W|/v0 = " + fmt(r_dW) + " (bound 6)");
    rep.scalars["max_W_over_v0"] = r_W;
    rep.scalars["max_WT_over_v0"] = r_WT;
    rep.scalars["max_gradW_over_v0"] = r_dW;

    double wit = 0;
    for (int s = 0; s < opt.witness_points; ++s) {
        Vec3 v = rand_ball(g, 10);
        if (norm(v) < 1e-3) continue;
        double v0 = japanese(v);
        Form6 K = eval_kernel({Kernel::W}, sharpness_witness(v), v);
        wit = std::max(wit, std::fabs(K[0] * K[0] + K[1] * K[1] + K[2] * K[2] - v0 * v0) / (v0 * v0));
    }
    rep.add("sharpness_witness", wit < 1e-10, wit, 1e-10, "sum_i |W_0i|^2 = v0^2 at the witness direction");
    return rep;
}

RunReport geometry_suite(std::uint64_t seed) {
    RunReport rep;
    rep.kind = "geometry";
    std::mt19937_64 g(seed);
    std::uniform_real_distribution<double> u01(0, 1);

    double jac = 0;
    for (int trial = 0; trial < 200; ++trial) {
        double t = 0.5 + 5 * u01(g);
        Vec3 x = rand_ball(g, 2), v = rand_ball(g, 3);
        double J[3][3], h = 1e-5;
        for (int j = 0; j < 3; ++j) {
            Vec3 dv{};
            dv[j] = h;
            Vec3 a = x - t * hat(v + dv), b = x - t * hat(v - dv);
            for (int i = 0; i < 3; ++i) J[i][j] = (a[i] - b[i]) / (2 * h);
        }
        double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) - J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                     J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
        double ex = momentum_jacobian(t, v);
        jac = std::max(jac, std::fabs(det - ex) / std::fabs(ex));
    }
    rep.add("momentum_jacobian", jac < 1e-6, jac, 1e-6, "-t^3/v0^5 against differences");

    double nul = 0;
    for (int i = 0; i < 10000; ++i) {
        Vec3 x = rand_ball(g, 5), v = rand_ball(g, 5);
        if (norm(x) < 1e-6) continue;
        NullMomentum m = null_components_momentum(x, v);
        double s2 = m.vslash[0] * m.vslash[0] + m.vslash[1] * m.vslash[1];
        nul = std::max(nul, std::fabs(4 * m.vL * m.vLbar - 1 - s2) / (1 + s2));
    }
    rep.add("null_momentum_identity", nul < 1e-12, nul, 1e-12, "4 v^L v^Lbar = 1 + |vslash|^2");

    double z = 0;
    for (int p = 0; p < 1000; ++p) {
        Vec3 x0 = rand_ball(g, 5), v = rand_ball(g, 4);
        ConservedWeights a = conserved_weights(0, x0, v);
        for (int s = 1; s <= 100; ++s) {
            double t = 0.1 * s;
            ConservedWeights b = conserved_weights(t, x0 + t * hat(v), v);
            z = std::max({z, norm(b.z0i - a.z0i), std::fabs(b.z12 - a.z12), std::fabs(b.z13 - a.z13),
                          std::fabs(b.z23 - a.z23), std::fabs(b.zbig - a.zbig) / a.zbig});
        }
    }
    rep.add("z_weights_free_flow", z < 1e-13, z, 1e-13, "conserved weights along free lines");

    double rt = 0;
    for (int i = 0; i < 10000; ++i) {
        Vec3 v = rand_ball(g, 10);
        rt = std::max(rt, norm(check(hat(v)) - v) / std::max(1.0, norm(v)));
        Vec3 y = rand_ball(g, 0.999);
        rt = std::max(rt, norm(hat(check(y)) - y));
    }
    rep.add("hat_check_round_trip", rt < 1e-12, rt, 1e-12);
    return rep;
}

RunReport oracle_field_suite() {
    RunReport rep;
    rep.kind = "oracle-fields";
    const double q = 0.8, w = 0.5;
    const Vec3 c{0.2, -0.1, 0.3};
    SmoothedCoulomb exact(q, w, c);
    InitialFieldData none;

    // history starting at t = 0 without field data: Coulomb once the data sphere has passed the charge
    auto fresh = one_particle(std::make_shared<FreeWorldline>(c, Vec3{}), q, w, false);
    double t = 6, worst = 0;
    std::mt19937_64 g(13);
    for (int i = 0; i < 20; ++i) {
        Vec3 x = c + (w + (t - 2 * w) * std::pow(0.05 + 0.95 * std::uniform_real_distribution<double>(0, 1)(g), 1.0 / 3)) *
                         rand_unit(g);
        if (norm(x - c) >= t - w) continue;
        worst = std::max(worst, rel(field_total(none, fresh, t, x, ConeQuadrature{}), exact(0, x)));
    }
    rep.add("static_charge_coulomb", worst < 1e-2, worst, 1e-2, "20 points with w < |x - c| < t - w at t = 6");
    auto always = one_particle(std::make_shared<FreeWorldline>(c, Vec3{}), q, w, true);
    double worst_ext = 0;
    for (Vec3 x : {Vec3{2, 0.5, -1}, Vec3{0.6, 0.1, 0.3}, Vec3{-4, 3, 1}})
        worst_ext = std::max(worst_ext, rel(field_total(none, always, 7, x, ConeQuadrature{}), exact(0, x)));
    rep.add("static_charge_coulomb_extended", worst_ext < 1e-2, worst_ext, 1e-2, "charge present for all times");

    // Kirchhoff with data (0, exp(-|y|^2)): exact solution is radial
    auto gfun = [](double l) { return std::exp(-l * l); };
    auto radial = [&](double tt, double r) {
        return integrate_gl([&](double l) { return l * gfun(l); }, std::fabs(tt - r), tt + r, 40) / (2 * r);
    };
    auto zero = [](const Vec3&) { return 0.0; };
    auto phi1 = [&](const Vec3& y) { return gfun(norm(y)); };
    Vec3 x{0.7, 0.2, -0.4};
    double tk = 1.3, ref = radial(tk, norm(x));
    double e_leb = std::fabs(kirchhoff(zero, phi1, tk, x, lebedev_rule(41)) - ref) / std::fabs(ref);
    rep.add("kirchhoff_radial", e_leb < 1e-8, e_leb, 1e-8, "Lebedev degree 41");
    std::vector<double> errs;
    for (int n : {8, 16, 32, 64}) errs.push_back(std::fabs(kirchhoff(zero, phi1, tk, x, midpoint_sphere_rule(n, 2 * n)) - ref));
    double order = std::log2(errs[2] / errs[3]);
    rep.add("kirchhoff_order", std::fabs(order - 2) < 0.3, order, 2, "midpoint product rules, n = 32 -> 64");
    rep.series.push_back({"kirchhoff_convergence", {"n_theta", "error"}, {{8, errs[0]}, {16, errs[1]}, {32, errs[2]}, {64, errs[3]}}});

    // Gauss law and div B by central differences: residuals shrink like h^2
    Shape S{w};
    auto static_F = [&](const Vec3& y) { return field_total(none, always, 7, y, near_only()); };
    auto moving = one_particle(hyperbolic_worldline({0, 0, 0}, {0.5, 0.3, 0}), 1.0, w, true);
    auto moving_F = [&](const Vec3& y) { return field_total(none, moving, 2.5, y, near_only()); };
    struct Probe {
        std::function<Faraday(const Vec3&)> F;
        Vec3 x;
        double rho;
        const char* name;
    };
    Vec3 xin = c + Vec3{0.15, 0.1, -0.05};
    std::vector<Probe> probes = {{static_F, xin, q * S.value(norm(xin - c)), "static, inside support"},
                                 {moving_F, {1.6, 1.4, 0.3}, 0.0, "accelerated, outside support"}};
    Series gs{"gauss_law", {"probe", "h", "gauss_residual", "divB_residual"}, {}};
    double order_E = 1e300, order_B = 1e300;
    for (std::size_t p = 0; p < probes.size(); ++p) {
        std::vector<double> rg, rb;
        for (double h : {0.2, 0.1}) {
            auto [dE, dB] = divergences(probes[p].F, probes[p].x, h);
            rg.push_back(std::fabs(dE - probes[p].rho));
            rb.push_back(std::fabs(dB));
            gs.rows.push_back({static_cast<double>(p), h, rg.back(), rb.back()});
        }
        order_E = std::min(order_E, std::log2(rg[0] / rg[1]));
        if (rb[0] > 0) order_B = std::min(order_B, std::log2(rb[0] / rb[1]));
    }
    rep.series.push_back(gs);
    rep.add("gauss_law_order", order_E > 1.7, order_E, 1.7, "observed order of div E - rho, h = 0.2 -> 0.1");
    rep.add("div_B_order", order_B > 1.7, order_B, 1.7, "observed order of div B, h = 0.2 -> 0.1");
    return rep;
}

RunReport derivative_suite(int probes, std::uint64_t seed) {
    RunReport rep;
    rep.kind = "derivative";
    SourceHistory src;
    src.extended = true;
    src.particles.push_back({1.0, Shape{0.5}, hyperbolic_worldline({0, 0, 0}, {0.5, 0.3, 0})});
    src.particles.push_back({-0.6, Shape{0.5}, std::make_shared<FreeWorldline>(Vec3{1, -0.5, 0.2}, Vec3{-0.4, 0.3, 0.6})});
    ConeQuadrature q = near_only(20, 20);
    InitialFieldData none;
    const double t = 2.5, h = 1e-3;
    std::mt19937_64 g(seed);
    std::vector<Vec3> xs;
    for (int i = 0; i < probes; ++i) xs.push_back(Vec3{0.4, 0.2, 0.2} + rand_ball(g, 2.5));
    std::vector<double> err(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
        const Vec3& x = xs[i];
        auto D = field_derivative(none, src, t, x, q);
        double num = 0, den = 0;
        for (int k = 0; k < 3; ++k) {
            Vec3 e{};
            e[k] = h;
            auto F = [&](const Vec3& y) { return field_total(none, src, t, y, q); };
            Faraday fd = (1 / (12 * h)) * (8.0 * (F(x + e) - F(x - e)) - (F(x + 2.0 * e) - F(x - 2.0 * e)));
            num = std::max(num, form_max(D[k] - fd));
            den = std::max(den, form_max(fd));
        }
        err[i] = num / den;
    });
    double worst = *std::max_element(err.begin(), err.end());
    double thr = std::max(3 * q.tolerance, 1e-3);
    rep.add("derivative_vs_differences", worst <= thr, worst, thr,
            std::to_string(probes) + " probes at t = 2.5, two charges (one accelerated)");
    Series s{"derivative_errors", {"x", "y", "z", "relative_error"}, {}};
    for (std::size_t i = 0; i < xs.size(); ++i) s.rows.push_back({xs[i].x, xs[i].y, xs[i].z, err[i]});
    rep.series.push_back(s);
    return rep;
}

RunReport bound_suite(const BoundSweep& sweep) {
    RunReport rep;
    rep.kind = "integral-bounds";
    std::vector<std::pair<double, double>> pts;
    for (double t : sweep.times)
        for (double f : sweep.radius_factors) pts.push_back({t, f * t});
    for (auto [kind, b] : {std::pair{BoundKind::Yp1, sweep.b1}, std::pair{BoundKind::Yp2, sweep.b2}, std::pair{BoundKind::Yp3, 3.0}}) {
        BoundReport r = verify_integral_bounds(kind, b, pts, sweep.quad);
        std::string name = bound_name(kind);
        // constant at each t: sup over |x| of integral/bound; it must not drift with t
        std::vector<double> C(sweep.times.size(), 0.0);
        for (std::size_t i = 0; i < r.points.size(); ++i) {
            std::size_t k = i / sweep.radius_factors.size();
            C[k] = std::max(C[k], r.points[i].ratio);
        }
        double cmax = *std::max_element(C.begin(), C.end()), cmin = *std::min_element(C.begin(), C.end());
        double spread = cmin > 0 ? cmax / cmin : kInf;
        rep.add(name + "_constant_spread", spread <= sweep.max_spread, spread, sweep.max_spread,
                "integral <= " + fmt(cmax) + " x bound at every point; max/min over t of sup_x integral/bound");
        rep.scalars[name + "_constant"] = cmax;
        rep.scalars[name + "_pointwise_ratio_spread"] = r.min_ratio > 0 ? r.max_ratio / r.min_ratio : kInf;
        Series s{name, {"t", "r", "integral", "bound", "ratio"}, {}};
        for (auto& p : r.points) s.rows.push_back({p.t, p.r, p.integral, p.bound, p.ratio});
        rep.series.push_back(s);
    }
    return rep;
}

RunReport asymptotic_field_suite() {
    RunReport rep;
    rep.kind = "asymptotic-fields";
    VelocityProfile Q = [](const Vec3& u) { return 0.8 * std::exp(-norm2(u - Vec3{0.3, -0.1, 0.2}) / (2 * 0.35 * 0.35)); };
    auto boost = boost_profiles(Q);
    double alt = 0, orc = 0;
    for (Vec3 v : {Vec3{0.1, 0, 0}, Vec3{0.5, 0.2, -0.3}, Vec3{-0.8, 0.6, 0.1}}) {
        Faraday a = Finf_from_Q(Q, v).F, b = Finf_alternative(boost, v).F;
        alt = std::max(alt, form_max(a - b) / form_max(a));
        Faraday o = superposed_coulomb(Q, v);
        orc = std::max(orc, form_max(a - o) / form_max(o));
    }
    rep.add("finf_alternative", alt < 1e-2, alt, 1e-2, "smooth Gaussian profile, three momenta");
    rep.add("finf_superposed_coulomb", orc < 1e-4, orc, 1e-4, "independent superposition of boosted Coulomb fields");

    Faraday Finf({0.2, -0.1, 0.05}, {0.01, 0.3, -0.2}), c({1, 2, 3}, {-1, 0.5, 0.25});
    std::vector<double> ts{4, 6, 9, 13.5, 20};
    std::vector<Faraday> samples;
    for (double t : ts) samples.push_back((1 / (t * t)) * Finf + (1 / (t * t * t)) * c);
    double ext = form_max(Finf_from_simulation(ts, samples).F - Finf);
    rep.add("finf_from_samples", ext < 1e-8, ext, 1e-8, "F_inf/t^2 + c/t^3");

    // v0 d_k C^i = C_{0k}^i - vhat^i C^k
    Vec3 v{0.4, -0.3, 0.2};
    double t = 20, h = 1e-3, dvc = 0;
    auto C = [&](const Vec3& u) { return correction_vector(t, u, Finf_from_Q(Q, u).F); };
    Vec3 Cv = C(v);
    for (int k = 0; k < 3; ++k) {
        Vec3 e{};
        e[k] = h;
        Vec3 d = (8.0 * (C(v + e) - C(v - e)) - (C(v + 2.0 * e) - C(v - 2.0 * e))) / (12 * h);
        Vec3 lhs = japanese(v) * d;
        Vec3 rhs = correction_vector(t, v, Finf_from_Q(boost[k], v).F) - Cv[k] * hat(v);
        dvc = std::max(dvc, norm(lhs - rhs) / (1 + norm(lhs)));
    }
    rep.add("correction_velocity_derivative", dvc < 1e-5, dvc, 1e-5, "velocity derivative of the log correction");
    return rep;
}

RunReport synthetic_scattering_suite() {
    RunReport rep;
    rep.kind = "synthetic-scattering";
    std::vector<std::pair<Vec3, Vec3>> probes;
    for (Vec3 x : {Vec3{}, Vec3{0.3, 0, 0}, Vec3{0, -0.3, 0.2}})
        for (Vec3 v : {Vec3{0.2, 0, 0}, Vec3{0.5, 0.3, 0}, Vec3{-0.2, 0.1, 0.3}}) probes.push_back({x, v});
    std::vector<double> times{32, 64, 128, 256, 512, 1024, 2048, 4096};
    ScatteringReport r = modified_scattering_diagnostic(self_similar_f, self_similar_Finf, probes, times);
    rep.add("modified_rate", r.modified_rate >= 0.8, r.modified_rate, 0.8, "Cauchy differences along modified characteristics");
    rep.add("unmodified_rate", r.unmodified_rate <= 0.2, r.unmodified_rate, 0.2, "Cauchy differences along straight lines");
    Series s{"cauchy_differences", {"t", "modified", "unmodified"}, {}};
    for (std::size_t k = 0; k < r.modified_diff.size(); ++k)
        s.rows.push_back({times[k + 1], r.modified_diff[k], r.unmodified_diff[k]});
    rep.series.push_back(s);
    return rep;
}

RunReport radiation_suite() {
    RunReport rep;
    rep.kind = "radiation";
    HertzDipole F(1.0, 1.0);
    const SphereRule& dirs = lebedev_rule(23);
    RadiationField a = extract_radiation(F, uniform_grid(-7, 7, 113), dirs);
    double flux = flux_energy(a).value, slice = slice_energy(F, 0, 8).value;
    double iso = std::fabs(slice - flux) / slice;
    rep.add("dipole_isometry", iso < 1e-2, iso, 1e-2, "|slice - flux| / slice");
    rep.scalars["dipole_flux_energy"] = flux;
    rep.scalars["dipole_slice_energy"] = slice;
    rep.scalars["dipole_exact_energy"] = 8 * kPi / 3 * F.g2_norm();

    auto u = uniform_grid(-5, 5, 81);
    RadiationField base = extract_radiation(F, u, dirs);
    for (const char* name : {"dt", "S"}) {
        SymmetryField Z = symmetry_field(name);
        LambdaField LZ([&](double t, const Vec3& x) { return lie_derivative(F, Z, t, x); }, 1.0);
        RadiationField direct = extract_radiation(LZ, u, dirs), formula = radiation_of_derivative(base, Z);
        double m = 0;
        for (std::size_t i = 0; i < direct.values.size(); ++i)
            for (int c = 0; c < 2; ++c) m = std::max(m, std::fabs(direct.values[i][c] - formula.values[i][c]));
        m /= direct.max_abs();
        rep.add(std::string("dual_path_") + name, m < 1e-3, m, 1e-3, "radiation field of L_Z F: direct against formula");
    }

    ConstraintResiduals c = constraint_residuals(a);
    double cr = std::max(c.divergence, c.bianchi);
    rep.add("constraint_residuals", cr < 1e-12, cr, 1e-12, "divergence and Bianchi on component radiation fields");

    RadiationField rc = extract_radiation(SmoothedCoulomb(1.0, 0.5), uniform_grid(-2, 2, 9), lebedev_rule(11));
    LambdaField moving([](double t, const Vec3& x) { return boosted_coulomb(1.0, {0.2, 0, -0.1}, {0.6, -0.3, 0.4}, t, x); });
    RadiationField rm = extract_radiation(moving, uniform_grid(-2, 2, 9), lebedev_rule(11));
    rep.add("coulomb_no_radiation", rc.max_abs() < 1e-12, rc.max_abs(), 1e-12, "static smoothed charge");
    rep.add("moving_coulomb_no_radiation", rm.max_abs() < 1e-6, rm.max_abs(), 1e-6,
            "uniformly moving point charge; limit by extrapolation in 1/r");

    Series s{"dipole_pattern", {"u", "theta", "alphabar_theta", "exact"}, {}};
    for (std::size_t j = 0; j < a.ndir(); ++j) {
        NullFrame fr = NullFrame::at(dirs.x[j]);
        if (std::fabs(fr.phi) > 1e-9) continue;
        for (std::size_t i = 0; i < a.nu(); i += 4)
            s.rows.push_back({a.u[i], fr.theta, a.at(i, j)[0], F.radiation_theta(a.u[i], fr.theta)});
    }
    rep.series.push_back(s);
    return rep;
}

}  // namespace vmax
