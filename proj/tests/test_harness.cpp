#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "vmax/errors.hpp"
#include "vmax/harness.hpp"
#include "vmax/parallel.hpp"

using namespace vmax;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string tmpdir(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("vmax_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p.string();
}

std::string slurp(const std::string& file) {
    std::ifstream is(file);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

ScenarioConfig small_free() {
    ScenarioConfig c;
    c.mode = "free";
    c.dist.nx = 2;
    c.dist.nv = 2;
    c.dist.jitter_seed = 4;
    c.T = 20;
    c.dt = 1;
    c.diag.decay_times = {5, 8, 12, 16, 20};
    return c;
}

}  // namespace

TEST_CASE("report round trip keeps checks, fits, scalars and series") {
    RunReport r;
    r.kind = "test";
    r.add("a", true, 1.5, 2, "first");
    r.add("b", false, INFINITY, 1e-3, "second");
    r.fits["rate"] = RateFit{2, 3, 2.9, 3.1, 0.01};
    r.scalars["nan"] = std::nan("");
    r.series.push_back(Series{"s", {"t", "y"}, {{1, 2}, {3, 4}}});
    RunReport q = report_from_json(json::parse(to_json(r).dump()));
    CHECK(q.kind == "test");
    REQUIRE(q.checks.size() == 2);
    CHECK(q.find("a")->value == 1.5);
    CHECK(std::isinf(q.find("b")->value));
    CHECK(std::isnan(q.scalars["nan"]));
    CHECK(q.fits["rate"].p == 3);
    CHECK(q.find_series("s")->rows[1][1] == 4);
    CHECK_FALSE(q.passed());
}

TEST_CASE("report rejects unknown schema versions and duplicate checks") {
    RunReport r;
    json j = to_json(r);
    j["schema"] = kReportSchema + 1;
    CHECK_THROWS_AS(report_from_json(j), ConfigError);
    j.erase("schema");
    CHECK_THROWS_AS(report_from_json(j), ConfigError);
    r.add("x", true, 0, 0);
    CHECK_THROWS_AS(r.add("x", true, 0, 0), ConfigError);
}

TEST_CASE("empty report passes and emits both formats") {
    RunReport r;
    CHECK(r.passed());
    std::string d = tmpdir("empty_report");
    emit(r, d, "json");
    emit(r, d, "csv");
    CHECK(read_report(d).checks.empty());
    CHECK(fs::exists(fs::path(d) / "checks.csv"));
    CHECK_THROWS_AS(emit(r, d, "xml"), ConfigError);
}

TEST_CASE("series csv round trip and malformed rows") {
    std::string d = tmpdir("series");
    Series s{"s", {"t", "y"}, {{1, 0.1}, {2, 1e-300}}};
    write_series_csv(s, d + "/s.csv");
    Series q = read_series_csv(d + "/s.csv", "s");
    CHECK(q.rows == s.rows);
    std::ofstream(d + "/bad.csv") << "t,y\n1,2,3\n";
    CHECK_THROWS_AS(read_series_csv(d + "/bad.csv", "bad"), ConfigError);
}

TEST_CASE("config parsing rejects unknown keys, versions and bad values") {
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"schema": 2})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"tee": 1})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"distribution": {"nx": 2, "foo": 1}})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"mode": "warp"})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"T": -1})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"distribution": {"eps": -0.1}})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"diagnostics": {"decay_times": [1, 5]}})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"diagnostics": {"decay_times": [5, 4]}})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"field": {"kind": "file"}})")), ConfigError);
    CHECK_NOTHROW(config_from_json(json::parse(R"({"schema": 1, "T": 0})")));
}

TEST_CASE("config survives a JSON round trip") {
    ScenarioConfig c = small_free();
    c.dist.eps = 0.01;
    c.quad.n_phi = 12;
    c.diag.radiation.scale = 4;
    ScenarioConfig d = config_from_json(to_json(c));
    CHECK(to_json(d) == to_json(c));
    CHECK(d.dist.eps == 0.01);
    ScenarioConfig e = config_from_json(to_json(ScenarioConfig{}));
    CHECK(e.dist.eps < 0);
}

TEST_CASE("eps rescales the data to the requested weighted norm") {
    ScenarioConfig c = small_free();
    c.dist.eps = 0.05;
    CHECK(make_distribution(c).eps == doctest::Approx(0.05).epsilon(1e-12));
    c.dist.eps = 0;
    ParticleEnsemble e = initial_ensemble(c);
    for (double w : e.weight) CHECK(w == 0);
}

TEST_CASE("T = 0 writes the initial state and enables no checks") {
    ScenarioConfig c = small_free();
    c.T = 0;
    c.snapshots = {0};
    c.diag.energy_times = {0};
    std::string d = tmpdir("t0");
    RunReport r = run_scenario(c, d);
    CHECK(r.checks.empty());
    CHECK(r.passed());
    CHECK(fs::exists(fs::path(d) / "snapshots" / "snap_0.csv"));
    CHECK(fs::exists(fs::path(d) / "trajectory.csv"));
    CHECK(fs::exists(fs::path(d) / "profiles.json"));
    CHECK(read_report(d).scalars.at("particles") == 64);
}

TEST_CASE("free run: exact transport, decay check, deterministic across thread counts") {
    ScenarioConfig c = small_free();
    std::string a = tmpdir("free_a"), b = tmpdir("free_b");
    int n = thread_count();
    set_thread_count(1);
    RunReport r = run_scenario(c, a);
    set_thread_count(3);
    run_scenario(c, b);
    set_thread_count(n);
    CHECK(slurp(a + "/trajectory.csv") == slurp(b + "/trajectory.csv"));
    CHECK(slurp(a + "/report.json") == slurp(b + "/report.json"));
    REQUIRE(r.find("spatial_average_conserved"));
    CHECK(r.find("spatial_average_conserved")->passed);
    REQUIRE(r.find("velocity_average_decay"));
    CHECK(r.find("energy_conservation") == nullptr);

    RunReport s = asymptotics_stage(a);
    REQUIRE(s.find("free_momenta_constant") == nullptr);  // no scattering times configured
}

TEST_CASE("weightless particles converge in one Picard iteration") {
    ScenarioConfig c = small_free();
    c.mode = "self-consistent";
    c.dist.eps = 0;
    ParticleEnsemble ens = initial_ensemble(c);
    TrajectoryHistory hist(ens);
    hist.record(0, ens.X, ens.V, {});
    PicardResult r = picard_couple(ens, hist, c, 2.0);
    REQUIRE(r.iterations.size() == 2);
    CHECK(r.max_iterations == 1);
    CHECK(r.displacement[0] == 0);
}

TEST_CASE("Picard iteration reports non-convergence") {
    ScenarioConfig c = small_free();
    c.mode = "self-consistent";
    c.dist.width = 0.3;
    c.picard.max_iter = 1;
    c.quad.n_s = 4;
    c.quad.n_u = 4;
    c.quad.n_phi = 8;
    ParticleEnsemble ens = initial_ensemble(c);
    TrajectoryHistory hist(ens);
    hist.record(0, ens.X, ens.V, {});
    CHECK_THROWS_AS(picard_couple(ens, hist, c, 0.5), ConvergenceError);
    CHECK_THROWS_AS(picard_couple(ens, hist, small_free(), 0.5), ConfigError);
}

TEST_CASE("external charge: Gauss flux and no Picard iteration") {
    ScenarioConfig c = small_free();
    c.mode = "external-field";
    c.field.kind = "pure-charge";
    c.field.charge = 2;
    c.T = 4;
    c.dt = 0.25;
    c.diag.decay_times.clear();
    c.diag.gauss_times = {0, 4};
    std::string d = tmpdir("external");
    RunReport r = run_scenario(c, d);
    REQUIRE(r.find("gauss_flux"));
    CHECK(r.find("gauss_flux")->passed);
    CHECK(r.find("picard_converged") == nullptr);
    CHECK(r.find_series("gauss_flux")->rows.size() == 2 * c.diag.gauss_radii.size());
}

TEST_CASE("asymptotic momenta of free particles are their momenta") {
    ScenarioConfig c = small_free();
    ParticleEnsemble ens = initial_ensemble(c);
    TrajectoryHistory hist(ens);
    hist.record(0, ens.X, ens.V, {});
    push(ens, static_cast<const FieldFunction*>(nullptr), 30, 1, &hist);
    std::vector<Vec3> V = asymptotic_momenta(hist, {10, 20, 30});
    for (std::size_t p = 0; p < V.size(); ++p) CHECK(norm(V[p] - ens.V[p]) < 1e-12);
}

TEST_CASE("bound sweep description") {
    std::string d = tmpdir("bounds");
    std::ofstream(d + "/b.json") << R"({"schema": 1, "times": [3, 10], "radius_factors": [0, 0.5], "max_spread": 2})";
    BoundSweep s = load_bound_sweep(d + "/b.json");
    CHECK(s.times.size() == 2);
    CHECK(s.max_spread == 2);
    std::ofstream(d + "/c.json") << R"({"times": [3], "radius_factors": [0], "extra": 1})";
    CHECK_THROWS_AS(load_bound_sweep(d + "/c.json"), ConfigError);
}
