// Acceptance run: one PASS/FAIL line per criterion, exit code 0 only when all pass.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vmax/harness.hpp"
#include "vmax/parallel.hpp"
#include "vmax/suites.hpp"

using namespace vmax;
namespace fs = std::filesystem;

namespace {

const std::string kConfigs = std::string(VMAX_SOURCE_DIR) + "/configs/";

struct Outcome {
    bool passed = true;
    std::vector<std::string> notes;
};

// Checks every named check of r (all when names is empty); missing names fail.
void require(Outcome& o, const RunReport& r, const std::string& label, const std::vector<std::string>& names = {}) {
    auto note = [&](const Check& c) {
        std::ostringstream os;
        os << label << '/' << c.name << (c.passed ? " ok " : " FAILED ") << c.value << " vs " << c.threshold;
        o.notes.push_back(os.str());
        o.passed = o.passed && c.passed;
    };
    if (names.empty()) {
        if (r.checks.empty()) {
            o.passed = false;
            o.notes.push_back(label + ": no checks ran");
        }
        for (const auto& c : r.checks) note(c);
        return;
    }
    for (const auto& n : names) {
        if (const Check* c = r.find(n)) {
            note(*c);
        } else {
            o.passed = false;
            o.notes.push_back(label + "/" + n + " missing");
        }
    }
}

// The coupled run feeds criteria 7, 9 and 10; it is run once and its stages are cached.
struct Coupled {
    std::string dir;
    RunReport sim, asym, rad;
    std::string error;
    double seconds = 0;
};
Coupled& coupled(const std::string& root) {
    static Coupled c;
    static bool done = false;
    if (done) return c;
    done = true;
    c.dir = root + "/coupled";
    fs::remove_all(c.dir);
    auto t0 = std::chrono::steady_clock::now();
    try {
        c.sim = run_scenario(load_config(kConfigs + "coupled.json"), c.dir);
        c.asym = asymptotics_stage(c.dir);
        c.rad = radiation_stage(c.dir);
    } catch (const std::exception& e) {
        c.error = e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("VMAX_THREADS")) set_thread_count(std::max(1, std::atoi(env)));
    std::string root = argc > 1 ? argv[1] : "acceptance_runs";
    fs::create_directories(root);

    struct Criterion {
        int id;
        const char* name;
        double limit_s;  // wall-clock allowance
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> all = {
        {1, "kernel identities", 60, [](Outcome& o) { require(o, kernel_suite(), "kernels"); }},
        {2, "geometry", 60, [](Outcome& o) { require(o, geometry_suite(), "geometry"); }},
        {3, "oracle fields", 300, [](Outcome& o) { require(o, oracle_field_suite(), "oracles"); }},
        {4, "derivative decomposition", 300, [](Outcome& o) { require(o, derivative_suite(), "derivatives"); }},
        {5, "integral bounds", 120,
         [](Outcome& o) { require(o, bound_suite(load_bound_sweep(kConfigs + "bounds.json")), "bounds"); }},
        {6, "free-transport decay", 120,
         [&](Outcome& o) {
             std::string d = root + "/free";
             fs::remove_all(d);
             require(o, run_scenario(load_config(kConfigs + "free.json"), d), "free",
                     {"velocity_average_decay", "spatial_average_conserved"});
         }},
        {7, "coupled small-data run", 1800,
         [&](Outcome& o) {
             Coupled& c = coupled(root);
             if (!c.error.empty()) {
                 o.passed = false;
                 o.notes.push_back("coupled: " + c.error);
             }
             require(o, c.sim, "coupled",
                     {"picard_converged", "energy_conservation", "velocity_average_decay", "current_profile_trend"});
             std::ostringstream os;
             os << "coupled pipeline " << c.seconds << " s (simulate, asymptotics, radiation)";
             o.notes.push_back(os.str());
         }},
        {8, "asymptotic-field consistency", 600, [](Outcome& o) { require(o, asymptotic_field_suite(), "finf"); }},
        {9, "modified scattering", 600,
         [&](Outcome& o) {
             require(o, synthetic_scattering_suite(), "synthetic");
             require(o, coupled(root).asym, "coupled", {"modified_beats_unmodified"});
         }},
        {10, "radiation and scattering map", 600,
         [&](Outcome& o) {
             require(o, radiation_suite(), "radiation");
             require(o, coupled(root).rad, "coupled", {"energy_split"});
         }},
    };

    bool ok = true;
    for (auto& c : all) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.passed = false;
            o.notes.push_back(std::string("error: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        // the coupled pipeline runs and is timed under criterion 7; 9 and 10 reuse it
        if (s > c.limit_s) {
            o.passed = false;
            o.notes.push_back("over the time allowance of " + std::to_string(static_cast<int>(c.limit_s)) + " s");
        }
        for (const auto& n : o.notes) std::cout << "    " << n << '\n';
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ") " << s << " s"
                  << std::endl;
        ok = ok && o.passed;
    }
    return ok ? 0 : 1;
}
