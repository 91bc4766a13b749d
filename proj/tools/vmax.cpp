#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vmax/errors.hpp"
#include "vmax/harness.hpp"
#include "vmax/parallel.hpp"
#include "vmax/suites.hpp"

using namespace vmax;

namespace {

void print_summary(const RunReport& r, std::ostream& os) {
    for (const auto& c : r.checks)
        os << (c.passed ? "PASS " : "FAIL ") << c.name << "  value=" << c.value << "  threshold=" << c.threshold << '\n';
    if (r.checks.empty()) os << "no checks enabled\n";
}

int finish(const RunReport& r) {
    print_summary(r, std::cerr);
    return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("VMAX_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n < 1) throw std::invalid_argument("");
            set_thread_count(n);
        } catch (const std::exception&) {
            std::cerr << "VMAX_THREADS must be a positive integer\n";
            return 2;
        }
    }

    CLI::App app{"Vlasov-Maxwell dispersive-regime toolkit"};
    app.require_subcommand(1);

    std::string config, rundir, format = "json", outdir;
    auto* sim = app.add_subcommand("simulate", "run a scenario into a run directory");
    sim->add_option("config", config, "scenario configuration (JSON)")->required()->check(CLI::ExistingFile);
    sim->add_option("-o,--out", outdir, "run directory (default: next to the config, named after it)");

    auto* kernels = app.add_subcommand("kernels", "kernel utilities");
    kernels->require_subcommand(1);
    KernelSuiteOptions kopt;
    auto* kverify = kernels->add_subcommand("verify", "check the kernel bounds and identities");
    kverify->add_option("--samples", kopt.samples, "random (omega, v) pairs")->check(CLI::PositiveNumber);
    kverify->add_option("--quad-order", kopt.quad_order, "Lebedev degree for the mean-zero identity")
        ->check(CLI::PositiveNumber);
    kverify->add_option("--seed", kopt.seed, "random seed");

    auto* asym = app.add_subcommand("asymptotics", "asymptotic momenta, F_inf and modified scattering");
    asym->add_option("rundir", rundir)->required()->check(CLI::ExistingDirectory);
    auto* rad = app.add_subcommand("radiation", "radiation field, constraints and energy split");
    rad->add_option("rundir", rundir)->required()->check(CLI::ExistingDirectory);

    auto* bounds = app.add_subcommand("verify-bounds", "integral bounds for the field parts");
    bounds->add_option("config", config, "bound sweep description (JSON)")->required()->check(CLI::ExistingFile);

    auto* rep = app.add_subcommand("report", "re-emit the report of a run directory");
    rep->add_option("rundir", rundir)->required()->check(CLI::ExistingDirectory);
    rep->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            ScenarioConfig c = load_config(config);
            if (outdir.empty()) {
                std::filesystem::path p(config);
                outdir = (p.parent_path() / (p.stem().string() + "_run")).string();
            }
            RunReport r = run_scenario(c, outdir);
            std::cout << outdir << '\n';
            return finish(r);
        }
        if (kverify->parsed()) {
            RunReport r = kernel_suite(kopt);
            std::cout << std::setw(2) << to_json(r) << '\n';
            return finish(r);
        }
        if (asym->parsed()) return finish(asymptotics_stage(rundir));
        if (rad->parsed()) return finish(radiation_stage(rundir));
        if (bounds->parsed()) {
            RunReport r = bound_suite(load_bound_sweep(config));
            std::cout << std::setw(2) << to_json(r) << '\n';
            return finish(r);
        }
        if (rep->parsed()) {
            RunReport r = read_report(rundir);
            for (const auto& f : emit(r, rundir, format)) std::cout << f << '\n';
            return finish(r);
        }
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
