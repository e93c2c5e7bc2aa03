#include "fragqsp/errors.hpp"
#include "fragqsp/experiment.hpp"
#include "fragqsp/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

namespace {

struct Invocation {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_path;
    std::function<void(const fragqsp::ExperimentConfig&, std::ostream&)> runner;
};

void add_subcommand(CLI::App& app, Invocation& inv, const char* name, const char* help,
                    void (*runner)(const fragqsp::ExperimentConfig&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", inv.config_path, "key=value config file");
    sub->add_option("--set", inv.overrides, "override config entry, key=value")
        ->take_all();
    sub->add_option("--out", inv.out_path, "output path (default: stdout)");
    sub->callback([&inv, runner] { inv.runner = runner; });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pair-hopping chain fragments driven as quantum signal processors"};
    app.set_version_flag("--version", fragqsp::kVersion);
    app.require_subcommand(1);

    Invocation inv;
    add_subcommand(app, inv, "fragment",
                   "enumerate a Krylov fragment and its frozen-wall regions",
                   fragqsp::run_fragment);
    add_subcommand(app, inv, "response",
                   "QSP response curves over the signal grid or the momentum sectors",
                   fragqsp::run_response);
    add_subcommand(app, inv, "transition",
                   "per-sector and cumulative transition probabilities",
                   fragqsp::run_transition);
    add_subcommand(app, inv, "compare",
                   "exact-diagonalization vs free-fermion cross-check (JSON)",
                   fragqsp::run_compare);
    add_subcommand(app, inv, "stroboscopic",
                   "sigma^z profile after each drive cycle",
                   fragqsp::run_stroboscopic);
    add_subcommand(app, inv, "ensemble",
                   "time-averaged, diagonal-ensemble and fragment averages",
                   fragqsp::run_ensemble);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        fragqsp::ExperimentConfig cfg =
            inv.config_path.empty() ? fragqsp::ExperimentConfig{}
                                    : fragqsp::ExperimentConfig::from_file(inv.config_path);
        for (const std::string& kv : inv.overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw fragqsp::ConfigError("--set expects key=value, got '" + kv + "'");
            cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
        }

        if (inv.out_path.empty() || inv.out_path == "-") {
            inv.runner(cfg, std::cout);
        } else {
            std::ofstream out(inv.out_path, std::ios::binary);
            if (!out)
                throw fragqsp::ConfigError("cannot open output file '" + inv.out_path + "'");
            inv.runner(cfg, out);
        }
        return 0;
    } catch (const fragqsp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const fragqsp::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 3;
    } catch (const fragqsp::VerificationError& e) {
        std::cerr << "verification error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
