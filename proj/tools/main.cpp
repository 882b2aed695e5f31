// sijc command-line front end: spectrum tables, state evolution, population
// inversion time series, and the verification suites. Exit codes: 0 success,
// 1 verification failure, 2 usage/config error, 3 I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sijc/evolution.hpp"
#include "sijc/inversion.hpp"
#include "sijc/io.hpp"
#include "sijc/spectrum.hpp"
#include "sijc/verify.hpp"

namespace {

using namespace sijc;

struct CommonArgs {
    std::string config_path;
    std::optional<double> alpha, delta, t_max, dt;
    std::optional<int> dim, order;
    std::optional<std::string> mode, out;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON config file");
    cmd->add_option("--alpha", args.alpha, "coupling strength override");
    cmd->add_option("--delta", args.delta, "detuning override");
    cmd->add_option("--mode", args.mode, "coupling mode: linear|intensity")
        ->check(CLI::IsMember({"linear", "intensity"}));
    cmd->add_option("--dim", args.dim, "ladder truncation N");
    cmd->add_option("--t-max", args.t_max, "final time");
    cmd->add_option("--dt", args.dt, "time step");
    cmd->add_option("--order", args.order, "series truncation order");
    cmd->add_option("--out", args.out, "output CSV path (default stdout)");
}

io::RunConfig build_config(const CommonArgs& args) {
    io::RunConfig cfg;
    if (!args.config_path.empty()) cfg = io::load_run_config(args.config_path);
    if (args.alpha) {
        if (!(*args.alpha > 0.0)) throw io::ConfigError("--alpha must be positive");
        cfg.coupling.alpha = *args.alpha;
    }
    if (args.delta) cfg.coupling.delta = *args.delta;
    if (args.mode) {
        cfg.coupling.mode = *args.mode == "intensity" ? CouplingMode::intensity
                                                      : CouplingMode::linear;
    }
    if (args.dim) {
        if (*args.dim < 2) throw io::ConfigError("--dim must be >= 2");
        cfg.dim = *args.dim;
    }
    if (args.t_max) {
        if (*args.t_max < 0.0) throw io::ConfigError("--t-max must be >= 0");
        cfg.time.t_max = *args.t_max;
    }
    if (args.dt) {
        if (!(*args.dt > 0.0)) throw io::ConfigError("--dt must be positive");
        cfg.time.dt = *args.dt;
    }
    if (args.order) {
        if (*args.order < 1) throw io::ConfigError("--order must be >= 1");
        cfg.series_order = *args.order;
    }
    if (args.out) cfg.output = *args.out;
    return cfg;
}

// Runs fn against cfg.output or stdout; returns 3 on stream failure.
template <typename Fn>
int with_output(const io::RunConfig& cfg, Fn&& fn) {
    if (cfg.output.empty()) {
        fn(std::cout);
        return std::cout.good() ? 0 : 3;
    }
    std::ofstream out(cfg.output);
    if (!out) {
        std::cerr << "error: cannot open output file: " << cfg.output << "\n";
        return 3;
    }
    fn(out);
    out.flush();
    if (!out.good()) {
        std::cerr << "error: failed writing output file: " << cfg.output << "\n";
        return 3;
    }
    return 0;
}

int run_spectrum(const io::RunConfig& cfg, int m_max) {
    const EnergyLadder lad = energy_ladder(cfg.model, cfg.dim);
    if (m_max < 0) m_max = cfg.dim - 2;
    const auto table = spectrum::spectrum_table(lad, cfg.coupling, m_max);
    return with_output(cfg, [&](std::ostream& os) { io::write_spectrum_csv(os, table); });
}

int run_evolve(const io::RunConfig& cfg, const std::string& state_path) {
    const EnergyLadder lad = energy_ladder(cfg.model, cfg.dim);
    const TwoChannelState initial =
        state_path.empty() ? TwoChannelState::basis(cfg.dim, true, 0)
                           : io::load_state(state_path, cfg.dim);
    return with_output(cfg, [&](std::ostream& os) {
        io::write_evolution_header(os);
        for (int k = 0;; ++k) {
            const double t = cfg.time.dt * k;
            if (t > cfg.time.t_max + 0.5 * cfg.time.dt) break;
            io::write_evolution_rows(os, t, evolution::evolve_state(initial, lad, cfg.coupling, t));
            if (cfg.time.t_max == 0.0) break;
        }
    });
}

int run_inversion(const io::RunConfig& cfg, const std::string& init_path) {
    const EnergyLadder lad = energy_ladder(cfg.model, cfg.dim);
    const BlockOperator init = init_path.empty()
                                   ? sigma3_block(cfg.dim)
                                   : io::load_sigma3_init(init_path, cfg.dim);
    return with_output(cfg, [&](std::ostream& os) {
        io::write_inversion_header(os);
        for (int k = 0;; ++k) {
            const double t = cfg.time.dt * k;
            if (t > cfg.time.t_max + 0.5 * cfg.time.dt) break;
            io::write_inversion_rows(
                os, inversion::sigma3_of_t(lad, cfg.coupling, init, t, cfg.series_order));
            if (cfg.time.t_max == 0.0) break;
        }
    });
}

int run_verify(const io::RunConfig& cfg, const std::string& suite, std::uint64_t seed) {
    const auto report = verify::run_suite(suite, cfg, seed);
    verify::print_report(std::cout, report);
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sijc: shape-invariant Jaynes-Cummings simulator"};
    app.require_subcommand(1);

    CommonArgs spectrum_args, evolve_args, inversion_args, verify_args;
    int m_max = -1;
    std::string state_path, init_path, suite;
    std::uint64_t seed = 42;

    auto* cmd_spectrum = app.add_subcommand("spectrum", "dressed spectrum table as CSV");
    add_common(cmd_spectrum, spectrum_args);
    cmd_spectrum->add_option("--m-max", m_max, "highest rung index (default N-2)");

    auto* cmd_evolve = app.add_subcommand("evolve", "time evolution of a state as CSV");
    add_common(cmd_evolve, evolve_args);
    cmd_evolve->add_option("--state", state_path, "initial state JSON file");

    auto* cmd_inversion =
        app.add_subcommand("inversion", "population inversion time series as CSV");
    add_common(cmd_inversion, inversion_args);
    cmd_inversion->add_option("--init", init_path, "sigma3 initializer JSON file");

    auto* cmd_verify = app.add_subcommand("verify", "oracle-comparison suites");
    add_common(cmd_verify, verify_args);
    cmd_verify->add_option("--suite", suite, "spectrum|evolution|inversion|series|all")
        ->required()
        ->check(CLI::IsMember({"spectrum", "evolution", "inversion", "series", "all"}));
    cmd_verify->add_option("--seed", seed, "sweep seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_spectrum->parsed()) return run_spectrum(build_config(spectrum_args), m_max);
        if (cmd_evolve->parsed()) return run_evolve(build_config(evolve_args), state_path);
        if (cmd_inversion->parsed()) {
            return run_inversion(build_config(inversion_args), init_path);
        }
        return run_verify(build_config(verify_args), suite, seed);
    } catch (const io::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
