#pragma once
// JSON run configuration, state/initializer loading, and CSV serialization.
// Numeric CSV fields use shortest round-trip formatting so identical inputs
// produce byte-identical files.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sijc/block.hpp"
#include "sijc/inversion.hpp"
#include "sijc/spectrum.hpp"

namespace sijc::io {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TimeGrid {
    double t_max = 2.0;
    double dt = 0.1;
};

struct RunConfig {
    ShapeInvariantModel model;            // harmonic(omega=1), hbar=1
    CouplingConfig coupling{0.2, 0.3, CouplingMode::linear};
    int dim = 16;
    TimeGrid time;
    int series_order = 40;
    std::string output;                   // empty -> stdout
};

// Parse and validate a JSON config document into cfg. Unknown or ill-typed
// fields raise ConfigError naming the field.
void apply_json(RunConfig& cfg, const std::string& json_text);
RunConfig load_run_config(const std::string& path);

std::string format_double(double v);

void write_spectrum_csv(std::ostream& os, const spectrum::SpectrumTable& table);

void write_evolution_header(std::ostream& os);
void write_evolution_rows(std::ostream& os, double t, const TwoChannelState& state);

void write_inversion_header(std::ostream& os);
void write_inversion_rows(std::ostream& os, const inversion::InversionSolution& sol);

// State file: either {"basis": {"channel": "upper"|"lower", "index": k}}
// or {"upper": [[re, im], ...], "lower": [[re, im], ...]}; normalized on load.
TwoChannelState load_state(const std::string& path, int dim);

// Initializer file: {"uu": [[...]], "ul": ..., "lu": ..., "ll": ...} with
// [re, im] entries; must be Hermitian.
BlockOperator load_sigma3_init(const std::string& path, int dim);

} // namespace sijc::io
