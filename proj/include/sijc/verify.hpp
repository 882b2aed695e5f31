#pragma once
// Oracle-comparison suites behind the `verify` CLI command. Each check
// carries the measured deviation and its tolerance; informational checks
// (tolerance = inf) report values the library documents but does not assert.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sijc/io.hpp"

namespace sijc::verify {

struct Check {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

struct Report {
    std::vector<Check> checks;
    bool all_pass() const;
};

bool known_suite(const std::string& suite);

// suite: spectrum | evolution | inversion | series | all
Report run_suite(const std::string& suite, const io::RunConfig& cfg, std::uint64_t seed);

// Lines of the form: CHECK <name> <measured> <tolerance> PASS|FAIL
void print_report(std::ostream& os, const Report& report);

} // namespace sijc::verify
