#pragma once

#include "sppde/errors.hpp"

#include <string>
#include <vector>

namespace sppde {

/// Bad flags or flag combinations; maps to exit status 2.
struct UsageError : Error {
    using Error::Error;
};

/// -h/--help was requested; carries the help text.
struct HelpRequested : Error {
    using Error::Error;
};

struct RunConfig {
    enum class Mode { Solve, Study, Validate };

    Mode mode = Mode::Study;
    int example_id = 1;
    std::vector<double> epsilons;            ///< default: 2^-8, 2^-10, ..., 2^-20
    std::vector<std::string> epsilon_labels; ///< display labels, e.g. "2^-8"
    std::vector<int> Ns;                     ///< default: 64, 128, 256, 512, 1024
    std::string out_dir = ".";
    bool csv = true;
    bool json = true;
    bool emit_grid = false; ///< solve mode turns this on by default
    int jobs = 1;
    bool sharper_tau = false;
    bool literal_rhs = false;
};

/// "2^-8" (exact power of two via ldexp) or a plain decimal.
double parse_epsilon_token(const std::string& token);

/// Parses flags (and an optional `--config` key=value file; flags win).
/// Throws UsageError on bad input and HelpRequested for -h/--help.
RunConfig parse_config(const std::vector<std::string>& args);

/// Executes a parsed config: writes table/grid files into out_dir and prints
/// a summary. Returns 0 on success, 3 on numerical failure.
int run(const RunConfig& cfg);

/// Full CLI entry point: usage errors exit 2, numerical failures 3.
int run_cli(int argc, char** argv);

} // namespace sppde
