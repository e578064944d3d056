#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/// Run configuration for the fuzzy-dirac front end: one flat bag of
/// typed settings filled from an optional `key = value` config file and
/// overridden by command-line flags.

namespace fzd::cli {

/// Rejected configuration: unknown key, malformed value, missing or
/// contradictory required setting. Mapped to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// One or more verification assertions exceeded tolerance. Carries the
/// offending lines for the error report. Mapped to exit code 1.
struct SuiteFailure : std::runtime_error {
    std::vector<std::string> failures;

    explicit SuiteFailure(std::vector<std::string> lines)
        : std::runtime_error(lines.empty() ? "suite failure" : lines.front()),
          failures(std::move(lines)) {}
};

struct RunConfig {
    std::string subcommand;

    int n = -1;            ///< level for spectrum / verify / seminorm / symbol / irrep
    int m = -1;            ///< level for bridge
    int m_max = -1;        ///< top level for converge
    int sign = +1;         ///< spinor choice
    std::uint64_t seed = 0;
    int budget = 1;        ///< ascent budget unit for bridge / converge
    int threads = 1;       ///< cap on concurrent levels in converge
    int grid = 64;         ///< grid resolution for symbol
    int samples = 64;      ///< direction samples for the translation seminorm
    int pairs = 50;        ///< random pairs for linking
    int trials = 10;       ///< random group elements for equivariance
    bool demo = false;     ///< linking demo instance selector
    double tol_eig = 1e-9;
    double tol_id = 1e-10;
    std::string emit;      ///< "csv" or "json"; empty = subcommand default
    std::string out;       ///< artifact path; empty = stdout
    std::string matrix_path;
};

/// Parses a flat `key = value` config file. Blank lines and lines
/// starting with '#' are skipped. Throws ConfigError on any line that
/// is not of that shape.
std::vector<std::pair<std::string, std::string>> parse_config_file(const std::string& path);

/// Applies config entries to every field whose flag was not passed on
/// the command line (`set_keys` holds the long names of flags that
/// were). Throws ConfigError on unknown keys or unparsable values.
void apply_config_entries(const std::vector<std::pair<std::string, std::string>>& entries,
                          const std::vector<std::string>& set_keys, RunConfig& cfg);

/// Range checks shared by every subcommand (positive counts, known
/// emit format, sign in {-1, +1}). Throws ConfigError.
void validate(const RunConfig& cfg);

}  // namespace fzd::cli
