#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <fzd/matrix.hpp>

/// Deterministic artifact emission: %.17g number formatting, '\n' line
/// ends, '.' decimal separator, and the meta header (version, seed,
/// tolerances) every emitted file carries.

namespace fzd::cli {

/// Shortest-exact decimal rendering used for every CSV value.
std::string format_double(double v);

/// Header fields shared by CSV ('#' comment lines) and JSON ("meta"
/// object) artifacts. `params` holds subcommand-specific settings in
/// emission order.
struct MetaBlock {
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t seed = 0;
    double tol_eig = 0.0;
    double tol_id = 0.0;
};

std::string csv_meta(const MetaBlock& meta);
nlohmann::ordered_json json_meta(const MetaBlock& meta);

/// The repo matrix encoding {rows, cols, data: [[re, im], ...]} as a
/// JSON object.
nlohmann::ordered_json matrix_json(const Matrix& m);

/// Writes to `path`, or to stdout when `path` is empty.
void write_artifact(const std::string& path, const std::string& text);

}  // namespace fzd::cli
