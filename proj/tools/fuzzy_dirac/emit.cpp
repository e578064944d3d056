#include "emit.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "run_config.hpp"

#ifndef FZD_VERSION
#define FZD_VERSION "0.0.0"
#endif

namespace fzd::cli {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_meta(const MetaBlock& meta) {
    std::ostringstream out;
    out << "# fuzzy-dirac " FZD_VERSION " " << meta.subcommand << "\n";
    for (const auto& [key, value] : meta.params) out << "# " << key << " = " << value << "\n";
    out << "# seed = " << meta.seed << "\n";
    out << "# tol-eig = " << format_double(meta.tol_eig)
        << "  tol-id = " << format_double(meta.tol_id) << "\n";
    return out.str();
}

nlohmann::ordered_json json_meta(const MetaBlock& meta) {
    nlohmann::ordered_json j;
    j["version"] = FZD_VERSION;
    j["subcommand"] = meta.subcommand;
    for (const auto& [key, value] : meta.params) j[key] = value;
    j["seed"] = meta.seed;
    j["tol_eig"] = meta.tol_eig;
    j["tol_id"] = meta.tol_id;
    return j;
}

nlohmann::ordered_json matrix_json(const Matrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto data = nlohmann::ordered_json::array();
    for (int r = 0; r < m.rows(); r++)
        for (int c = 0; c < m.cols(); c++)
            data.push_back({m(r, c).real(), m(r, c).imag()});
    j["data"] = std::move(data);
    return j;
}

void write_artifact(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + path + "'");
    out << text;
    if (!out) throw ConfigError("failed writing output file '" + path + "'");
}

}  // namespace fzd::cli
