#include "run_config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fzd::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

long long parse_int(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(value.c_str(), &end, 10);
    if (errno != 0 || end == value.c_str() || *end != '\0')
        throw ConfigError("config: key '" + key + "' needs an integer, got '" + value + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (errno != 0 || end == value.c_str() || *end != '\0' || value.find('-') != std::string::npos)
        throw ConfigError("config: key '" + key + "' needs an unsigned integer, got '" + value +
                          "'");
    return v;
}

double parse_real(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (errno != 0 || end == value.c_str() || *end != '\0')
        throw ConfigError("config: key '" + key + "' needs a number, got '" + value + "'");
    return v;
}

bool parse_flag(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("config: key '" + key + "' needs true/false, got '" + value + "'");
}

int parse_sign(const std::string& key, const std::string& value) {
    if (value == "1" || value == "+1") return +1;
    if (value == "-1") return -1;
    throw ConfigError("config: key '" + key + "' needs +1 or -1, got '" + value + "'");
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");

    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << "config: " << path << ":" << lineno << ": expected 'key = value'";
            throw ConfigError(msg.str());
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config: " + path + ":" + std::to_string(lineno) + ": empty key");
        entries.emplace_back(key, value);
    }
    return entries;
}

void apply_config_entries(const std::vector<std::pair<std::string, std::string>>& entries,
                          const std::vector<std::string>& set_keys, RunConfig& cfg) {
    const auto overridden = [&](const std::string& key) {
        return std::find(set_keys.begin(), set_keys.end(), key) != set_keys.end();
    };

    for (const auto& [key, value] : entries) {
        if (key == "subcommand") {
            if (cfg.subcommand.empty())
                cfg.subcommand = value;
            else if (cfg.subcommand != value)
                throw ConfigError("config: subcommand '" + value +
                                  "' contradicts command line '" + cfg.subcommand + "'");
        } else if (key == "n") {
            if (!overridden(key)) cfg.n = static_cast<int>(parse_int(key, value));
        } else if (key == "m") {
            if (!overridden(key)) cfg.m = static_cast<int>(parse_int(key, value));
        } else if (key == "m-max") {
            if (!overridden(key)) cfg.m_max = static_cast<int>(parse_int(key, value));
        } else if (key == "sign") {
            if (!overridden(key)) cfg.sign = parse_sign(key, value);
        } else if (key == "seed") {
            if (!overridden(key)) cfg.seed = parse_u64(key, value);
        } else if (key == "budget") {
            if (!overridden(key)) cfg.budget = static_cast<int>(parse_int(key, value));
        } else if (key == "threads") {
            if (!overridden(key)) cfg.threads = static_cast<int>(parse_int(key, value));
        } else if (key == "grid") {
            if (!overridden(key)) cfg.grid = static_cast<int>(parse_int(key, value));
        } else if (key == "samples") {
            if (!overridden(key)) cfg.samples = static_cast<int>(parse_int(key, value));
        } else if (key == "pairs") {
            if (!overridden(key)) cfg.pairs = static_cast<int>(parse_int(key, value));
        } else if (key == "trials") {
            if (!overridden(key)) cfg.trials = static_cast<int>(parse_int(key, value));
        } else if (key == "demo") {
            if (!overridden(key)) cfg.demo = parse_flag(key, value);
        } else if (key == "tol-eig") {
            if (!overridden(key)) cfg.tol_eig = parse_real(key, value);
        } else if (key == "tol-id") {
            if (!overridden(key)) cfg.tol_id = parse_real(key, value);
        } else if (key == "emit") {
            if (!overridden(key)) cfg.emit = value;
        } else if (key == "out") {
            if (!overridden(key)) cfg.out = value;
        } else if (key == "matrix") {
            if (!overridden(key)) cfg.matrix_path = value;
        } else {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }
}

void validate(const RunConfig& cfg) {
    if (!cfg.emit.empty() && cfg.emit != "csv" && cfg.emit != "json")
        throw ConfigError("emit must be csv or json, got '" + cfg.emit + "'");
    if (cfg.sign != +1 && cfg.sign != -1) throw ConfigError("sign must be +1 or -1");
    if (cfg.budget < 1) throw ConfigError("budget must be positive");
    if (cfg.threads < 1) throw ConfigError("threads must be positive");
    if (cfg.grid < 1) throw ConfigError("grid must be positive");
    if (cfg.samples < 1) throw ConfigError("samples must be positive");
    if (cfg.pairs < 1) throw ConfigError("pairs must be positive");
    if (cfg.trials < 1) throw ConfigError("trials must be positive");
    if (!(cfg.tol_eig > 0.0)) throw ConfigError("tol-eig must be positive");
    if (!(cfg.tol_id > 0.0)) throw ConfigError("tol-id must be positive");
}

}  // namespace fzd::cli
