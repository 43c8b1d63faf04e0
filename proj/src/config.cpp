// SPDX-License-Identifier: Apache-2.0
#include "pmdice/config.hpp"

#include <cstdlib>
#include <sstream>

namespace pmdice {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

ConfigMap parse_config(const std::string& text) {
    ConfigMap cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line, "config line " + std::to_string(lineno) +
                                        ": expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(key, "config line " + std::to_string(lineno) + ": empty key");
        cfg[key] = value;
    }
    return cfg;
}

void require_keys(const ConfigMap& cfg, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : cfg) {
        (void)value;
        if (!allowed.count(key)) throw ConfigError(key, "invalid config key: " + key);
    }
}

std::string get_string(const ConfigMap& cfg, const std::string& key, const std::string& fallback) {
    const auto it = cfg.find(key);
    return it == cfg.end() ? fallback : it->second;
}

double get_double(const ConfigMap& cfg, const std::string& key, double fallback) {
    const auto it = cfg.find(key);
    if (it == cfg.end()) return fallback;
    char* end = nullptr;
    const double v = std::strtod(it->second.c_str(), &end);
    if (end == it->second.c_str() || *end != '\0')
        throw ConfigError(key, "config key " + key + ": not a number: '" + it->second + "'");
    return v;
}

std::size_t get_size(const ConfigMap& cfg, const std::string& key, std::size_t fallback) {
    const auto it = cfg.find(key);
    if (it == cfg.end()) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(it->second.c_str(), &end, 10);
    // strtoull accepts a leading '-' by wrapping around; reject it explicitly.
    if (end == it->second.c_str() || *end != '\0' || it->second.find('-') != std::string::npos)
        throw ConfigError(key, "config key " + key + ": not a count: '" + it->second + "'");
    return static_cast<std::size_t>(v);
}

std::uint64_t get_u64(const ConfigMap& cfg, const std::string& key, std::uint64_t fallback) {
    const auto it = cfg.find(key);
    if (it == cfg.end()) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(it->second.c_str(), &end, 10);
    if (end == it->second.c_str() || *end != '\0' || it->second.find('-') != std::string::npos)
        throw ConfigError(key, "config key " + key + ": not an integer: '" + it->second + "'");
    return v;
}

bool get_bool(const ConfigMap& cfg, const std::string& key, bool fallback) {
    const auto it = cfg.find(key);
    if (it == cfg.end()) return fallback;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw ConfigError(key, "config key " + key + ": expected true/false: '" + it->second + "'");
}

}  // namespace pmdice
