// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace pmdice {

struct ConfigError : std::runtime_error {
    std::string key;
    ConfigError(std::string k, const std::string& message)
        : std::runtime_error(message), key(std::move(k)) {}
};

// Flat key=value text: one pair per line, '#' starts a comment, blank lines
// ignored, later duplicates win.
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config(const std::string& text);

// Throws ConfigError naming the first key not in `allowed`.
void require_keys(const ConfigMap& cfg, const std::set<std::string>& allowed);

std::string get_string(const ConfigMap& cfg, const std::string& key, const std::string& fallback);
double get_double(const ConfigMap& cfg, const std::string& key, double fallback);
std::size_t get_size(const ConfigMap& cfg, const std::string& key, std::size_t fallback);
std::uint64_t get_u64(const ConfigMap& cfg, const std::string& key, std::uint64_t fallback);
bool get_bool(const ConfigMap& cfg, const std::string& key, bool fallback);

}  // namespace pmdice
