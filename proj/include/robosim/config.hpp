#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "robosim/system.hpp"

namespace robosim {

// One "key = value" line from a run configuration file.
struct ConfigEntry {
    std::string section;
    std::string key;
    std::string value;
    int line = 0;
};

// Flat key-value format with [section] headers, '#' comments and repeatable
// keys (used for obstacles). Schema documented in the README.
std::vector<ConfigEntry> parse_key_value_file(std::istream& in);

struct RunConfig {
    SystemConfig system;
    TraceOptions trace;
};

// Parses and fully validates a run configuration; every diagnostic names the
// offending "section.key". Unknown keys are errors.
RunConfig load_run_config(const std::filesystem::path& path);
RunConfig parse_run_config(std::istream& in);

}  // namespace robosim
