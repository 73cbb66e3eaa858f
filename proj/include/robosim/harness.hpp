#pragma once

#include <filesystem>

#include "robosim/config.hpp"

namespace robosim {

// Exit codes shared by run_simulation and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitAdcFault = 2;

// Runs one scenario and writes trace.csv, trace.vcd, duty_vs_time.dat and
// distance_vs_time.dat into out_dir (created if missing). Returns kExitOk or
// kExitAdcFault; configuration problems throw ConfigError.
int run_simulation(const RunConfig& config, const std::filesystem::path& out_dir,
                   RunResult* result_out = nullptr);

// Full command-line front end (also used by the tests).
int cli_main(int argc, const char* const* argv);

}  // namespace robosim
