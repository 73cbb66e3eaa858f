#include "robosim/harness.hpp"

#include <fstream>

#include "robosim/errors.hpp"
#include "robosim/system.hpp"

namespace robosim {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("out", "cannot open " + path.string() + " for writing");
    }
    return out;
}

}  // namespace

int run_simulation(const RunConfig& config, const std::filesystem::path& out_dir,
                   RunResult* result_out) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw ConfigError("out", "cannot create " + out_dir.string() + ": " + ec.message());
    }

    std::ofstream csv = open_out(out_dir / "trace.csv");
    std::ofstream vcd = open_out(out_dir / "trace.vcd");
    std::ofstream duty_plot = open_out(out_dir / "duty_vs_time.dat");
    std::ofstream distance_plot = open_out(out_dir / "distance_vs_time.dat");

    System system(config.system);
    system.attach_csv(csv, config.trace.csv_decimation);
    system.attach_vcd(vcd, config.trace.vcd_start_tick, config.trace.vcd_end_tick);
    system.attach_plots(duty_plot, distance_plot);

    const RunResult result = system.run();
    if (result_out) {
        *result_out = result;
    }
    return result.adc_fault ? kExitAdcFault : kExitOk;
}

}  // namespace robosim
