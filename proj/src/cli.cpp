#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "robosim/config.hpp"
#include "robosim/errors.hpp"
#include "robosim/harness.hpp"
#include "robosim/sensor_gp2d12.hpp"

namespace robosim {

namespace {

struct RunArgs {
    std::string config_path;
    std::string out_dir = "out";
    std::string vcd_window;  // "START:END" in controller ticks
    std::string table_path;
};

struct CalibrateArgs {
    std::string model = "27.0,0.42";   // alpha,beta
    std::string range = "10,80";       // d_min,d_max in cm
    double vref = 5.0;
    int points = 64;
    std::string out_path;
};

std::pair<double, double> parse_pair(const std::string& text, const std::string& field) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw ConfigError(field, "expected two comma-separated values, got \"" + text + "\"");
    }
    try {
        std::size_t used_a = 0, used_b = 0;
        const std::string a = text.substr(0, comma);
        const std::string b = text.substr(comma + 1);
        const double first = std::stod(a, &used_a);
        const double second = std::stod(b, &used_b);
        if (used_a != a.size() || used_b != b.size()) {
            throw std::invalid_argument(text);
        }
        return {first, second};
    } catch (const std::exception&) {
        throw ConfigError(field, "expected two numbers, got \"" + text + "\"");
    }
}

int do_run(const RunArgs& args) {
    RunConfig config = load_run_config(args.config_path);
    if (!args.table_path.empty()) {
        config.system.table = load_table(args.table_path);
    }
    if (!args.vcd_window.empty()) {
        const auto colon = args.vcd_window.find(':');
        if (colon == std::string::npos) {
            throw ConfigError("vcd-window", "expected START:END in ticks");
        }
        try {
            config.trace.vcd_start_tick = std::stoll(args.vcd_window.substr(0, colon));
            config.trace.vcd_end_tick = std::stoll(args.vcd_window.substr(colon + 1));
        } catch (const std::exception&) {
            throw ConfigError("vcd-window", "expected START:END in ticks");
        }
        config.trace.validate();
    }

    RunResult result;
    const int status = run_simulation(config, args.out_dir, &result);
    std::cout << "ran " << result.ticks << " ticks, " << result.samples_published
              << " samples, final pose (" << result.final_pose.x_m << ", "
              << result.final_pose.y_m << ") m, forward distance " << result.final_raycast_cm
              << " cm\n";
    if (result.adc_fault) {
        std::cerr << "adc fault: acquisition timed out during the run\n";
    }
    return status;
}

int do_calibrate(const CalibrateArgs& args) {
    SensorModel model;
    std::tie(model.alpha, model.beta) = parse_pair(args.model, "model");
    std::tie(model.d_min_cm, model.d_max_cm) = parse_pair(args.range, "range");
    AdcConfig adc;
    adc.vref = args.vref;

    const CalibrationTable table = build_table(model, adc, args.points);
    save_table(table, args.out_path);
    std::cout << "wrote " << table.entries.size() << " calibration points to " << args.out_path
              << "\n";
    return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Closed-loop simulation of an FPGA mobile-robot controller"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "run a scenario and emit trace files");
    run->add_option("config", run_args.config_path, "run configuration file")->required();
    run->add_option("--out", run_args.out_dir, "output directory (default: out)");
    run->add_option("--vcd-window", run_args.vcd_window, "VCD window START:END in ticks");
    run->add_option("--table", run_args.table_path, "calibration table file overriding the model");

    CalibrateArgs cal_args;
    CLI::App* calibrate = app.add_subcommand("calibrate", "write a code->distance lookup table");
    calibrate->add_option("--model", cal_args.model, "sensor model as alpha,beta (V*cm, cm)");
    calibrate->add_option("--range", cal_args.range, "valid range as d_min,d_max in cm");
    calibrate->add_option("--vref", cal_args.vref, "ADC reference voltage");
    calibrate->add_option("--points", cal_args.points, "number of sampled distances");
    calibrate->add_option("--out", cal_args.out_path, "output table file")->required();

    try {
        app.parse(argc, argv);
        if (run->parsed()) {
            return do_run(run_args);
        }
        return do_calibrate(cal_args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfigError;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
}

}  // namespace robosim
