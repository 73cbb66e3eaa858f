#include "robosim/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "robosim/errors.hpp"

namespace robosim {

namespace {

std::string trim(std::string_view sv) {
    const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!sv.empty() && is_space(sv.front())) sv.remove_prefix(1);
    while (!sv.empty() && is_space(sv.back())) sv.remove_suffix(1);
    return std::string(sv);
}

double parse_double(const ConfigEntry& e) {
    const std::string field = e.section + "." + e.key;
    try {
        std::size_t used = 0;
        const double v = std::stod(e.value, &used);
        if (used != e.value.size()) {
            throw ConfigError(field, "trailing characters in number \"" + e.value + "\"");
        }
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError(field, "expected a number, got \"" + e.value + "\"");
    }
}

std::int64_t parse_int(const ConfigEntry& e) {
    const std::string field = e.section + "." + e.key;
    std::int64_t v = 0;
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(field, "expected an integer, got \"" + e.value + "\"");
    }
    return v;
}

bool parse_bool(const ConfigEntry& e) {
    if (e.value == "true" || e.value == "on" || e.value == "1" || e.value == "yes") return true;
    if (e.value == "false" || e.value == "off" || e.value == "0" || e.value == "no") return false;
    throw ConfigError(e.section + "." + e.key, "expected a boolean, got \"" + e.value + "\"");
}

std::vector<double> parse_number_list(const ConfigEntry& e, std::size_t count) {
    const std::string field = e.section + "." + e.key;
    std::vector<double> values;
    std::stringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string token = trim(item);
        try {
            std::size_t used = 0;
            values.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ConfigError(field, "expected a number, got \"" + token + "\"");
        }
    }
    if (values.size() != count) {
        throw ConfigError(field, "expected " + std::to_string(count) + " comma-separated values");
    }
    return values;
}

}  // namespace

std::vector<ConfigEntry> parse_key_value_file(std::istream& in) {
    std::vector<ConfigEntry> entries;
    std::string section;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string text = trim(line);
        if (text.empty()) {
            continue;
        }
        if (text.front() == '[') {
            if (text.back() != ']' || text.size() < 3) {
                throw ConfigError("config", "line " + std::to_string(line_no) +
                                                ": malformed section header \"" + text + "\"");
            }
            section = trim(std::string_view(text).substr(1, text.size() - 2));
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config", "line " + std::to_string(line_no) +
                                            ": expected \"key = value\", got \"" + text + "\"");
        }
        ConfigEntry e;
        e.section = section;
        e.key = trim(std::string_view(text).substr(0, eq));
        e.value = trim(std::string_view(text).substr(eq + 1));
        e.line = line_no;
        if (e.key.empty()) {
            throw ConfigError("config", "line " + std::to_string(line_no) + ": empty key");
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

RunConfig parse_run_config(std::istream& in) {
    RunConfig cfg;
    bool vcd_end_set = false;

    for (const ConfigEntry& e : parse_key_value_file(in)) {
        const std::string field = e.section + "." + e.key;
        if (e.section == "clock") {
            if (e.key == "controller_period_ns") cfg.system.clock.controller_period_ns = parse_int(e);
            else if (e.key == "plant_period_ns") cfg.system.clock.plant_period_ns = parse_int(e);
            else throw ConfigError(field, "unknown key");
        } else if (e.section == "adc") {
            if (e.key == "vref") cfg.system.adc.vref = parse_double(e);
            else if (e.key == "conversion_ticks") cfg.system.adc.conversion_ticks = parse_int(e);
            else if (e.key == "min_pulse_ns") cfg.system.adc.min_pulse_ns = parse_int(e);
            else if (e.key == "detached") cfg.system.adc_detached = parse_bool(e);
            else throw ConfigError(field, "unknown key");
        } else if (e.section == "sensor") {
            if (e.key == "alpha") cfg.system.sensor.alpha = parse_double(e);
            else if (e.key == "beta") cfg.system.sensor.beta = parse_double(e);
            else if (e.key == "d_min_cm") cfg.system.sensor.d_min_cm = parse_double(e);
            else if (e.key == "d_max_cm") cfg.system.sensor.d_max_cm = parse_double(e);
            else if (e.key == "noise") cfg.system.sensor_noise = parse_bool(e);
            else if (e.key == "noise_seed") cfg.system.sensor_noise_seed =
                static_cast<std::uint32_t>(parse_int(e));
            else if (e.key == "table_points") cfg.system.table_points = static_cast<int>(parse_int(e));
            else throw ConfigError(field, "unknown key");
        } else if (e.section == "pwm") {
            if (e.key == "full_on_at_255") cfg.system.pwm.full_on_at_255 = parse_bool(e);
            else throw ConfigError(field, "unknown key");
        } else if (e.section == "control") {
            if (e.key == "d_stop_cm") cfg.system.scenario.control.d_stop_cm = parse_double(e);
            else if (e.key == "d_far_cm") cfg.system.scenario.control.d_far_cm = parse_double(e);
            else if (e.key == "duty_max") {
                const std::int64_t duty = parse_int(e);
                if (duty < 0 || duty > 255) throw ConfigError(field, "must be in [0, 255]");
                cfg.system.scenario.control.duty_max = static_cast<DutyCycle>(duty);
            } else if (e.key == "turn_on_stop") cfg.system.scenario.control.turn_on_stop = parse_bool(e);
            else throw ConfigError(field, "unknown key");
        } else if (e.section == "robot") {
            if (e.key == "wheel_radius_m") cfg.system.geometry.wheel_radius_m = parse_double(e);
            else if (e.key == "axle_length_m") cfg.system.geometry.axle_length_m = parse_double(e);
            else if (e.key == "omega_max_rad_s") cfg.system.geometry.omega_max_rad_s = parse_double(e);
            else if (e.key == "motor_tau_s") cfg.system.geometry.motor_tau_s = parse_double(e);
            else throw ConfigError(field, "unknown key");
        } else if (e.section == "scenario") {
            if (e.key == "x0_m") cfg.system.scenario.initial_pose.x_m = parse_double(e);
            else if (e.key == "y0_m") cfg.system.scenario.initial_pose.y_m = parse_double(e);
            else if (e.key == "theta0_rad") cfg.system.scenario.initial_pose.theta_rad = parse_double(e);
            else if (e.key == "duration_s") cfg.system.scenario.duration_s = parse_double(e);
            else if (e.key == "obstacle") {
                const auto v = parse_number_list(e, 3);
                cfg.system.scenario.obstacles.push_back({v[0], v[1], v[2]});
            } else throw ConfigError(field, "unknown key");
        } else if (e.section == "trace") {
            if (e.key == "csv_decimation") cfg.trace.csv_decimation = static_cast<int>(parse_int(e));
            else if (e.key == "vcd_start_tick") cfg.trace.vcd_start_tick = parse_int(e);
            else if (e.key == "vcd_end_tick") {
                cfg.trace.vcd_end_tick = parse_int(e);
                vcd_end_set = true;
            } else throw ConfigError(field, "unknown key");
        } else {
            throw ConfigError(field.empty() ? e.key : field, "unknown key");
        }
    }

    // default VCD window: from reset up to 1e6 ticks, clipped to the run
    if (!vcd_end_set) {
        const double duration_ns = cfg.system.scenario.duration_s * 1e9;
        if (cfg.system.clock.controller_period_ns > 0 && duration_ns < 9e18) {
            const auto total_ticks =
                static_cast<std::int64_t>(duration_ns / double(cfg.system.clock.controller_period_ns));
            cfg.trace.vcd_end_tick = std::min<std::int64_t>(1'000'000, total_ticks);
        }
    }

    cfg.system.validate();
    cfg.trace.validate();
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", "cannot open " + path.string());
    }
    return parse_run_config(in);
}

}  // namespace robosim
