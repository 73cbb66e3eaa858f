#include "robosim/sensor_gp2d12.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "robosim/errors.hpp"

namespace robosim {

void SensorModel::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw ConfigError("sensor.alpha", "must be positive");
    }
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
        throw ConfigError("sensor.beta", "must be non-negative");
    }
    if (!(d_min_cm > 0.0)) {
        throw ConfigError("sensor.d_min_cm", "must be positive");
    }
    if (!(d_min_cm < d_max_cm)) {
        throw ConfigError("sensor.d_max_cm", "must exceed d_min_cm");
    }
}

double voltage_of_distance(double distance_cm, const SensorModel& model) {
    const double d = std::clamp(distance_cm, model.d_min_cm, model.d_max_cm);
    return model.alpha / (d + model.beta);
}

void CalibrationTable::validate() const {
    if (entries.size() < 2) {
        throw ConfigError("table", "needs at least 2 entries");
    }
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].code <= entries[i - 1].code) {
            throw ConfigError("table", "codes must be strictly increasing");
        }
        if (!(entries[i].distance_cm < entries[i - 1].distance_cm)) {
            throw ConfigError("table", "distances must be strictly decreasing");
        }
    }
}

CalibrationTable build_table(const SensorModel& model, const AdcConfig& adc, int n_points) {
    if (n_points < 2) {
        throw ConfigError("table_points", "need at least 2 calibration points");
    }
    model.validate();
    adc.validate();

    CalibrationTable table;
    const double span = model.d_max_cm - model.d_min_cm;
    // descending distance = ascending code; keep the first (largest-distance)
    // sample for each distinct code
    for (int i = n_points - 1; i >= 0; --i) {
        const double d = model.d_min_cm + span * i / (n_points - 1);
        const std::uint8_t code = quantize(voltage_of_distance(d, model), adc);
        if (table.entries.empty() || code > table.entries.back().code) {
            table.entries.push_back({code, d});
        }
    }
    if (table.entries.size() < 2) {
        throw ConfigError("sensor", "response too flat to calibrate: fewer than 2 distinct codes");
    }
    table.validate();
    return table;
}

double distance_of_code(std::uint8_t code, const CalibrationTable& table) {
    const auto& e = table.entries;
    if (code <= e.front().code) {
        return e.front().distance_cm;  // below the table: farthest distance
    }
    if (code >= e.back().code) {
        return e.back().distance_cm;  // above the table: nearest distance
    }
    auto hi = std::lower_bound(e.begin(), e.end(), code,
                               [](const CalibrationEntry& a, std::uint8_t c) { return a.code < c; });
    if (hi->code == code) {
        return hi->distance_cm;
    }
    auto lo = hi - 1;
    const double f = double(code - lo->code) / double(hi->code - lo->code);
    return lo->distance_cm + f * (hi->distance_cm - lo->distance_cm);
}

void save_table(const CalibrationTable& table, const std::filesystem::path& path) {
    table.validate();
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("table", "cannot open " + path.string() + " for writing");
    }
    out << "code,distance_cm\n";
    char buf[64];
    for (const auto& entry : table.entries) {
        std::snprintf(buf, sizeof buf, "%u,%.9g\n", unsigned(entry.code), entry.distance_cm);
        out << buf;
    }
}

CalibrationTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("table", "cannot open " + path.string());
    }
    CalibrationTable table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "code,distance_cm") {
            continue;
        }
        std::istringstream row(line);
        long code = 0;
        double distance = 0.0;
        char comma = 0;
        if (!(row >> code >> comma >> distance) || comma != ',' || code < 0 || code > 255) {
            throw ConfigError("table", path.string() + ":" + std::to_string(line_no) +
                                           ": expected \"code,distance_cm\"");
        }
        table.entries.push_back({static_cast<std::uint8_t>(code), distance});
    }
    table.validate();
    return table;
}

}  // namespace robosim
