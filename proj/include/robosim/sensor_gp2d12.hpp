#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "robosim/adc0809.hpp"

namespace robosim {

// Inverse-distance response v(d) = alpha / (d + beta), strictly decreasing
// over [d_min_cm, d_max_cm]. The real part is non-monotonic below ~10 cm,
// so distances are clamped into the valid range instead of modelling the
// ambiguous near field.
struct SensorModel {
    double alpha = 27.0;  // V*cm
    double beta = 0.42;   // cm
    double d_min_cm = 10.0;
    double d_max_cm = 80.0;

    void validate() const;
};

// Distance clamped to [d_min_cm, d_max_cm]; beyond d_max (including "no
// obstacle") this returns the d_max voltage.
double voltage_of_distance(double distance_cm, const SensorModel& model);

struct CalibrationEntry {
    std::uint8_t code;
    double distance_cm;
};

// code -> distance lookup inverting the sensor response: codes strictly
// increasing, distances strictly decreasing, at least two entries.
struct CalibrationTable {
    std::vector<CalibrationEntry> entries;

    void validate() const;
};

// Samples n_points distances uniformly over [d_min, d_max], quantizes the
// model voltage at each and keeps the first (largest-distance) sample per
// distinct code. Throws if the response is too flat to produce two codes.
CalibrationTable build_table(const SensorModel& model, const AdcConfig& adc, int n_points);

// Piecewise-linear interpolation between bracketing entries; codes outside
// the table clamp to the end distances.
double distance_of_code(std::uint8_t code, const CalibrationTable& table);

// Two-column text file "code,distance_cm", ascending code.
void save_table(const CalibrationTable& table, const std::filesystem::path& path);
CalibrationTable load_table(const std::filesystem::path& path);

}  // namespace robosim
