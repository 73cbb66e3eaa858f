#pragma once

#include <cstdint>
#include <ostream>

#include "robosim/motor_driver.hpp"
#include "robosim/plant.hpp"

namespace robosim {

inline constexpr const char* kCsvHeader =
    "time_s,x_m,y_m,theta_rad,omega_l,omega_r,distance_cm,adc_code,command,duty,sevenseg";

// One CSV row per published ADC sample. The column set and formatting are
// stable so golden runs can be diffed byte for byte.
class CsvTrace {
public:
    explicit CsvTrace(std::ostream& out);

    void row(double time_s, const Pose& pose, double omega_l, double omega_r,
             double distance_cm, std::uint8_t adc_code, DriveCommand command,
             std::uint8_t duty, std::uint8_t sevenseg);

private:
    std::ostream& out_;
};

// Two-column "time value" text, consumable by any plotting tool.
class PlotTrace {
public:
    explicit PlotTrace(std::ostream& out) : out_(out) {}

    void point(double time_s, double value);

private:
    std::ostream& out_;
};

}  // namespace robosim
