#include "robosim/trace.hpp"

#include <cstdio>

namespace robosim {

CsvTrace::CsvTrace(std::ostream& out) : out_(out) {
    out_ << kCsvHeader << "\n";
}

void CsvTrace::row(double time_s, const Pose& pose, double omega_l, double omega_r,
                   double distance_cm, std::uint8_t adc_code, DriveCommand command,
                   std::uint8_t duty, std::uint8_t sevenseg) {
    const std::string_view name = to_string(command);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.9f,%.9f,%.9f,%.9f,%.9f,%.9f,%.6f,%u,%.*s,%u,%u\n",
                  time_s, pose.x_m, pose.y_m, pose.theta_rad, omega_l, omega_r,
                  distance_cm, unsigned(adc_code), int(name.size()), name.data(),
                  unsigned(duty), unsigned(sevenseg));
    out_ << buf;
}

void PlotTrace::point(double time_s, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f %.6f\n", time_s, value);
    out_ << buf;
}

}  // namespace robosim
