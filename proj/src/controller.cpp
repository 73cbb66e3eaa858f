#include "robosim/controller.hpp"

#include <cmath>

#include "robosim/errors.hpp"

namespace robosim {

void ControlParams::validate(double sensor_d_max_cm) const {
    if (!(d_stop_cm > 0.0)) {
        throw ConfigError("control.d_stop_cm", "must be positive");
    }
    if (!(d_stop_cm < d_far_cm)) {
        throw ConfigError("control.d_stop_cm", "must be below d_far_cm");
    }
    if (!(d_far_cm <= sensor_d_max_cm)) {
        throw ConfigError("control.d_far_cm", "must not exceed the sensor range");
    }
}

ControlDecision control_law(double distance_cm, const ControlParams& params) {
    if (distance_cm <= params.d_stop_cm) {
        if (params.turn_on_stop) {
            return {DriveCommand::Left, params.duty_max};
        }
        return {DriveCommand::Stop, 0};
    }
    if (distance_cm >= params.d_far_cm) {
        return {DriveCommand::Forward, params.duty_max};
    }
    const double fraction = (distance_cm - params.d_stop_cm) / (params.d_far_cm - params.d_stop_cm);
    const auto duty = static_cast<DutyCycle>(std::lround(params.duty_max * fraction));
    return {DriveCommand::Forward, duty};
}

}  // namespace robosim
