#pragma once

#include "robosim/motor_driver.hpp"
#include "robosim/pwm.hpp"

namespace robosim {

struct ControlParams {
    double d_stop_cm = 15.0;
    double d_far_cm = 60.0;
    DutyCycle duty_max = 255;
    bool turn_on_stop = false;  // turn in place instead of halting

    // requires 0 < d_stop < d_far <= sensor d_max
    void validate(double sensor_d_max_cm) const;
};

struct ControlDecision {
    DriveCommand command = DriveCommand::Stop;
    DutyCycle duty = 0;
};

// Piecewise-linear speed law: halt (or turn) inside d_stop, full speed
// beyond d_far, linear ramp between. Monotone: larger distance never
// yields a smaller duty.
ControlDecision control_law(double distance_cm, const ControlParams& params);

}  // namespace robosim
