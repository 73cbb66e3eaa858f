#include "robosim/motor_driver.hpp"

namespace robosim {

std::string_view to_string(DriveCommand cmd) {
    switch (cmd) {
        case DriveCommand::Forward: return "Forward";
        case DriveCommand::Reverse: return "Reverse";
        case DriveCommand::Left: return "Left";
        case DriveCommand::Right: return "Right";
        case DriveCommand::Stop: return "Stop";
    }
    return "Stop";
}

L293Pins encode(DriveCommand cmd) {
    // ENA ENB 1A 2A 3A 4A
    switch (cmd) {
        case DriveCommand::Forward: return {1, 1, 1, 0, 1, 0};
        case DriveCommand::Reverse: return {1, 1, 0, 1, 0, 1};
        case DriveCommand::Left:    return {0, 1, 0, 0, 1, 0};
        case DriveCommand::Right:   return {1, 0, 1, 0, 0, 0};
        case DriveCommand::Stop:    return {0, 0, 0, 0, 0, 0};
    }
    return {};
}

namespace {

int half_bridge(bool enabled, bool high_in, bool low_in) {
    if (!enabled || high_in == low_in) {
        return 0;  // disabled or equal inputs: coast
    }
    return high_in ? +1 : -1;
}

}  // namespace

WheelDrive decode(const L293Pins& pins, bool pwm_level) {
    const bool ena = pins.ena && pwm_level;
    const bool enb = pins.enb && pwm_level;
    return {half_bridge(ena, pins.a1, pins.a2), half_bridge(enb, pins.a3, pins.a4)};
}

}  // namespace robosim
