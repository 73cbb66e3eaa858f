#pragma once

#include <cstdint>

namespace robosim {

// Compare threshold against the free-running 8-bit counter.
using DutyCycle = std::uint8_t;

struct PwmConfig {
    // With this on, duty 255 drives the pin continuously high so full motor
    // drive is reachable; otherwise the comparator tops out at 255/256.
    bool full_on_at_255 = true;
};

struct PwmState {
    std::uint8_t counter = 0;
    bool output = false;
};

// One controller tick: counter wraps mod 256, output = counter < duty.
// Duty is sampled every tick, not latched at the period boundary.
PwmState pwm_step(PwmState state, DutyCycle duty, const PwmConfig& cfg = {});

// Commanded high fraction of one 256-tick period.
double duty_fraction(DutyCycle duty, const PwmConfig& cfg = {});

}  // namespace robosim
