#include "robosim/pwm.hpp"

namespace robosim {

PwmState pwm_step(PwmState state, DutyCycle duty, const PwmConfig& cfg) {
    state.counter = static_cast<std::uint8_t>(state.counter + 1);  // wraps 255 -> 0
    state.output = state.counter < duty || (cfg.full_on_at_255 && duty == 255);
    return state;
}

double duty_fraction(DutyCycle duty, const PwmConfig& cfg) {
    if (cfg.full_on_at_255 && duty == 255) {
        return 1.0;
    }
    return duty / 256.0;
}

}  // namespace robosim
