#include "robosim/adc0809.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "robosim/errors.hpp"

namespace robosim {

void AdcConfig::validate() const {
    if (!(vref > 0.0) || !std::isfinite(vref)) {
        throw ConfigError("adc.vref", "must be a positive voltage");
    }
    if (resolution_bits != 8) {
        throw ConfigError("adc.resolution_bits", "fixed at 8 for this converter");
    }
    if (conversion_ticks < 1) {
        throw ConfigError("adc.conversion_ticks", "must be at least 1");
    }
    if (min_pulse_ns <= 0) {
        throw ConfigError("adc.min_pulse_ns", "must be positive");
    }
}

std::uint8_t quantize(double volts, const AdcConfig& cfg) {
    if (!std::isfinite(volts)) {
        throw std::invalid_argument("quantize: input voltage must be finite");
    }
    const double v = std::clamp(volts, 0.0, cfg.vref);
    const auto code = static_cast<long>(v / cfg.vref * 256.0);  // floor, v >= 0
    return static_cast<std::uint8_t>(std::min(code, 255L));
}

AdcStepResult adc_step(const AdcState& state, const AdcBus& bus,
                       const std::array<double, 8>& v_in, const AdcConfig& cfg,
                       std::int64_t tick_ns) {
    AdcState s = state;
    AdcBus out = bus;
    out.eoc = false;
    out.data.reset();

    // pulse-width accumulators; a pulse that drops early starts over
    s.ale_high_ns = bus.ale ? s.ale_high_ns + tick_ns : 0;
    s.start_high_ns = bus.start ? s.start_high_ns + tick_ns : 0;

    if (s.phase == AdcPhase::Idle && bus.ale && s.ale_high_ns >= cfg.min_pulse_ns) {
        s.channel = bus.addr & 0x07;
        s.phase = AdcPhase::Latched;
    }
    if (s.phase == AdcPhase::Latched && bus.start && s.start_high_ns >= cfg.min_pulse_ns) {
        s.phase = AdcPhase::Converting;
        s.ticks_remaining = cfg.conversion_ticks;
        s.pending = quantize(v_in[s.channel], cfg);  // sample-and-hold
        s.ale_high_ns = 0;
        s.start_high_ns = 0;
    } else if (s.phase == AdcPhase::Converting) {
        if (--s.ticks_remaining <= 0) {
            s.phase = AdcPhase::Done;
            s.result = s.pending;
            s.oe_seen_in_done = false;
            out.eoc = true;  // one-tick pulse
        }
    } else if (s.phase == AdcPhase::Done) {
        if (bus.oe) {
            s.oe_seen_in_done = true;
        } else if (s.oe_seen_in_done) {
            s.phase = AdcPhase::Idle;  // controller released after the read
            s.oe_seen_in_done = false;
        }
    }

    if (s.phase == AdcPhase::Done && bus.oe) {
        out.data = s.result;
    }
    return {s, out};
}

AcquireTiming AcquireTiming::from(const AdcConfig& adc, std::int64_t controller_period_ns) {
    AcquireTiming t{};
    t.hold_ticks = (adc.min_pulse_ns + controller_period_ns - 1) / controller_period_ns;
    t.timeout_ticks = 10 * adc.conversion_ticks;
    return t;
}

AcquireStepResult acquire_fsm_step(const AcquireFsm& fsm, bool eoc,
                                   std::optional<std::uint8_t> data,
                                   const AcquireTiming& timing) {
    AcquireStepResult r;
    r.fsm = fsm;
    AcquireFsm& f = r.fsm;
    r.addr = f.channel;

    switch (f.phase) {
        case AcquirePhase::Pulse:
            r.ale = true;
            r.start = true;
            if (++f.ticks_in_phase >= timing.hold_ticks) {
                f.phase = AcquirePhase::WaitEoc;
                f.ticks_in_phase = 0;
            }
            break;
        case AcquirePhase::WaitEoc:
            if (eoc) {
                f.phase = AcquirePhase::Read;
                f.ticks_in_phase = 0;
            } else if (++f.ticks_in_phase > timing.timeout_ticks) {
                f.fault = true;  // sticky; keep the last good sample and retry
                f.phase = AcquirePhase::Pulse;
                f.ticks_in_phase = 0;
            }
            break;
        case AcquirePhase::Read:
            r.oe = true;
            if (data) {
                f.sample = *data;
                r.published = true;
                f.phase = AcquirePhase::Release;
                f.ticks_in_phase = 0;
            } else if (++f.ticks_in_phase > timing.timeout_ticks) {
                f.fault = true;
                f.phase = AcquirePhase::Pulse;
                f.ticks_in_phase = 0;
            }
            break;
        case AcquirePhase::Release:
            // one all-low tick so the converter returns to Idle before the
            // next ALE/START pulse
            f.phase = AcquirePhase::Pulse;
            f.ticks_in_phase = 0;
            break;
    }
    return r;
}

}  // namespace robosim
