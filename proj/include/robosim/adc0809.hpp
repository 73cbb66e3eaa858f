#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace robosim {

struct AdcConfig {
    double vref = 5.0;
    int resolution_bits = 8;               // fixed by the part
    std::int64_t conversion_ticks = 5000;  // ~100 us at 50 MHz
    std::int64_t min_pulse_ns = 100;       // START/ALE must be high this long

    void validate() const;
};

// Ideal floor staircase with top-code clamp: floor(clamp(v,0,vref)/vref*256),
// clamped to 255. Throws std::invalid_argument on non-finite input.
std::uint8_t quantize(double volts, const AdcConfig& cfg);

enum class AdcPhase { Idle, Latched, Converting, Done };

struct AdcState {
    AdcPhase phase = AdcPhase::Idle;
    std::uint8_t channel = 0;
    std::uint8_t result = 0;  // valid only in Done
    std::int64_t ticks_remaining = 0;
    std::int64_t start_high_ns = 0;  // accumulated pulse durations
    std::int64_t ale_high_ns = 0;
    std::uint8_t pending = 0;  // input sampled at conversion start
    bool oe_seen_in_done = false;
};

struct AdcBus {
    // controller-driven
    bool start = false;
    bool ale = false;
    bool oe = false;
    std::uint8_t addr = 0;
    // converter-driven
    bool eoc = false;
    std::optional<std::uint8_t> data;  // nullopt = high impedance
};

struct AdcStepResult {
    AdcState state;
    AdcBus bus;  // control pins echoed, eoc/data driven by the converter
};

// One controller tick of the converter. ALE high for >= min_pulse_ns latches
// addr; START high for >= min_pulse_ns while Latched begins a conversion of
// conversion_ticks ticks (input sampled once, at conversion start). EOC is
// pulsed high for exactly one tick when the conversion completes; the data
// bus is driven only while Done with OE asserted. Pulses shorter than the
// gate are silently ignored. tick_ns is the controller clock period.
AdcStepResult adc_step(const AdcState& state, const AdcBus& bus,
                       const std::array<double, 8>& v_in, const AdcConfig& cfg,
                       std::int64_t tick_ns);

// --- controller-side acquisition FSM -------------------------------------

enum class AcquirePhase { Pulse, WaitEoc, Read, Release };

struct AcquireTiming {
    std::int64_t hold_ticks;     // ceil(min_pulse_ns / controller period)
    std::int64_t timeout_ticks;  // 10 * conversion_ticks

    static AcquireTiming from(const AdcConfig& adc, std::int64_t controller_period_ns);
};

struct AcquireFsm {
    AcquirePhase phase = AcquirePhase::Pulse;
    std::int64_t ticks_in_phase = 0;
    std::uint8_t channel = 0;  // only channel 0 is wired to the sensor
    std::uint8_t sample = 0;   // last good sample, retained across faults
    bool fault = false;        // sticky timeout flag
};

struct AcquireStepResult {
    AcquireFsm fsm;
    // pin commands for the converter's next tick
    bool start = false;
    bool ale = false;
    bool oe = false;
    std::uint8_t addr = 0;
    bool published = false;  // a fresh sample landed in fsm.sample this tick
};

// Canonical acquisition sequence: hold ALE+START for hold_ticks, wait for
// EOC, assert OE, latch the data bus, release, repeat. If EOC never arrives
// within timeout_ticks the fault flag is raised, the last good sample is
// retained and the cycle restarts.
AcquireStepResult acquire_fsm_step(const AcquireFsm& fsm, bool eoc,
                                   std::optional<std::uint8_t> data,
                                   const AcquireTiming& timing);

}  // namespace robosim
