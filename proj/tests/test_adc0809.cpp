#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "robosim/adc0809.hpp"
#include "robosim/errors.hpp"

using namespace robosim;

namespace {

constexpr std::int64_t kPeriodNs = 20;  // 50 MHz

AdcConfig fast_cfg(std::int64_t conversion_ticks = 7) {
    AdcConfig cfg;
    cfg.conversion_ticks = conversion_ticks;
    return cfg;
}

std::array<double, 8> channel0(double volts) {
    std::array<double, 8> v{};
    v[0] = volts;
    return v;
}

// Holds START/ALE high for `hold_ticks`, then low; returns the state after.
AdcState pulse(AdcState s, int hold_ticks, const AdcConfig& cfg, double volts = 2.5) {
    const auto v = channel0(volts);
    AdcBus bus;
    bus.ale = bus.start = true;
    for (int i = 0; i < hold_ticks; ++i) {
        s = adc_step(s, bus, v, cfg, kPeriodNs).state;
    }
    return s;
}

// Closed pair: controller FSM + converter with the same one-tick wiring the
// full system uses (converter consumes the FSM's previous-tick commands).
struct Pair {
    AdcConfig cfg;
    AcquireTiming timing;
    AdcState adc;
    AcquireFsm fsm;
    AdcBus wires;  // fsm-driven pins + adc-driven eoc/data
    bool adc_attached = true;

    explicit Pair(const AdcConfig& c)
        : cfg(c), timing(AcquireTiming::from(c, kPeriodNs)) {}

    // returns the published sample, if any, for this tick
    std::optional<std::uint8_t> tick(double volts) {
        if (adc_attached) {
            auto [state, bus] = adc_step(adc, wires, channel0(volts), cfg, kPeriodNs);
            adc = state;
            wires.eoc = bus.eoc;
            wires.data = bus.data;
        } else {
            wires.eoc = false;
            wires.data.reset();
        }
        AcquireStepResult r = acquire_fsm_step(fsm, wires.eoc, wires.data, timing);
        fsm = r.fsm;
        wires.ale = r.ale;
        wires.start = r.start;
        wires.oe = r.oe;
        wires.addr = r.addr;
        return r.published ? std::optional<std::uint8_t>(fsm.sample) : std::nullopt;
    }
};

}  // namespace

TEST_CASE("quantize staircase") {
    const AdcConfig cfg;
    CHECK(quantize(0.0, cfg) == 0);
    CHECK(quantize(5.0, cfg) == 255);  // full scale clamps to the top code
    CHECK(quantize(2.5, cfg) == 128);  // floor(2.5/5*256)
    CHECK(quantize(-1.0, cfg) == 0);
    CHECK(quantize(7.3, cfg) == 255);
    CHECK_THROWS_AS(quantize(std::nan(""), cfg), std::invalid_argument);
    CHECK_THROWS_AS(quantize(INFINITY, cfg), std::invalid_argument);
}

TEST_CASE("quantize is monotone with sub-LSB error") {
    const AdcConfig cfg;
    const double lsb = cfg.vref / 256.0;
    int prev = -1;
    for (int k = 0; k <= 1024; ++k) {
        const double v = k * cfg.vref / 1024.0;
        const int code = quantize(v, cfg);
        CHECK(code >= prev);
        prev = code;
        if (k < 1024) {
            CHECK(std::abs(v - code * lsb) < lsb);
        }
    }
}

TEST_CASE("pulses shorter than the gate never start a conversion") {
    const AdcConfig cfg = fast_cfg();
    for (int hold = 1; hold <= 4; ++hold) {  // 20..80 ns at 20 ns ticks
        AdcState s = pulse(AdcState{}, hold, cfg);
        CHECK(s.phase != AdcPhase::Converting);
        // dropping the pins resets the accumulated widths entirely
        s = adc_step(s, AdcBus{}, channel0(2.5), cfg, kPeriodNs).state;
        CHECK(s.phase == AdcPhase::Idle);
        CHECK(s.ale_high_ns == 0);
        CHECK(s.start_high_ns == 0);
    }
}

TEST_CASE("pulses at or above 100 ns start a conversion") {
    const AdcConfig cfg = fast_cfg();
    for (int hold : {5, 6, 10}) {  // 100, 120, 200 ns
        const AdcState s = pulse(AdcState{}, hold, cfg);
        CHECK(s.phase == AdcPhase::Converting);
    }
}

TEST_CASE("interrupted pulse starts accumulating from zero") {
    const AdcConfig cfg = fast_cfg();
    AdcState s = pulse(AdcState{}, 3, cfg);  // 60 ns
    s = adc_step(s, AdcBus{}, channel0(2.5), cfg, kPeriodNs).state;  // pins low: reset
    CHECK(s.ale_high_ns == 0);
    s = pulse(s, 4, cfg);  // 80 ns on its own, still short of the gate
    CHECK(s.phase == AdcPhase::Idle);
    s = adc_step(s, AdcBus{}, channel0(2.5), cfg, kPeriodNs).state;
    s = pulse(s, 5, cfg);  // a clean 100 ns pulse converts
    CHECK(s.phase == AdcPhase::Converting);
}

TEST_CASE("EOC pulses exactly conversion_ticks after the conversion begins") {
    const AdcConfig cfg = fast_cfg(5);
    AdcState s = pulse(AdcState{}, 5, cfg);  // conversion begins on this tick
    REQUIRE(s.phase == AdcPhase::Converting);

    const AdcBus idle;
    for (int i = 1; i <= 4; ++i) {
        auto [state, bus] = adc_step(s, idle, channel0(2.5), cfg, kPeriodNs);
        s = state;
        CHECK_FALSE(bus.eoc);
    }
    auto [state, bus] = adc_step(s, idle, channel0(2.5), cfg, kPeriodNs);
    s = state;
    CHECK(bus.eoc);  // 5th tick
    CHECK(s.phase == AdcPhase::Done);

    // the pulse is one tick wide
    auto after = adc_step(s, idle, channel0(2.5), cfg, kPeriodNs);
    CHECK_FALSE(after.bus.eoc);
}

TEST_CASE("data bus is driven only in Done with OE asserted") {
    const AdcConfig cfg = fast_cfg(3);
    AdcState s = pulse(AdcState{}, 5, cfg, 2.5);
    AdcBus oe_high;
    oe_high.oe = true;

    // converting: OE alone must not expose the bus
    auto mid = adc_step(s, oe_high, channel0(2.5), cfg, kPeriodNs);
    CHECK_FALSE(mid.bus.data.has_value());

    // finish the conversion
    s = AdcState{};
    s = pulse(s, 5, cfg, 2.5);
    const AdcBus idle;
    for (int i = 0; i < 3; ++i) {
        s = adc_step(s, idle, channel0(2.5), cfg, kPeriodNs).state;
    }
    REQUIRE(s.phase == AdcPhase::Done);

    auto hiz = adc_step(s, idle, channel0(2.5), cfg, kPeriodNs);
    CHECK_FALSE(hiz.bus.data.has_value());

    auto driven = adc_step(s, oe_high, channel0(2.5), cfg, kPeriodNs);
    REQUIRE(driven.bus.data.has_value());
    CHECK(*driven.bus.data == 128);
}

TEST_CASE("input is sampled at conversion start, not at completion") {
    const AdcConfig cfg = fast_cfg(4);
    AdcState s = pulse(AdcState{}, 5, cfg, 2.5);  // sampled here: 128
    REQUIRE(s.phase == AdcPhase::Converting);

    const AdcBus idle;
    for (int i = 0; i < 4; ++i) {
        s = adc_step(s, idle, channel0(4.9), cfg, kPeriodNs).state;  // input moved
    }
    REQUIRE(s.phase == AdcPhase::Done);
    AdcBus oe_high;
    oe_high.oe = true;
    auto read = adc_step(s, oe_high, channel0(4.9), cfg, kPeriodNs);
    CHECK(*read.bus.data == 128);
}

TEST_CASE("ALE latches the addressed channel") {
    const AdcConfig cfg = fast_cfg(2);
    std::array<double, 8> v{};
    v[3] = 1.25;  // quantize -> 64

    AdcState s;
    AdcBus bus;
    bus.ale = bus.start = true;
    bus.addr = 3;
    for (int i = 0; i < 5; ++i) {
        s = adc_step(s, bus, v, cfg, kPeriodNs).state;
    }
    REQUIRE(s.phase == AdcPhase::Converting);
    CHECK(s.channel == 3);

    const AdcBus idle;
    s = adc_step(s, idle, v, cfg, kPeriodNs).state;
    s = adc_step(s, idle, v, cfg, kPeriodNs).state;
    REQUIRE(s.phase == AdcPhase::Done);
    CHECK(s.result == 64);
}

TEST_CASE("acquisition timing derives from the clock") {
    CHECK(AcquireTiming::from(fast_cfg(), 20).hold_ticks == 5);   // ceil(100/20)
    CHECK(AcquireTiming::from(fast_cfg(), 1000).hold_ticks == 1); // ceil(100/1000)
    CHECK(AcquireTiming::from(fast_cfg(), 30).hold_ticks == 4);   // ceil(100/30)
    CHECK(AcquireTiming::from(fast_cfg(7), 20).timeout_ticks == 70);
}

TEST_CASE("the acquisition FSM holds ALE and START for hold_ticks") {
    const AcquireTiming timing = AcquireTiming::from(fast_cfg(), kPeriodNs);  // hold = 5
    AcquireFsm fsm;
    int high_ticks = 0;
    for (int i = 0; i < 20; ++i) {
        const AcquireStepResult r = acquire_fsm_step(fsm, false, std::nullopt, timing);
        fsm = r.fsm;
        CHECK(r.ale == r.start);
        if (r.ale) {
            ++high_ticks;
        } else {
            break;
        }
    }
    CHECK(high_ticks == 5);  // 100 ns at 20 ns ticks
    CHECK(fsm.phase == AcquirePhase::WaitEoc);
}

TEST_CASE("closed acquisition loop publishes quantize(v) for steady input") {
    Pair pair(fast_cfg(7));
    std::vector<std::uint8_t> samples;
    for (int tick = 0; tick < 2000 && samples.size() < 8; ++tick) {
        if (auto sample = pair.tick(2.5)) {
            samples.push_back(*sample);
        }
    }
    REQUIRE(samples.size() == 8);
    for (std::uint8_t sample : samples) {
        CHECK(sample == 128);  // quantize(2.5 V)
    }
    CHECK_FALSE(pair.fsm.fault);
}

TEST_CASE("acquisition cycles publish at a fixed cadence") {
    Pair pair(fast_cfg(7));
    std::vector<int> publish_ticks;
    for (int tick = 1; tick <= 1000 && publish_ticks.size() < 4; ++tick) {
        if (pair.tick(1.0)) {
            publish_ticks.push_back(tick);
        }
    }
    REQUIRE(publish_ticks.size() == 4);
    const int cadence = publish_ticks[1] - publish_ticks[0];
    CHECK(cadence == publish_ticks[2] - publish_ticks[1]);
    CHECK(cadence == publish_ticks[3] - publish_ticks[2]);
    // hold (5) + conversion (7) + eoc/read/release handshake
    CHECK(cadence == 5 + 7 + 4);
}

TEST_CASE("detached converter raises the fault flag and keeps the last sample") {
    Pair pair(fast_cfg(5));
    // one good sample first
    std::optional<std::uint8_t> sample;
    for (int tick = 0; tick < 200 && !sample; ++tick) {
        sample = pair.tick(2.5);
    }
    REQUIRE(sample == 128);

    pair.adc_attached = false;
    bool published_after_detach = false;
    for (int tick = 0; tick < 200; ++tick) {  // timeout = 10*5 = 50 ticks
        published_after_detach |= pair.tick(2.5).has_value();
    }
    CHECK(pair.fsm.fault);
    CHECK_FALSE(published_after_detach);
    CHECK(pair.fsm.sample == 128);  // last good sample retained
}

TEST_CASE("config validation names the field") {
    AdcConfig cfg;
    cfg.vref = 0.0;
    CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("adc.vref"), ConfigError);
    cfg = AdcConfig{};
    cfg.conversion_ticks = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = AdcConfig{};
    cfg.resolution_bits = 10;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}
