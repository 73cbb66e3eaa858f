#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "robosim/pwm.hpp"

using namespace robosim;

namespace {

const PwmConfig kNoSaturation{false};

// independent oracle: run the generator and count high ticks
int high_ticks(PwmState& state, DutyCycle duty, int window, const PwmConfig& cfg) {
    int highs = 0;
    for (int i = 0; i < window; ++i) {
        state = pwm_step(state, duty, cfg);
        highs += state.output ? 1 : 0;
    }
    return highs;
}

// tiny deterministic generator for property-style cases
struct Lcg {
    std::uint32_t state;
    std::uint32_t next() { return state = state * 1664525u + 1013904223u; }
};

}  // namespace

TEST_CASE("duty 0 never drives the pin") {
    PwmState s;
    CHECK(high_ticks(s, 0, 256, kNoSaturation) == 0);
}

TEST_CASE("duty 128 gives exactly 128 high ticks per period") {
    PwmState s;
    CHECK(high_ticks(s, 128, 256, kNoSaturation) == 128);
}

TEST_CASE("duty 255 without saturation tops out at 255 of 256") {
    PwmState s;
    CHECK(high_ticks(s, 255, 256, kNoSaturation) == 255);
}

TEST_CASE("duty 255 with saturation holds the pin high") {
    PwmState s;
    CHECK(high_ticks(s, 255, 256, PwmConfig{true}) == 256);
}

TEST_CASE("high count equals duty over any 256-tick window") {
    // exhaustive duties, window phase varied by a seeded generator
    Lcg rng{12345};
    for (int duty = 0; duty <= 255; ++duty) {
        PwmState s;
        const int skew = int(rng.next() % 256);
        for (int i = 0; i < skew; ++i) {
            s = pwm_step(s, DutyCycle(duty), kNoSaturation);
        }
        CHECK(high_ticks(s, DutyCycle(duty), 256, kNoSaturation) == duty);
    }
}

TEST_CASE("output is periodic with period 256") {
    PwmState s;
    bool first_period[256];
    for (int i = 0; i < 256; ++i) {
        s = pwm_step(s, 77, kNoSaturation);
        first_period[i] = s.output;
    }
    for (int i = 0; i < 256; ++i) {
        s = pwm_step(s, 77, kNoSaturation);
        CHECK(s.output == first_period[i]);
    }
}

TEST_CASE("duty changes take effect immediately and bound the adjacent periods") {
    // the 256-tick windows just before and just after a mid-period duty
    // change count exactly old and new highs, whatever the counter phase
    Lcg rng{99};
    for (int trial = 0; trial < 200; ++trial) {
        const auto old_duty = DutyCycle(rng.next() % 256);
        const auto new_duty = DutyCycle(rng.next() % 256);
        const int phase = int(rng.next() % 256);  // change lands mid-period

        PwmState s;
        for (int i = 0; i < phase; ++i) {
            s = pwm_step(s, old_duty, kNoSaturation);
        }
        const int before = high_ticks(s, old_duty, 256, kNoSaturation);
        const int after = high_ticks(s, new_duty, 256, kNoSaturation);
        CHECK(before == int(old_duty));
        CHECK(after == int(new_duty));
        CHECK(before + after <= int(old_duty) + int(new_duty));
    }
}

TEST_CASE("duty_fraction") {
    CHECK(duty_fraction(0, kNoSaturation) == 0.0);
    CHECK(duty_fraction(64, kNoSaturation) == 0.25);
    CHECK(duty_fraction(255, PwmConfig{true}) == 1.0);
    CHECK(duty_fraction(255, kNoSaturation) == doctest::Approx(255.0 / 256.0));
    CHECK(duty_fraction(128, PwmConfig{true}) == 0.5);
}
