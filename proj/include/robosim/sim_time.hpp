#pragma once

#include <compare>
#include <cstdint>

namespace robosim {

// Simulation timestamps are integer nanoseconds. Runs are guarded to
// 1e15 ns (~11.6 days of simulated time) so tick arithmetic stays far
// from int64 overflow.
struct SimTime {
    std::int64_t ns = 0;

    static constexpr std::int64_t kMaxRunNs = 1'000'000'000'000'000;

    friend auto operator<=>(const SimTime&, const SimTime&) = default;
};

struct ClockConfig {
    std::int64_t controller_period_ns = 20;    // 50 MHz controller clock
    std::int64_t plant_period_ns = 1'000'000;  // 1 ms physics step

    // plant period must be an exact integer multiple of the controller period
    void validate() const;

    std::int64_t ticks_per_plant_step() const {
        return plant_period_ns / controller_period_ns;
    }
};

}  // namespace robosim
