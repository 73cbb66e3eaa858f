#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "robosim/sim_time.hpp"

namespace robosim {

// Anything stepped once per controller clock tick.
class SyncComponent {
public:
    virtual ~SyncComponent() = default;
    virtual void step(SimTime now) = 0;
};

// Fixed-step scheduler. Components run in ascending registration order on
// every tick; identical registration sequences give bit-identical traces.
// Single-threaded: one kernel owns one run.
class SimKernel {
public:
    explicit SimKernel(ClockConfig clock);

    // `order` must be unique among registered components; lower orders step
    // first. Returns a handle (index into the schedule).
    std::size_t register_component(SyncComponent& component, int order);

    // Advances to the last tick boundary <= t_end and returns the number of
    // controller ticks executed. t_end must not lie in the past.
    std::int64_t run_until(SimTime t_end);

    SimTime now() const { return now_; }
    std::int64_t ticks() const { return tick_count_; }
    const ClockConfig& clock() const { return clock_; }

private:
    struct Entry {
        int order;
        SyncComponent* component;
    };

    ClockConfig clock_;
    SimTime now_{};
    std::int64_t tick_count_ = 0;
    std::vector<Entry> entries_;  // kept sorted by order
};

}  // namespace robosim
