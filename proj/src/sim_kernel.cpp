#include "robosim/sim_kernel.hpp"

#include <algorithm>
#include <stdexcept>

#include "robosim/errors.hpp"

namespace robosim {

void ClockConfig::validate() const {
    if (controller_period_ns <= 0) {
        throw ConfigError("clock.controller_period_ns", "must be positive");
    }
    if (plant_period_ns <= 0) {
        throw ConfigError("clock.plant_period_ns", "must be positive");
    }
    if (plant_period_ns % controller_period_ns != 0) {
        throw ConfigError("clock.plant_period_ns",
                          "must be an exact integer multiple of controller_period_ns");
    }
}

SimKernel::SimKernel(ClockConfig clock) : clock_(clock) {
    clock_.validate();
}

std::size_t SimKernel::register_component(SyncComponent& component, int order) {
    auto pos = std::lower_bound(entries_.begin(), entries_.end(), order,
                                [](const Entry& e, int o) { return e.order < o; });
    if (pos != entries_.end() && pos->order == order) {
        throw ConfigError("order", "duplicate component order " + std::to_string(order));
    }
    pos = entries_.insert(pos, Entry{order, &component});
    return static_cast<std::size_t>(pos - entries_.begin());
}

std::int64_t SimKernel::run_until(SimTime t_end) {
    if (t_end < now_) {
        throw std::invalid_argument("run_until: t_end lies in the past");
    }
    if (t_end.ns > SimTime::kMaxRunNs) {
        throw std::invalid_argument("run_until: t_end exceeds the supported run length");
    }
    std::int64_t executed = 0;
    const std::int64_t period = clock_.controller_period_ns;
    while (now_.ns + period <= t_end.ns) {
        now_.ns += period;
        ++tick_count_;
        ++executed;
        for (const Entry& e : entries_) {
            e.component->step(now_);
        }
    }
    return executed;
}

}  // namespace robosim
