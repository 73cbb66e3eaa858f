#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>

#include "robosim/adc0809.hpp"
#include "robosim/controller.hpp"
#include "robosim/motor_driver.hpp"
#include "robosim/plant.hpp"
#include "robosim/pwm.hpp"
#include "robosim/sensor_gp2d12.hpp"
#include "robosim/sevenseg.hpp"
#include "robosim/sim_kernel.hpp"
#include "robosim/trace.hpp"
#include "robosim/vcd.hpp"

namespace robosim {

struct TraceOptions {
    int csv_decimation = 1;  // keep every Nth published sample
    std::int64_t vcd_start_tick = 0;
    std::int64_t vcd_end_tick = 1'000'000;  // clipped to the run length

    static constexpr std::int64_t kMaxVcdWindowTicks = 10'000'000;

    void validate() const;
};

struct SystemConfig {
    ClockConfig clock;
    AdcConfig adc;
    bool adc_detached = false;  // fault injection: converter never answers
    SensorModel sensor;
    bool sensor_noise = false;  // +-half-LSB uniform noise on the sensor line
    std::uint32_t sensor_noise_seed = 1;
    int table_points = 64;
    std::optional<CalibrationTable> table;  // built from the model when absent
    PwmConfig pwm;
    RobotGeometry geometry;
    Scenario scenario;

    void validate() const;
};

struct RunResult {
    std::int64_t ticks = 0;
    std::int64_t plant_steps = 0;
    std::int64_t samples_published = 0;
    bool adc_fault = false;
    Pose final_pose;
    double final_raycast_cm = 0.0;
    double min_raycast_cm = 0.0;  // over the initial pose and every plant step
};

// Everything the components exchange during one tick. Values persist between
// ticks, so a reader sees whatever the producing component last drove.
struct Wires {
    std::array<double, 8> adc_volts{};  // channel 0 = sensor, others grounded
    // acquisition FSM -> converter (consumed on the converter's next tick)
    bool ale = false, start = false, oe = false;
    std::uint8_t addr = 0;
    // converter -> acquisition FSM
    bool eoc = false;
    std::optional<std::uint8_t> data;
    // controller state published on fresh samples, held in between
    bool fresh = false;
    std::uint8_t adc_code = 0;
    bool fault = false;
    double measured_cm = 0.0;
    DriveCommand command = DriveCommand::Stop;
    DutyCycle duty = 0;
    // PWM and H-bridge
    bool pwm_out = false;
    L293Pins pins;
    bool ena_gated = false, enb_gated = false;
    WheelDrive gated;
    // plant truth
    Pose pose;
    double omega_l = 0.0, omega_r = 0.0;
    double distance_cm = 0.0;  // forward raycast, updated every plant step
    // display
    std::uint8_t sevenseg = 0;
};

// The closed loop: sensor -> ADC -> acquisition/control -> PWM -> L293D ->
// plant -> display, stepped in that fixed order by the kernel. One System
// owns one deterministic run.
class System {
public:
    explicit System(SystemConfig cfg);

    System(const System&) = delete;
    System& operator=(const System&) = delete;

    // Trace sinks are optional and must be attached before running.
    void attach_csv(std::ostream& out, int decimation = 1);
    void attach_vcd(std::ostream& out, std::int64_t start_tick, std::int64_t end_tick);
    void attach_plots(std::ostream& duty_out, std::ostream& distance_out);

    // Runs the whole scenario duration.
    RunResult run();

    // Advances exactly n controller ticks (test hook).
    std::int64_t run_ticks(std::int64_t n);

    const Wires& wires() const { return wires_; }
    const CalibrationTable& table() const { return table_; }
    const SystemConfig& config() const { return cfg_; }
    RunResult result() const;

private:
    struct SensorC : SyncComponent {
        System* s;
        void step(SimTime now) override;
    };
    struct AdcC : SyncComponent {
        System* s;
        void step(SimTime now) override;
    };
    struct ControllerC : SyncComponent {
        System* s;
        void step(SimTime now) override;
    };
    struct PwmC : SyncComponent {
        System* s;
        void step(SimTime now) override;
    };
    struct MotorC : SyncComponent {
        System* s;
        void step(SimTime now) override;
    };
    struct DisplayC : SyncComponent {
        System* s;
        void step(SimTime now) override;
    };
    struct PlantC : SyncComponent {
        System* s;
        void step(SimTime now) override;
    };
    struct TraceC : SyncComponent {
        System* s;
        void step(SimTime now) override;
    };

    double sensor_voltage(double distance_cm);
    void setup_vcd_signals();
    void sample_vcd(SimTime now);

    SystemConfig cfg_;
    CalibrationTable table_;
    SimKernel kernel_;
    Wires wires_;

    // component states
    std::optional<std::minstd_rand> noise_rng_;
    AdcState adc_state_;
    AcquireFsm fsm_;
    AcquireTiming timing_;
    PwmState pwm_state_;
    std::int64_t plant_tick_in_window_ = 0;
    double drive_accum_l_ = 0.0, drive_accum_r_ = 0.0;
    std::int64_t plant_steps_ = 0;
    double min_raycast_cm_ = 0.0;
    std::int64_t samples_published_ = 0;

    // trace sinks
    std::optional<CsvTrace> csv_;
    int csv_decimation_ = 1;
    std::int64_t csv_sample_index_ = 0;
    std::optional<VcdWriter> vcd_;
    std::int64_t vcd_start_tick_ = 0, vcd_end_tick_ = 0;
    std::vector<VcdWriter::SignalId> vcd_wires_;
    VcdWriter::SignalId vcd_data_ = 0;
    std::optional<PlotTrace> duty_plot_;
    std::optional<PlotTrace> distance_plot_;

    SensorC sensor_c_;
    AdcC adc_c_;
    ControllerC controller_c_;
    PwmC pwm_c_;
    MotorC motor_c_;
    DisplayC display_c_;
    PlantC plant_c_;
    TraceC trace_c_;
};

}  // namespace robosim
