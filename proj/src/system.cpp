#include "robosim/system.hpp"

#include <cmath>

#include "robosim/errors.hpp"

namespace robosim {

void TraceOptions::validate() const {
    if (csv_decimation < 1) {
        throw ConfigError("trace.csv_decimation", "must be at least 1");
    }
    if (vcd_start_tick < 0) {
        throw ConfigError("trace.vcd_start_tick", "must be non-negative");
    }
    if (vcd_end_tick < vcd_start_tick) {
        throw ConfigError("trace.vcd_end_tick", "must not precede vcd_start_tick");
    }
    if (vcd_end_tick - vcd_start_tick > kMaxVcdWindowTicks) {
        throw ConfigError("trace.vcd_end_tick", "window longer than 1e7 ticks");
    }
}

void SystemConfig::validate() const {
    clock.validate();
    adc.validate();
    sensor.validate();
    geometry.validate();
    scenario.validate();
    scenario.control.validate(sensor.d_max_cm);
    if (table_points < 2) {
        throw ConfigError("sensor.table_points", "need at least 2 calibration points");
    }
    if (table) {
        table->validate();
    }
    const double duration_ns = scenario.duration_s * 1e9;
    if (duration_ns > double(SimTime::kMaxRunNs)) {
        throw ConfigError("scenario.duration_s", "exceeds the supported run length");
    }
}

namespace {

ClockConfig checked_clock(const SystemConfig& cfg) {
    cfg.validate();
    return cfg.clock;
}

}  // namespace

System::System(SystemConfig cfg) : cfg_(std::move(cfg)), kernel_(checked_clock(cfg_)) {
    table_ = cfg_.table ? *cfg_.table : build_table(cfg_.sensor, cfg_.adc, cfg_.table_points);
    timing_ = AcquireTiming::from(cfg_.adc, cfg_.clock.controller_period_ns);

    if (cfg_.sensor_noise) {
        noise_rng_.emplace(cfg_.sensor_noise_seed);
    }

    wires_.pose = cfg_.scenario.initial_pose;
    wires_.pose.theta_rad = normalize_angle(wires_.pose.theta_rad);
    wires_.distance_cm = raycast_distance(wires_.pose, cfg_.scenario, cfg_.sensor.d_max_cm);
    min_raycast_cm_ = wires_.distance_cm;
    wires_.pins = encode(wires_.command);
    wires_.sevenseg = encode_bcd(display_digit(wires_.measured_cm)).bits();

    sensor_c_.s = this;
    adc_c_.s = this;
    controller_c_.s = this;
    pwm_c_.s = this;
    motor_c_.s = this;
    display_c_.s = this;
    plant_c_.s = this;
    trace_c_.s = this;

    // documented tick order: sensor, converter, acquisition/control, pwm,
    // driver, display, plant, trace
    kernel_.register_component(sensor_c_, 10);
    kernel_.register_component(adc_c_, 20);
    kernel_.register_component(controller_c_, 30);
    kernel_.register_component(pwm_c_, 40);
    kernel_.register_component(motor_c_, 50);
    kernel_.register_component(display_c_, 60);
    kernel_.register_component(plant_c_, 70);
    kernel_.register_component(trace_c_, 80);
}

double System::sensor_voltage(double distance_cm) {
    double v = voltage_of_distance(distance_cm, cfg_.sensor);
    if (noise_rng_) {
        // +-half-LSB uniform noise, deterministic for a given seed
        const double span = cfg_.adc.vref / 512.0;
        const double u = double((*noise_rng_)() - noise_rng_->min()) /
                         double(noise_rng_->max() - noise_rng_->min());
        v += (2.0 * u - 1.0) * span;
    }
    return v;
}

void System::SensorC::step(SimTime) {
    Wires& w = s->wires_;
    w.adc_volts[0] = s->sensor_voltage(w.distance_cm);
    for (std::size_t ch = 1; ch < w.adc_volts.size(); ++ch) {
        w.adc_volts[ch] = 0.0;  // unwired channels read ground
    }
}

void System::AdcC::step(SimTime) {
    Wires& w = s->wires_;
    if (s->cfg_.adc_detached) {
        w.eoc = false;
        w.data.reset();
        return;
    }
    AdcBus bus;
    bus.start = w.start;
    bus.ale = w.ale;
    bus.oe = w.oe;
    bus.addr = w.addr;
    auto [state, out] = adc_step(s->adc_state_, bus, w.adc_volts, s->cfg_.adc,
                                 s->cfg_.clock.controller_period_ns);
    s->adc_state_ = state;
    w.eoc = out.eoc;
    w.data = out.data;
}

void System::ControllerC::step(SimTime) {
    Wires& w = s->wires_;
    AcquireStepResult r = acquire_fsm_step(s->fsm_, w.eoc, w.data, s->timing_);
    s->fsm_ = r.fsm;
    w.start = r.start;
    w.ale = r.ale;
    w.oe = r.oe;
    w.addr = r.addr;
    w.fault = r.fsm.fault;
    w.fresh = r.published;
    if (r.published) {
        ++s->samples_published_;
        w.adc_code = r.fsm.sample;
        w.measured_cm = distance_of_code(w.adc_code, s->table_);
        const ControlDecision decision = control_law(w.measured_cm, s->cfg_.scenario.control);
        w.command = decision.command;
        w.duty = decision.duty;
    }
    // command and duty hold their values between samples
}

void System::PwmC::step(SimTime) {
    Wires& w = s->wires_;
    s->pwm_state_ = pwm_step(s->pwm_state_, w.duty, s->cfg_.pwm);
    w.pwm_out = s->pwm_state_.output;
}

void System::MotorC::step(SimTime) {
    Wires& w = s->wires_;
    w.pins = encode(w.command);
    w.ena_gated = w.pins.ena && w.pwm_out;
    w.enb_gated = w.pins.enb && w.pwm_out;
    w.gated = decode(w.pins, w.pwm_out);
}

void System::DisplayC::step(SimTime) {
    Wires& w = s->wires_;
    w.sevenseg = encode_bcd(display_digit(w.measured_cm)).bits();
}

void System::PlantC::step(SimTime) {
    Wires& w = s->wires_;
    s->drive_accum_l_ += w.gated.left;
    s->drive_accum_r_ += w.gated.right;
    if (++s->plant_tick_in_window_ < s->cfg_.clock.ticks_per_plant_step()) {
        return;
    }

    const double n = double(s->plant_tick_in_window_);
    s->plant_tick_in_window_ = 0;
    const double avg_l = s->drive_accum_l_ / n;  // signed PWM-gated drive fraction
    const double avg_r = s->drive_accum_r_ / n;
    s->drive_accum_l_ = 0.0;
    s->drive_accum_r_ = 0.0;

    const double dt = s->cfg_.clock.plant_period_ns * 1e-9;
    const RobotGeometry& geom = s->cfg_.geometry;
    const auto sign = [](double x) { return (x > 0.0) - (x < 0.0); };
    w.omega_l = wheel_speed_step(w.omega_l, sign(avg_l), std::abs(avg_l), geom, dt);
    w.omega_r = wheel_speed_step(w.omega_r, sign(avg_r), std::abs(avg_r), geom, dt);
    w.pose = pose_step(w.pose, w.omega_l, w.omega_r, geom, dt);
    w.distance_cm = raycast_distance(w.pose, s->cfg_.scenario, s->cfg_.sensor.d_max_cm);
    if (w.distance_cm < s->min_raycast_cm_) {
        s->min_raycast_cm_ = w.distance_cm;
    }
    ++s->plant_steps_;
}

void System::setup_vcd_signals() {
    static constexpr const char* names[] = {"pwm_out", "ena",   "enb", "a1",  "a2",
                                            "a3",      "a4",    "ena_gated", "enb_gated",
                                            "start",   "ale",   "oe",  "eoc"};
    for (const char* name : names) {
        vcd_wires_.push_back(vcd_->add_wire(name));
    }
    vcd_data_ = vcd_->add_bus("data", 8);
    vcd_->write_header();
}

void System::sample_vcd(SimTime now) {
    const Wires& w = wires_;
    const bool values[] = {w.pwm_out, w.pins.ena, w.pins.enb, w.pins.a1,  w.pins.a2,
                           w.pins.a3, w.pins.a4,  w.ena_gated, w.enb_gated,
                           w.start,   w.ale,      w.oe,        w.eoc};
    for (std::size_t i = 0; i < vcd_wires_.size(); ++i) {
        vcd_->set_wire(vcd_wires_[i], values[i]);
    }
    vcd_->set_bus(vcd_data_, w.data ? std::optional<std::uint32_t>(*w.data) : std::nullopt);
    vcd_->commit(now.ns);
}

void System::TraceC::step(SimTime now) {
    const std::int64_t tick = s->kernel_.ticks();
    if (s->vcd_ && tick >= s->vcd_start_tick_ && tick < s->vcd_end_tick_) {
        s->sample_vcd(now);
    }
    const Wires& w = s->wires_;
    if (w.fresh && (s->csv_ || s->duty_plot_ || s->distance_plot_)) {
        if (s->csv_sample_index_++ % s->csv_decimation_ == 0) {
            const double t_s = now.ns * 1e-9;
            if (s->csv_) {
                s->csv_->row(t_s, w.pose, w.omega_l, w.omega_r, w.distance_cm, w.adc_code,
                             w.command, w.duty, w.sevenseg);
            }
            if (s->duty_plot_) {
                s->duty_plot_->point(t_s, double(w.duty));
            }
            if (s->distance_plot_) {
                s->distance_plot_->point(t_s, w.distance_cm);
            }
        }
    }
}

void System::attach_csv(std::ostream& out, int decimation) {
    if (decimation < 1) {
        throw ConfigError("trace.csv_decimation", "must be at least 1");
    }
    csv_.emplace(out);
    csv_decimation_ = decimation;
}

void System::attach_vcd(std::ostream& out, std::int64_t start_tick, std::int64_t end_tick) {
    TraceOptions opts;
    opts.vcd_start_tick = start_tick;
    opts.vcd_end_tick = end_tick;
    opts.validate();
    vcd_.emplace(out);
    vcd_start_tick_ = start_tick;
    vcd_end_tick_ = end_tick;
    setup_vcd_signals();
    if (start_tick == 0 && end_tick > 0) {
        sample_vcd(kernel_.now());  // reset state at #0
    }
}

void System::attach_plots(std::ostream& duty_out, std::ostream& distance_out) {
    duty_plot_.emplace(duty_out);
    distance_plot_.emplace(distance_out);
}

std::int64_t System::run_ticks(std::int64_t n) {
    const std::int64_t target = kernel_.now().ns + n * cfg_.clock.controller_period_ns;
    return kernel_.run_until(SimTime{target});
}

RunResult System::run() {
    const auto duration_ns = static_cast<std::int64_t>(std::llround(cfg_.scenario.duration_s * 1e9));
    kernel_.run_until(SimTime{duration_ns});
    return result();
}

RunResult System::result() const {
    RunResult r;
    r.ticks = kernel_.ticks();
    r.plant_steps = plant_steps_;
    r.samples_published = samples_published_;
    r.adc_fault = wires_.fault;
    r.final_pose = wires_.pose;
    r.final_raycast_cm = raycast_distance(wires_.pose, cfg_.scenario, cfg_.sensor.d_max_cm);
    r.min_raycast_cm = min_raycast_cm_;
    return r;
}

}  // namespace robosim
