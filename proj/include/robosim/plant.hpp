#pragma once

#include <vector>

#include "robosim/controller.hpp"

namespace robosim {

struct RobotGeometry {
    double wheel_radius_m = 0.03;
    double axle_length_m = 0.15;
    double omega_max_rad_s = 10.0;  // wheel speed at full drive
    double motor_tau_s = 0.1;       // first-order motor lag

    void validate() const;
};

struct Pose {
    double x_m = 0.0;
    double y_m = 0.0;
    double theta_rad = 0.0;  // kept in (-pi, pi]
};

struct Obstacle {
    double x_m = 0.0;
    double y_m = 0.0;
    double radius_m = 0.0;
};

struct Scenario {
    Pose initial_pose;
    std::vector<Obstacle> obstacles;
    double duration_s = 1.0;
    ControlParams control;

    // radii positive, duration positive, robot not starting inside an obstacle
    void validate() const;
};

// Wraps into (-pi, pi].
double normalize_angle(double theta);

// First-order lag toward drive * duty_fraction * omega_max.
double wheel_speed_step(double omega, int drive, double duty_fraction,
                        const RobotGeometry& geom, double dt);

// Exact-arc unicycle update, dt-exact for constant wheel speeds; straight
// line below |w| = 1e-9 rad/s to avoid the radius blowing up.
Pose pose_step(const Pose& pose, double omega_left, double omega_right,
               const RobotGeometry& geom, double dt);

// Distance in cm along the heading to the nearest obstacle boundary;
// range_max_cm when nothing is hit in range (or the hit is behind).
double raycast_distance(const Pose& pose, const Scenario& scenario, double range_max_cm);

}  // namespace robosim
