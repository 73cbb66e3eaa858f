#include "robosim/plant.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "robosim/errors.hpp"

namespace robosim {

void RobotGeometry::validate() const {
    if (!(wheel_radius_m > 0.0)) {
        throw ConfigError("robot.wheel_radius_m", "must be positive");
    }
    if (!(axle_length_m > 0.0)) {
        throw ConfigError("robot.axle_length_m", "must be positive");
    }
    if (!(omega_max_rad_s > 0.0)) {
        throw ConfigError("robot.omega_max_rad_s", "must be positive");
    }
    if (!(motor_tau_s > 0.0)) {
        throw ConfigError("robot.motor_tau_s", "must be positive");
    }
}

void Scenario::validate() const {
    if (!(duration_s > 0.0) || !std::isfinite(duration_s)) {
        throw ConfigError("scenario.duration_s", "must be positive");
    }
    for (const Obstacle& ob : obstacles) {
        if (!(ob.radius_m > 0.0)) {
            throw ConfigError("scenario.obstacle", "radius must be positive");
        }
        const double dx = initial_pose.x_m - ob.x_m;
        const double dy = initial_pose.y_m - ob.y_m;
        if (dx * dx + dy * dy <= ob.radius_m * ob.radius_m) {
            throw ConfigError("scenario.obstacle", "robot starts inside an obstacle");
        }
    }
}

double normalize_angle(double theta) {
    double a = std::remainder(theta, 2.0 * std::numbers::pi);
    if (a <= -std::numbers::pi) {
        a += 2.0 * std::numbers::pi;
    }
    return a;
}

double wheel_speed_step(double omega, int drive, double duty_fraction,
                        const RobotGeometry& geom, double dt) {
    const double target = drive * duty_fraction * geom.omega_max_rad_s;
    return omega + (target - omega) * (1.0 - std::exp(-dt / geom.motor_tau_s));
}

Pose pose_step(const Pose& pose, double omega_left, double omega_right,
               const RobotGeometry& geom, double dt) {
    const double v = geom.wheel_radius_m * (omega_left + omega_right) / 2.0;
    const double w = geom.wheel_radius_m * (omega_right - omega_left) / geom.axle_length_m;

    Pose out = pose;
    if (std::abs(w) < 1e-9) {
        out.x_m += v * dt * std::cos(pose.theta_rad);
        out.y_m += v * dt * std::sin(pose.theta_rad);
        // heading untouched: equal wheel speeds drift by exactly zero
    } else {
        const double radius = v / w;
        const double theta1 = pose.theta_rad + w * dt;
        out.x_m += radius * (std::sin(theta1) - std::sin(pose.theta_rad));
        out.y_m -= radius * (std::cos(theta1) - std::cos(pose.theta_rad));
        out.theta_rad = normalize_angle(theta1);
    }
    return out;
}

double raycast_distance(const Pose& pose, const Scenario& scenario, double range_max_cm) {
    const double dx = std::cos(pose.theta_rad);
    const double dy = std::sin(pose.theta_rad);

    double best_m = std::numeric_limits<double>::infinity();
    for (const Obstacle& ob : scenario.obstacles) {
        const double ox = pose.x_m - ob.x_m;
        const double oy = pose.y_m - ob.y_m;
        const double b = ox * dx + oy * dy;
        const double c = ox * ox + oy * oy - ob.radius_m * ob.radius_m;
        const double disc = b * b - c;
        if (disc < 0.0) {
            continue;  // ray misses the circle
        }
        const double root = std::sqrt(disc);
        double t = -b - root;
        if (t < 0.0) {
            t = -b + root;  // in front only; from inside take the exit point
        }
        if (t >= 0.0 && t < best_m) {
            best_m = t;
        }
    }
    const double cm = best_m * 100.0;
    return cm < range_max_cm ? cm : range_max_cm;
}

}  // namespace robosim
