#pragma once

#include <string_view>

namespace robosim {

// L293D input pins, ordered ENA ENB 1A 2A 3A 4A.
struct L293Pins {
    bool ena = false;
    bool enb = false;
    bool a1 = false;
    bool a2 = false;
    bool a3 = false;
    bool a4 = false;

    friend bool operator==(const L293Pins&, const L293Pins&) = default;
};

enum class DriveCommand { Forward, Reverse, Left, Right, Stop };

std::string_view to_string(DriveCommand cmd);

// Signed per-wheel drive decoded from the H-bridge: -1, 0 or +1.
struct WheelDrive {
    int left = 0;
    int right = 0;

    friend bool operator==(const WheelDrive&, const WheelDrive&) = default;
};

// Truth-table pin patterns for the movement commands; Stop is all-zero
// (both enables low, no drive).
L293Pins encode(DriveCommand cmd);

// Half-bridge pairs (a1,a2) -> left wheel and (a3,a4) -> right wheel, with
// both enables gated by the PWM level. Equal pair inputs coast (0) rather
// than brake; a disabled channel is 0.
WheelDrive decode(const L293Pins& pins, bool pwm_level);

}  // namespace robosim
