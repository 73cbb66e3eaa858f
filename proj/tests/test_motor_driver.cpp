#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "robosim/motor_driver.hpp"

using namespace robosim;

namespace {

// ENA ENB 1A 2A 3A 4A
L293Pins pins_from_bits(unsigned bits) {
    return {(bits >> 5) & 1u ? true : false, (bits >> 4) & 1u ? true : false,
            (bits >> 3) & 1u ? true : false, (bits >> 2) & 1u ? true : false,
            (bits >> 1) & 1u ? true : false, (bits >> 0) & 1u ? true : false};
}

}  // namespace

TEST_CASE("encode reproduces the driver truth table") {
    CHECK(encode(DriveCommand::Forward) == pins_from_bits(0b111010));
    CHECK(encode(DriveCommand::Reverse) == pins_from_bits(0b110101));
    CHECK(encode(DriveCommand::Left) == pins_from_bits(0b010010));
    CHECK(encode(DriveCommand::Right) == pins_from_bits(0b101000));
    CHECK(encode(DriveCommand::Stop) == pins_from_bits(0b000000));
}

TEST_CASE("decode of the encoded commands gives the motion signatures") {
    CHECK(decode(encode(DriveCommand::Forward), true) == WheelDrive{+1, +1});
    CHECK(decode(encode(DriveCommand::Reverse), true) == WheelDrive{-1, -1});
    // the table turns by driving one wheel and freeing the other
    CHECK(decode(encode(DriveCommand::Left), true) == WheelDrive{0, +1});
    CHECK(decode(encode(DriveCommand::Right), true) == WheelDrive{+1, 0});
    CHECK(decode(encode(DriveCommand::Stop), true) == WheelDrive{0, 0});
}

TEST_CASE("pwm low gates every pattern off") {
    for (unsigned bits = 0; bits < 64; ++bits) {
        CHECK(decode(pins_from_bits(bits), false) == WheelDrive{0, 0});
    }
}

TEST_CASE("decode is total and in range over all pin patterns") {
    for (unsigned bits = 0; bits < 64; ++bits) {
        for (bool pwm : {false, true}) {
            const WheelDrive d = decode(pins_from_bits(bits), pwm);
            CHECK(d.left >= -1);
            CHECK(d.left <= +1);
            CHECK(d.right >= -1);
            CHECK(d.right <= +1);
        }
    }
}

TEST_CASE("equal half-bridge inputs coast") {
    // both inputs high or both low on an enabled channel: no drive
    CHECK(decode(pins_from_bits(0b111100), true).left == 0);
    CHECK(decode(pins_from_bits(0b110000), true) == WheelDrive{0, 0});
    CHECK(decode(pins_from_bits(0b110011), true).right == 0);
}

TEST_CASE("command names for the trace") {
    CHECK(to_string(DriveCommand::Forward) == "Forward");
    CHECK(to_string(DriveCommand::Stop) == "Stop");
}
