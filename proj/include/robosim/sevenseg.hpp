#pragma once

#include <array>
#include <cstdint>

namespace robosim {

// Segments a..g (a = top bar, g = middle), 1 = lit, common-cathode polarity.
struct SegmentPattern {
    std::array<bool, 7> seg{};  // index 0 = a ... 6 = g

    // 7-bit value, segment a in the MSB.
    std::uint8_t bits() const;

    friend bool operator==(const SegmentPattern&, const SegmentPattern&) = default;
};

// Digits 0-9 map to the standard patterns; 10-15 blank the display.
SegmentPattern encode_bcd(unsigned nibble);

// Tens digit of the distance, saturated at 9 (single-digit display).
unsigned display_digit(double distance_cm);

}  // namespace robosim
