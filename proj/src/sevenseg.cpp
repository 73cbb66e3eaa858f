#include "robosim/sevenseg.hpp"

#include <algorithm>

namespace robosim {

std::uint8_t SegmentPattern::bits() const {
    std::uint8_t v = 0;
    for (bool lit : seg) {
        v = static_cast<std::uint8_t>((v << 1) | (lit ? 1 : 0));
    }
    return v;
}

SegmentPattern encode_bcd(unsigned nibble) {
    //                          a  b  c  d  e  f  g
    switch (nibble) {
        case 0: return {{{1, 1, 1, 1, 1, 1, 0}}};
        case 1: return {{{0, 1, 1, 0, 0, 0, 0}}};
        case 2: return {{{1, 1, 0, 1, 1, 0, 1}}};
        case 3: return {{{1, 1, 1, 1, 0, 0, 1}}};
        case 4: return {{{0, 1, 1, 0, 0, 1, 1}}};
        case 5: return {{{1, 0, 1, 1, 0, 1, 1}}};
        case 6: return {{{1, 0, 1, 1, 1, 1, 1}}};
        case 7: return {{{1, 1, 1, 0, 0, 0, 0}}};
        case 8: return {{{1, 1, 1, 1, 1, 1, 1}}};
        case 9: return {{{1, 1, 1, 1, 0, 1, 1}}};
        default: return {};  // out-of-BCD inputs blank the display
    }
}

unsigned display_digit(double distance_cm) {
    if (distance_cm < 0.0) {
        distance_cm = 0.0;
    }
    return std::min(9u, static_cast<unsigned>(distance_cm / 10.0));
}

}  // namespace robosim
