#include "turnseq/angles.hpp"

#include <cmath>

namespace turnseq {

double normalize_angle(double rad) {
    double wrapped = std::fmod(rad, kTwoPi);
    if (wrapped < 0.0) wrapped += kTwoPi;
    // fmod of a tiny negative value can round back up to exactly 2pi
    if (wrapped >= kTwoPi) wrapped = 0.0;
    return wrapped;
}

double forward_difference(double from, double to) { return normalize_angle(to - from); }

double angular_distance(double a, double b) {
    const double d = forward_difference(a, b);
    return d > std::numbers::pi ? kTwoPi - d : d;
}

}  // namespace turnseq
