#pragma once

#include <numbers>

namespace turnseq {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Wraps any finite angle into [0, 2pi).
double normalize_angle(double rad);

/// Rotation in the positive sense needed to go from `from` to `to`, in [0, 2pi).
double forward_difference(double from, double to);

/// Shortest unsigned angular separation, in [0, pi].
double angular_distance(double a, double b);

}  // namespace turnseq
