#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace turnseq {

using Vec3 = Eigen::Vector3d;

/// Target end-effector pose, expressed in the turntable frame.
struct Pose {
    Vec3 position = Vec3::Zero();
    Eigen::Quaterniond orientation = Eigen::Quaterniond::Identity();
};

/// Coordinate frame sitting at the center of a hole. The y axis runs along
/// the hole centerline, pointing out of the material.
struct HoleFrame {
    Vec3 origin = Vec3::Zero();
    Vec3 x_axis = Vec3::UnitX();
    Vec3 y_axis = Vec3::UnitY();
    Vec3 z_axis = Vec3::UnitZ();

    /// Throws Error(invalid_input) unless the axes are unit length, mutually
    /// orthogonal and right-handed, all within 1e-9.
    void validate() const;

    Eigen::Matrix3d rotation() const;
};

struct Waypoint {
    Pose pose;
    double table_angle = 0.0;  // [0, 2pi), about the turntable axis

    const Vec3& position() const { return pose.position; }

    /// Direction the tool travels when it approaches the hole: the -y axis of
    /// the (attack-rotated) hole frame.
    Vec3 approach_direction() const;
};

struct PartModel {
    std::vector<HoleFrame> holes;
    Vec3 turntable_axis = Vec3::UnitZ();
    Vec3 turntable_center = Vec3::Zero();

    /// Checks the axis is a unit vector and every hole frame is valid.
    void validate() const;
};

/// Angle of `position` about the turntable axis, counter-clockwise from the
/// projection of the part frame's +x axis (or +y when +x is parallel to the
/// axis). Throws Error(degenerate_position) for points on the axis.
double turntable_angle(const Vec3& position, const PartModel& part);

/// Rotates the hole frame by `attack` about its own x axis, then backs off by
/// `standoff` along the rotated y axis. The waypoint orientation is the
/// rotated frame.
Waypoint generate_waypoint(const HoleFrame& hole, double standoff, double attack,
                           const PartModel& part);

/// Convenience overload using the default turntable (axis +z through origin).
Waypoint generate_waypoint(const HoleFrame& hole, double standoff, double attack);

std::vector<Waypoint> generate_waypoints(const PartModel& part, double standoff,
                                         double attack);

/// Waypoint at `position` with identity orientation. Handy for feeding the
/// planners raw points.
Waypoint waypoint_at(const Vec3& position, const PartModel& part = {});

std::vector<Vec3> positions_of(std::span<const Waypoint> waypoints);

/// Synthetic part: `n` holes on the upper hemisphere of `radius` around the
/// turntable center, laid out on a Fibonacci lattice. The seed fixes the
/// lattice phase, a small azimuth jitter, the roll of each hole frame about
/// its centerline, and the order in which holes are listed.
PartModel hemisphere_layout(std::size_t n, double radius, std::uint64_t seed);

}  // namespace turnseq
