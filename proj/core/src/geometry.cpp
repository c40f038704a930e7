#include "turnseq/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "turnseq/angles.hpp"
#include "turnseq/error.hpp"
#include "turnseq/random.hpp"

namespace turnseq {
namespace {

constexpr double kFrameTol = 1e-9;
constexpr double kAxisRadiusTol = 1e-9;

bool finite(const Vec3& v) { return v.allFinite(); }

void check_unit(const Vec3& v, const char* name) {
    if (!finite(v) || std::abs(v.norm() - 1.0) > kFrameTol) {
        throw Error(ErrorCode::invalid_input,
                    std::string("hole frame ") + name + " is not a unit vector");
    }
}

// Unit vector in the turntable plane that marks angle zero.
Vec3 reference_direction(const Vec3& axis) {
    Vec3 ref = Vec3::UnitX() - axis * axis.x();
    if (ref.norm() < 1e-6) ref = Vec3::UnitY() - axis * axis.y();
    return ref.normalized();
}

}  // namespace

void HoleFrame::validate() const {
    if (!finite(origin)) throw Error(ErrorCode::invalid_input, "hole origin is not finite");
    check_unit(x_axis, "x_axis");
    check_unit(y_axis, "y_axis");
    check_unit(z_axis, "z_axis");
    if (std::abs(x_axis.dot(y_axis)) > kFrameTol || std::abs(y_axis.dot(z_axis)) > kFrameTol ||
        std::abs(x_axis.dot(z_axis)) > kFrameTol) {
        throw Error(ErrorCode::invalid_input, "hole frame axes are not orthogonal");
    }
    if ((x_axis.cross(y_axis) - z_axis).norm() > kFrameTol) {
        throw Error(ErrorCode::invalid_input, "hole frame is not right-handed");
    }
}

Eigen::Matrix3d HoleFrame::rotation() const {
    Eigen::Matrix3d r;
    r.col(0) = x_axis;
    r.col(1) = y_axis;
    r.col(2) = z_axis;
    return r;
}

Vec3 Waypoint::approach_direction() const {
    return -(pose.orientation * Vec3::UnitY());
}

void PartModel::validate() const {
    if (!turntable_axis.allFinite() || std::abs(turntable_axis.norm() - 1.0) > kFrameTol) {
        throw Error(ErrorCode::invalid_input, "turntable_axis must be a unit vector");
    }
    if (!turntable_center.allFinite()) {
        throw Error(ErrorCode::invalid_input, "turntable_center is not finite");
    }
    for (std::size_t i = 0; i < holes.size(); ++i) {
        try {
            holes[i].validate();
        } catch (const Error& e) {
            throw Error(e.code(), "holes[" + std::to_string(i) + "]: " + e.what());
        }
    }
}

double turntable_angle(const Vec3& position, const PartModel& part) {
    const Vec3& axis = part.turntable_axis;
    const Vec3 rel = position - part.turntable_center;
    const Vec3 in_plane = rel - axis * axis.dot(rel);
    if (!(in_plane.norm() > kAxisRadiusTol)) {
        throw Error(ErrorCode::degenerate_position,
                    "position lies on the turntable axis; its table angle is undefined");
    }
    const Vec3 ref = reference_direction(axis);
    const Vec3 ortho = axis.cross(ref);
    return normalize_angle(std::atan2(ortho.dot(in_plane), ref.dot(in_plane)));
}

Waypoint generate_waypoint(const HoleFrame& hole, double standoff, double attack,
                           const PartModel& part) {
    hole.validate();
    if (!(standoff >= 0.0) || !std::isfinite(standoff)) {
        throw Error(ErrorCode::invalid_input, "standoff must be a finite value >= 0");
    }
    if (!std::isfinite(attack)) throw Error(ErrorCode::invalid_input, "attack must be finite");

    const Eigen::Matrix3d tilted =
        hole.rotation() * Eigen::AngleAxisd(attack, Vec3::UnitX()).toRotationMatrix();

    Waypoint wp;
    wp.pose.position = hole.origin + standoff * tilted.col(1);
    wp.pose.orientation = Eigen::Quaterniond(tilted).normalized();
    wp.table_angle = turntable_angle(wp.pose.position, part);
    return wp;
}

Waypoint generate_waypoint(const HoleFrame& hole, double standoff, double attack) {
    return generate_waypoint(hole, standoff, attack, PartModel{});
}

std::vector<Waypoint> generate_waypoints(const PartModel& part, double standoff, double attack) {
    std::vector<Waypoint> out;
    out.reserve(part.holes.size());
    for (const HoleFrame& hole : part.holes) {
        out.push_back(generate_waypoint(hole, standoff, attack, part));
    }
    return out;
}

Waypoint waypoint_at(const Vec3& position, const PartModel& part) {
    Waypoint wp;
    wp.pose.position = position;
    wp.table_angle = turntable_angle(position, part);
    return wp;
}

std::vector<Vec3> positions_of(std::span<const Waypoint> waypoints) {
    std::vector<Vec3> out;
    out.reserve(waypoints.size());
    for (const Waypoint& wp : waypoints) out.push_back(wp.position());
    return out;
}

PartModel hemisphere_layout(std::size_t n, double radius, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorCode::invalid_input, "hemisphere_layout needs at least one hole");
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw Error(ErrorCode::invalid_input, "hemisphere radius must be > 0");
    }

    Rng rng(seed);
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const double phase = kTwoPi * uniform01(rng);
    const double spacing = kTwoPi / std::sqrt(2.0 * static_cast<double>(n));

    PartModel part;
    part.holes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // equal-area bands: height uniform in (0, 1)
        const double h = 1.0 - (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        const double ring = std::sqrt(std::max(0.0, 1.0 - h * h));
        const double jitter = 0.25 * spacing * (uniform01(rng) - 0.5);
        const double azimuth = phase + golden_angle * static_cast<double>(i) + jitter;
        const Vec3 radial(ring * std::cos(azimuth), ring * std::sin(azimuth), h);

        const Vec3 east = Vec3(-std::sin(azimuth), std::cos(azimuth), 0.0);
        const Vec3 north = radial.cross(east);
        const double roll = kTwoPi * uniform01(rng);

        HoleFrame hole;
        hole.origin = radius * radial;
        hole.y_axis = radial.normalized();
        hole.x_axis = (std::cos(roll) * east + std::sin(roll) * north).normalized();
        hole.z_axis = hole.x_axis.cross(hole.y_axis);
        part.holes.push_back(hole);
    }

    // Listing order is a seeded shuffle; a drilled part comes with holes in
    // no useful order.
    for (std::size_t i = n; i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(part.holes[i - 1], part.holes[j]);
    }
    return part;
}

}  // namespace turnseq
