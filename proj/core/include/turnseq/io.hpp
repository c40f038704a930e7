#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "turnseq/geometry.hpp"
#include "turnseq/sequencer.hpp"

namespace turnseq {

// Part layout document:
//   {"turntable_axis": [x,y,z], "turntable_center": [x,y,z],
//    "holes": [{"origin": [..], "x_axis": [..], "y_axis": [..], "z_axis": [..]}, ...]}
// Units are meters. Axis and center are optional on read (+z, origin).

std::string layout_to_json(const PartModel& part);
PartModel layout_from_json(const std::string& text);

void save_layout(const PartModel& part, const std::filesystem::path& path);
PartModel load_layout(const std::filesystem::path& path);

/// Plan document: algorithm name, totals, and one step per visited waypoint
/// {waypoint_index, cluster_index, position, table_angle, rotation_before}.
/// rotation_before is the turntable delta for the first step of each cluster
/// and zero otherwise.
std::string plan_to_json(const Plan& plan, std::span<const Waypoint> waypoints);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace turnseq
