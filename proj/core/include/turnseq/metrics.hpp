#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "turnseq/clustering.hpp"
#include "turnseq/geometry.hpp"
#include "turnseq/sequencer.hpp"

namespace turnseq {

/// Kinematic stand-in for the motion planner. The defaults are placeholders,
/// not measured values for any particular robot.
struct CellModel {
    double robot_linear_speed = 0.5;       // m/s
    double turntable_angular_speed = 0.2;  // rad/s
    double dwell_per_point = 1.0;          // s, the spray/drill action
    double planner_overhead_per_point = 0.0;  // s, e.g. 5 to mimic a bounded PRM* query

    void validate() const;
    bool is_default() const;
};

/// Sum of straight segment lengths along plan.flattened_order.
double ssp_distance(const Plan& plan, std::span<const Vec3> positions);

/// Robot travel at constant speed, then turntable rotation at constant speed,
/// plus per-point dwell and planner overhead. Motions are not overlapped.
double estimate_execution_time(const Plan& plan, std::span<const Vec3> positions,
                               const CellModel& cell);

enum class Algorithm { baseline, cluster, greedy };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view label);

/// Everything a planner needs besides the part itself.
struct PlannerConfig {
    double standoff = 0.05;
    double attack = 0.0;
    ClusterParams cluster;
    CellModel cell;
    double robot_center_angle = 0.0;
    std::uint64_t base_seed = 0;
    PipelineOptions pipeline;

    void validate() const;
};

/// Runs one algorithm end to end (waypoint generation included) with the
/// clustering seed replaced by `seed`.
Plan run_algorithm(Algorithm algorithm, const PartModel& part, const PlannerConfig& config,
                   std::uint64_t seed);

struct BenchmarkReport {
    std::string algorithm_name;
    std::size_t trial = 0;
    double planning_time = 0.0;  // s, wall clock around the planning call
    double ssp_distance = 0.0;   // m
    double estimated_execution_time = 0.0;  // s
    double total_rotation = 0.0;            // rad
    std::size_t n_points = 0;
    std::uint64_t seed = 0;
};

using PlannerFn =
    std::function<Plan(const PartModel&, const PlannerConfig&, std::uint64_t seed)>;

/// Trial i uses seed base_seed + i. Only the planner call is timed.
std::vector<BenchmarkReport> benchmark(std::string_view label, const PlannerFn& planner,
                                       const PartModel& part, const PlannerConfig& config,
                                       std::size_t trials);

std::vector<BenchmarkReport> benchmark(Algorithm algorithm, const PartModel& part,
                                       const PlannerConfig& config, std::size_t trials);

/// Column-wise mean of the numeric fields; name and n_points from the first
/// report.
BenchmarkReport mean_report(std::span<const BenchmarkReport> reports);

inline constexpr std::string_view kReportHeader =
    "algorithm,trial,seed,n_points,planning_time_s,ssp_distance_m,"
    "total_rotation_rad,estimated_execution_time_s";

/// Comma-separated report: header, one row per trial, then one "mean" row per
/// algorithm (in first-seen order). Mean rows leave the seed column empty.
void write_report_csv(std::ostream& out, std::span<const BenchmarkReport> reports);

}  // namespace turnseq
