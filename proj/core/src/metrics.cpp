#include "turnseq/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "turnseq/error.hpp"
#include "turnseq/sequencer.hpp"

namespace turnseq {
namespace {

void check_positive(double value, const char* field) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw Error(ErrorCode::invalid_input, std::string(field) + " must be a finite value > 0");
    }
}

void check_non_negative(double value, const char* field) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        throw Error(ErrorCode::invalid_input, std::string(field) + " must be a finite value >= 0");
    }
}

double travel_length(const Plan& plan, std::span<const Vec3> positions) {
    plan.validate(positions.size());
    double total = 0.0;
    const auto& order = plan.flattened_order;
    for (std::size_t i = 1; i < order.size(); ++i) {
        total += (positions[order[i]] - positions[order[i - 1]]).norm();
    }
    return total;
}

}  // namespace

void CellModel::validate() const {
    check_positive(robot_linear_speed, "robot_linear_speed");
    check_positive(turntable_angular_speed, "turntable_angular_speed");
    check_non_negative(dwell_per_point, "dwell_per_point");
    check_non_negative(planner_overhead_per_point, "planner_overhead_per_point");
}

bool CellModel::is_default() const {
    const CellModel d;
    return robot_linear_speed == d.robot_linear_speed &&
           turntable_angular_speed == d.turntable_angular_speed &&
           dwell_per_point == d.dwell_per_point &&
           planner_overhead_per_point == d.planner_overhead_per_point;
}

double ssp_distance(const Plan& plan, std::span<const Vec3> positions) {
    return travel_length(plan, positions);
}

double estimate_execution_time(const Plan& plan, std::span<const Vec3> positions,
                               const CellModel& cell) {
    cell.validate();
    const double n = static_cast<double>(positions.size());
    return travel_length(plan, positions) / cell.robot_linear_speed +
           plan.cluster_plan.total_rotation / cell.turntable_angular_speed +
           n * (cell.dwell_per_point + cell.planner_overhead_per_point);
}

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::baseline: return "baseline";
        case Algorithm::cluster: return "cluster";
        case Algorithm::greedy: return "greedy";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view label) {
    for (Algorithm a : {Algorithm::baseline, Algorithm::cluster, Algorithm::greedy}) {
        if (label == to_string(a)) return a;
    }
    return std::nullopt;
}

void PlannerConfig::validate() const {
    check_non_negative(standoff, "standoff");
    if (!std::isfinite(attack)) throw Error(ErrorCode::invalid_input, "attack must be finite");
    if (!std::isfinite(robot_center_angle)) {
        throw Error(ErrorCode::invalid_input, "robot_center_angle must be finite");
    }
    cluster.validate();
    cell.validate();
    if (!pipeline.home_position.allFinite()) {
        throw Error(ErrorCode::invalid_input, "home_position must be finite");
    }
}

Plan run_algorithm(Algorithm algorithm, const PartModel& part, const PlannerConfig& config,
                   std::uint64_t seed) {
    if (part.holes.empty()) throw Error(ErrorCode::invalid_input, "part has no holes");
    ClusterParams params = config.cluster;
    params.seed = seed;
    switch (algorithm) {
        case Algorithm::baseline: {
            const auto waypoints = generate_waypoints(part, config.standoff, config.attack);
            return baseline_angle_sequence(waypoints, params.k, config.robot_center_angle);
        }
        case Algorithm::cluster: {
            const auto waypoints = generate_waypoints(part, config.standoff, config.attack);
            return clustering_only_plan(waypoints, params, config.robot_center_angle);
        }
        case Algorithm::greedy:
            return full_pipeline(part, config.standoff, config.attack, params,
                                 config.robot_center_angle, config.pipeline);
    }
    throw Error(ErrorCode::invalid_input, "unknown algorithm");
}

std::vector<BenchmarkReport> benchmark(std::string_view label, const PlannerFn& planner,
                                       const PartModel& part, const PlannerConfig& config,
                                       std::size_t trials) {
    if (trials < 1) throw Error(ErrorCode::invalid_input, "trials must be >= 1");
    config.validate();
    part.validate();
    const std::vector<Vec3> positions =
        positions_of(generate_waypoints(part, config.standoff, config.attack));

    std::vector<BenchmarkReport> reports;
    reports.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t seed = config.base_seed + t;
        const auto begin = std::chrono::steady_clock::now();
        const Plan plan = planner(part, config, seed);
        const auto end = std::chrono::steady_clock::now();

        BenchmarkReport r;
        r.algorithm_name = std::string(label);
        r.trial = t;
        r.seed = seed;
        r.n_points = positions.size();
        r.planning_time = std::chrono::duration<double>(end - begin).count();
        r.ssp_distance = ssp_distance(plan, positions);
        r.total_rotation = plan.cluster_plan.total_rotation;
        r.estimated_execution_time = estimate_execution_time(plan, positions, config.cell);
        reports.push_back(std::move(r));
    }
    return reports;
}

std::vector<BenchmarkReport> benchmark(Algorithm algorithm, const PartModel& part,
                                       const PlannerConfig& config, std::size_t trials) {
    return benchmark(
        to_string(algorithm),
        [algorithm](const PartModel& p, const PlannerConfig& c, std::uint64_t seed) {
            return run_algorithm(algorithm, p, c, seed);
        },
        part, config, trials);
}

BenchmarkReport mean_report(std::span<const BenchmarkReport> reports) {
    if (reports.empty()) throw Error(ErrorCode::invalid_input, "no reports to average");
    BenchmarkReport mean;
    mean.algorithm_name = reports.front().algorithm_name;
    mean.n_points = reports.front().n_points;
    mean.seed = reports.front().seed;
    for (const BenchmarkReport& r : reports) {
        mean.planning_time += r.planning_time;
        mean.ssp_distance += r.ssp_distance;
        mean.estimated_execution_time += r.estimated_execution_time;
        mean.total_rotation += r.total_rotation;
    }
    const auto count = static_cast<double>(reports.size());
    mean.planning_time /= count;
    mean.ssp_distance /= count;
    mean.estimated_execution_time /= count;
    mean.total_rotation /= count;
    return mean;
}

void write_report_csv(std::ostream& out, std::span<const BenchmarkReport> reports) {
    out << kReportHeader << '\n';
    std::vector<std::string> order;
    for (const BenchmarkReport& r : reports) {
        fmt::print(out, "{},{},{},{},{:.6f},{:.6f},{:.6f},{:.6f}\n", r.algorithm_name, r.trial,
                   r.seed, r.n_points, r.planning_time, r.ssp_distance, r.total_rotation,
                   r.estimated_execution_time);
        if (std::find(order.begin(), order.end(), r.algorithm_name) == order.end()) {
            order.push_back(r.algorithm_name);
        }
    }
    for (const std::string& name : order) {
        std::vector<BenchmarkReport> group;
        for (const BenchmarkReport& r : reports) {
            if (r.algorithm_name == name) group.push_back(r);
        }
        const BenchmarkReport m = mean_report(group);
        fmt::print(out, "{},mean,,{},{:.6f},{:.6f},{:.6f},{:.6f}\n", name, m.n_points,
                   m.planning_time, m.ssp_distance, m.total_rotation,
                   m.estimated_execution_time);
    }
}

}  // namespace turnseq
