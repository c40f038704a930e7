#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "turnseq/clustering.hpp"
#include "turnseq/geometry.hpp"

namespace turnseq {

/// Dense symmetric matrix of pairwise Euclidean distances.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::span<const Vec3> positions);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

    /// Row-major copy of the entries, n*n long.
    const std::vector<double>& data() const { return d_; }

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

/// Same as constructing a DistanceMatrix; throws Error(invalid_input) on an
/// empty point list.
DistanceMatrix distance_matrix(std::span<const Vec3> positions);

struct Sequence {
    std::vector<std::size_t> order;
};

/// How the greedy optimizer keeps visited points out of reach.
enum class MaskMode {
    visited_set,  // boolean visited flags
    maxval,       // overwrite incoming edges with a sentinel in a matrix copy
};

/// Nearest-neighbour chain from `start`: repeatedly moves to the closest
/// unvisited point, lowest index on ties. Both mask modes give identical
/// output.
Sequence greedy_sequence(const DistanceMatrix& m, std::size_t start = 0,
                         MaskMode mode = MaskMode::visited_set);

inline constexpr std::size_t kMaxOptimalPoints = 12;

/// Shortest open Hamiltonian path from `start` by dynamic programming over
/// subsets (Held-Karp without the return leg). Among equal-length paths the
/// lexicographically smallest order is returned. Throws
/// Error(instance_too_large) above kMaxOptimalPoints points.
Sequence optimal_sequence(const DistanceMatrix& m, std::size_t start = 0);

/// Length of the open path visiting `order` (no return leg).
double path_length(const DistanceMatrix& m, std::span<const std::size_t> order);

/// A complete visiting plan. `sequences[c]` holds global waypoint indices for
/// cluster_plan.clusters[c]; `flattened_order` concatenates them.
struct Plan {
    std::string algorithm;
    ClusterPlan cluster_plan;
    std::vector<Sequence> sequences;
    std::vector<std::size_t> flattened_order;

    /// Throws Error(invalid_input) unless flattened_order is a permutation of
    /// 0..n_points-1 and matches the per-cluster sequences.
    void validate(std::size_t n_points) const;
};

/// How the first waypoint of each cluster is picked.
enum class StartRule {
    nearest_to_previous,  // closest member to where the tool last was
    first_listed,         // lowest-index member
};

struct PipelineOptions {
    StartRule start_rule = StartRule::nearest_to_previous;
    // Tool position before the first cluster, in the turntable frame.
    Vec3 home_position = Vec3(0.0, 0.0, 0.5);
};

/// Angle-sector baseline: bins waypoints into `groups` sectors of width
/// 2pi/groups, keeps input order inside each bin and serves the non-empty
/// bins in ascending order of sector center from `table_angle`.
Plan baseline_angle_sequence(std::span<const Waypoint> waypoints, std::size_t groups = 5,
                             double table_angle = 0.0);

/// Clustering + ordering + per-cluster greedy sequencing over existing
/// waypoints.
Plan greedy_plan(std::span<const Waypoint> waypoints, const ClusterParams& params,
                 double robot_center_angle, const PipelineOptions& options = {});

/// Clustering + ordering with no intra-cluster optimization: members are
/// visited in input order.
Plan clustering_only_plan(std::span<const Waypoint> waypoints, const ClusterParams& params,
                          double robot_center_angle);

/// Waypoint generation followed by greedy_plan.
Plan full_pipeline(const PartModel& part, double standoff, double attack,
                   const ClusterParams& params, double robot_center_angle,
                   const PipelineOptions& options = {});

}  // namespace turnseq
