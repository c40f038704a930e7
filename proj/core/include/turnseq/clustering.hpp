#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "turnseq/angles.hpp"
#include "turnseq/geometry.hpp"

namespace turnseq {

struct Cluster {
    std::vector<std::size_t> members;  // indices into the waypoint list
    Vec3 centroid = Vec3::Zero();
    double mean_angle = 0.0;           // circular mean of member table angles
};

struct ClusterPlan {
    std::vector<Cluster> clusters;
    // Turntable rotation applied before serving each cluster.
    std::vector<double> rotation_deltas;
    double total_rotation = 0.0;
};

struct ClusterParams {
    std::size_t k = 5;
    double angular_bound = kTwoPi / 5.0;
    std::size_t max_iterations = 100;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Mean of circular quantities: atan2(sum sin, sum cos), wrapped to [0, 2pi).
/// Throws Error(degenerate_mean) when the resultant vector is shorter than
/// 1e-9 and Error(invalid_input) for an empty list.
double circular_mean(std::span<const double> angles);

/// Lloyd's k-means on the waypoint positions.
///
/// Initial centroids are k distinct input points drawn with `params.seed`.
/// Points go to the nearest centroid (lowest index on ties). A cluster that
/// empties is reseeded with the point farthest from its own centroid; when
/// every point already sits on its centroid the cluster is dropped instead,
/// so coincident inputs yield fewer than k clusters. Iteration stops once
/// assignments no longer change or after max_iterations.
///
/// With N < k every point becomes its own cluster. Each cluster's
/// mean_angle is the circular mean of its member table angles; if those
/// cancel out, the table angle of the member nearest the centroid is used.
std::vector<Cluster> cluster_points(std::span<const Waypoint> waypoints,
                                    const ClusterParams& params);

/// Sorts clusters by (mean_angle - start_angle) mod 2pi, stable on ties, and
/// schedules the turntable so it only ever advances. The first delta is
/// measured from start_angle, the rest between consecutive mean angles, so
/// the total never reaches a full turn.
ClusterPlan order_clusters(std::vector<Cluster> clusters, double start_angle);

/// Positive-sense rotation that carries the cluster's mean angle onto
/// `robot_center_angle`, in [0, 2pi).
double center_offset(const Cluster& cluster, double robot_center_angle);

struct ReachabilityEntry {
    double angular_extent = 0.0;  // max deviation of a member from mean_angle
    bool within_bound = true;     // extent <= angular_bound / 2
};

/// Advisory only: k-means on 3D position does not enforce the angular bound.
std::vector<ReachabilityEntry> reachability_report(const ClusterPlan& plan,
                                                   std::span<const Waypoint> waypoints,
                                                   const ClusterParams& params);

}  // namespace turnseq
