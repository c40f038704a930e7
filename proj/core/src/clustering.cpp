#include "turnseq/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "turnseq/error.hpp"
#include "turnseq/random.hpp"

namespace turnseq {
namespace {

constexpr double kResultantTol = 1e-9;

std::size_t nearest_centroid(const Vec3& p, const std::vector<Vec3>& centroids) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centroids.size(); ++c) {
        const double d = (p - centroids[c]).squaredNorm();
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

double cluster_angle(const Cluster& cluster, std::span<const Waypoint> waypoints) {
    std::vector<double> angles;
    angles.reserve(cluster.members.size());
    for (std::size_t idx : cluster.members) angles.push_back(waypoints[idx].table_angle);
    try {
        return circular_mean(angles);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::degenerate_mean) throw;
    }
    // Opposed members cancel out; use the member closest to the centroid.
    std::size_t closest = cluster.members.front();
    double closest_d = std::numeric_limits<double>::infinity();
    for (std::size_t idx : cluster.members) {
        const double d = (waypoints[idx].position() - cluster.centroid).squaredNorm();
        if (d < closest_d) {
            closest_d = d;
            closest = idx;
        }
    }
    return waypoints[closest].table_angle;
}

}  // namespace

void ClusterParams::validate() const {
    if (k < 1) throw Error(ErrorCode::invalid_input, "k must be >= 1");
    if (!(angular_bound > 0.0 && angular_bound <= kTwoPi)) {
        throw Error(ErrorCode::invalid_input, "angular_bound must lie in (0, 2pi]");
    }
    if (max_iterations < 1) throw Error(ErrorCode::invalid_input, "max_iterations must be >= 1");
}

double circular_mean(std::span<const double> angles) {
    if (angles.empty()) throw Error(ErrorCode::invalid_input, "circular_mean of no angles");
    double sum_sin = 0.0;
    double sum_cos = 0.0;
    for (double a : angles) {
        sum_sin += std::sin(a);
        sum_cos += std::cos(a);
    }
    if (!(std::hypot(sum_sin, sum_cos) > kResultantTol)) {
        throw Error(ErrorCode::degenerate_mean,
                    "angles cancel out; their circular mean is undefined");
    }
    return normalize_angle(std::atan2(sum_sin, sum_cos));
}

std::vector<Cluster> cluster_points(std::span<const Waypoint> waypoints,
                                    const ClusterParams& params) {
    params.validate();
    const std::size_t n = waypoints.size();
    if (n == 0) throw Error(ErrorCode::invalid_input, "cannot cluster an empty point set");
    for (const Waypoint& wp : waypoints) {
        if (!wp.position().allFinite()) {
            throw Error(ErrorCode::invalid_input, "waypoint position is not finite");
        }
    }

    std::vector<std::size_t> assignment(n);
    std::vector<Vec3> centroids;

    if (n <= params.k) {
        std::iota(assignment.begin(), assignment.end(), std::size_t{0});
        for (const Waypoint& wp : waypoints) centroids.push_back(wp.position());
    } else {
        const std::size_t k = params.k;
        Rng rng(params.seed);
        std::vector<std::size_t> pool(n);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (std::size_t i = 0; i < k; ++i) {
            const auto j = i + static_cast<std::size_t>(uniform_below(rng, n - i));
            std::swap(pool[i], pool[j]);
            centroids.push_back(waypoints[pool[i]].position());
        }
        for (std::size_t i = 0; i < n; ++i) {
            assignment[i] = nearest_centroid(waypoints[i].position(), centroids);
        }

        std::vector<std::size_t> counts(k);
        for (std::size_t iter = 0; iter < params.max_iterations; ++iter) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t c : assignment) ++counts[c];

            for (std::size_t c = 0; c < k; ++c) {
                if (counts[c] != 0) continue;
                std::size_t far = n;
                double far_d = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (counts[assignment[i]] < 2) continue;
                    const double d = (waypoints[i].position() - centroids[assignment[i]]).squaredNorm();
                    if (d > far_d) {
                        far_d = d;
                        far = i;
                    }
                }
                if (far == n) continue;  // every point sits on its centroid
                --counts[assignment[far]];
                assignment[far] = c;
                counts[c] = 1;
            }

            std::vector<Vec3> sums(k, Vec3::Zero());
            for (std::size_t i = 0; i < n; ++i) sums[assignment[i]] += waypoints[i].position();
            for (std::size_t c = 0; c < k; ++c) {
                if (counts[c] != 0) centroids[c] = sums[c] / static_cast<double>(counts[c]);
            }

            bool changed = false;
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t best = nearest_centroid(waypoints[i].position(), centroids);
                if (best != assignment[i]) {
                    assignment[i] = best;
                    changed = true;
                }
            }
            if (!changed) break;
        }
    }

    std::vector<Cluster> clusters(centroids.size());
    for (std::size_t i = 0; i < n; ++i) clusters[assignment[i]].members.push_back(i);
    std::erase_if(clusters, [](const Cluster& c) { return c.members.empty(); });
    for (Cluster& cluster : clusters) {
        Vec3 sum = Vec3::Zero();
        for (std::size_t idx : cluster.members) sum += waypoints[idx].position();
        cluster.centroid = sum / static_cast<double>(cluster.members.size());
        cluster.mean_angle = cluster_angle(cluster, waypoints);
    }
    return clusters;
}

ClusterPlan order_clusters(std::vector<Cluster> clusters, double start_angle) {
    if (clusters.empty()) throw Error(ErrorCode::invalid_input, "no clusters to order");
    const double start = normalize_angle(start_angle);
    std::stable_sort(clusters.begin(), clusters.end(), [start](const Cluster& a, const Cluster& b) {
        return forward_difference(start, a.mean_angle) < forward_difference(start, b.mean_angle);
    });

    ClusterPlan plan;
    double at = start;
    for (const Cluster& cluster : clusters) {
        const double delta = forward_difference(at, cluster.mean_angle);
        plan.rotation_deltas.push_back(delta);
        plan.total_rotation += delta;
        at = cluster.mean_angle;
    }
    plan.clusters = std::move(clusters);
    return plan;
}

double center_offset(const Cluster& cluster, double robot_center_angle) {
    return forward_difference(cluster.mean_angle, robot_center_angle);
}

std::vector<ReachabilityEntry> reachability_report(const ClusterPlan& plan,
                                                   std::span<const Waypoint> waypoints,
                                                   const ClusterParams& params) {
    std::vector<ReachabilityEntry> report;
    report.reserve(plan.clusters.size());
    for (const Cluster& cluster : plan.clusters) {
        ReachabilityEntry entry;
        for (std::size_t idx : cluster.members) {
            if (idx >= waypoints.size()) {
                throw Error(ErrorCode::invalid_input, "cluster member index out of range");
            }
            entry.angular_extent = std::max(
                entry.angular_extent, angular_distance(waypoints[idx].table_angle, cluster.mean_angle));
        }
        entry.within_bound = entry.angular_extent <= params.angular_bound / 2.0 + 1e-12;
        report.push_back(entry);
    }
    return report;
}

}  // namespace turnseq
