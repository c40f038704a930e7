#include "turnseq/sequencer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "turnseq/error.hpp"

namespace turnseq {
namespace {

void check_start(const DistanceMatrix& m, std::size_t start) {
    if (m.size() == 0) throw Error(ErrorCode::invalid_input, "empty distance matrix");
    if (start >= m.size()) {
        throw Error(ErrorCode::invalid_input,
                    "start index " + std::to_string(start) + " out of range");
    }
}

Plan assemble(std::string algorithm, ClusterPlan cluster_plan, std::vector<Sequence> sequences) {
    Plan plan;
    plan.algorithm = std::move(algorithm);
    plan.cluster_plan = std::move(cluster_plan);
    plan.sequences = std::move(sequences);
    for (const Sequence& seq : plan.sequences) {
        plan.flattened_order.insert(plan.flattened_order.end(), seq.order.begin(), seq.order.end());
    }
    return plan;
}

std::vector<Sequence> members_in_input_order(const ClusterPlan& cp) {
    std::vector<Sequence> sequences;
    sequences.reserve(cp.clusters.size());
    for (const Cluster& cluster : cp.clusters) {
        Sequence seq{cluster.members};
        std::sort(seq.order.begin(), seq.order.end());
        sequences.push_back(std::move(seq));
    }
    return sequences;
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::span<const Vec3> positions) : n_(positions.size()) {
    if (n_ == 0) throw Error(ErrorCode::invalid_input, "distance matrix of no points");
    d_.assign(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        if (!positions[i].allFinite()) {
            throw Error(ErrorCode::invalid_input, "position is not finite");
        }
        for (std::size_t j = i + 1; j < n_; ++j) {
            const double d = (positions[i] - positions[j]).norm();
            d_[i * n_ + j] = d;
            d_[j * n_ + i] = d;
        }
    }
}

DistanceMatrix distance_matrix(std::span<const Vec3> positions) {
    return DistanceMatrix(positions);
}

Sequence greedy_sequence(const DistanceMatrix& m, std::size_t start, MaskMode mode) {
    check_start(m, start);
    const std::size_t n = m.size();
    Sequence seq;
    seq.order.reserve(n);
    seq.order.push_back(start);

    if (mode == MaskMode::visited_set) {
        std::vector<bool> visited(n, false);
        visited[start] = true;
        std::size_t current = start;
        while (seq.order.size() < n) {
            std::size_t next = n;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < n; ++j) {
                if (!visited[j] && m(current, j) < best) {
                    best = m(current, j);
                    next = j;
                }
            }
            visited[next] = true;
            seq.order.push_back(next);
            current = next;
        }
        return seq;
    }

    constexpr double kMaxVal = std::numeric_limits<double>::max();
    std::vector<double> md = m.data();
    auto mask_column = [&](std::size_t col) {
        for (std::size_t row = 0; row < n; ++row) md[row * n + col] = kMaxVal;
    };
    for (std::size_t i = 0; i < n; ++i) md[i * n + i] = kMaxVal;
    mask_column(start);
    std::size_t current = start;
    while (seq.order.size() < n) {
        const auto row = md.begin() + static_cast<std::ptrdiff_t>(current * n);
        const auto next = static_cast<std::size_t>(
            std::min_element(row, row + static_cast<std::ptrdiff_t>(n)) - row);
        mask_column(next);
        seq.order.push_back(next);
        current = next;
    }
    return seq;
}

Sequence optimal_sequence(const DistanceMatrix& m, std::size_t start) {
    check_start(m, start);
    const std::size_t n = m.size();
    if (n > kMaxOptimalPoints) {
        throw Error(ErrorCode::instance_too_large,
                    "exact sequencing is capped at " + std::to_string(kMaxOptimalPoints) +
                        " points, got " + std::to_string(n));
    }

    // rest[S * n + v]: shortest path that starts at v and covers every node in
    // S (v not in S). Removing a bit makes a smaller integer, so increasing
    // mask order is a valid evaluation order.
    const std::size_t full = std::size_t{1} << n;
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> rest(full * n, kInf);
    for (std::size_t v = 0; v < n; ++v) rest[v] = 0.0;
    for (std::size_t s = 1; s < full; ++s) {
        for (std::size_t v = 0; v < n; ++v) {
            if (s & (std::size_t{1} << v)) continue;
            double best = kInf;
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t bit = std::size_t{1} << j;
                if (!(s & bit)) continue;
                best = std::min(best, m(v, j) + rest[(s ^ bit) * n + j]);
            }
            rest[s * n + v] = best;
        }
    }

    Sequence seq;
    seq.order.push_back(start);
    std::size_t remaining = (full - 1) & ~(std::size_t{1} << start);
    std::size_t current = start;
    while (remaining != 0) {
        const double target = rest[remaining * n + current];
        const double slack = 1e-12 * std::max(1.0, target);
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t bit = std::size_t{1} << j;
            if (!(remaining & bit)) continue;
            if (m(current, j) + rest[(remaining ^ bit) * n + j] <= target + slack) {
                seq.order.push_back(j);
                remaining ^= bit;
                current = j;
                break;
            }
        }
    }
    return seq;
}

double path_length(const DistanceMatrix& m, std::span<const std::size_t> order) {
    double total = 0.0;
    for (std::size_t i = 1; i < order.size(); ++i) total += m(order[i - 1], order[i]);
    return total;
}

void Plan::validate(std::size_t n_points) const {
    if (flattened_order.size() != n_points) {
        throw Error(ErrorCode::invalid_input,
                    "plan visits " + std::to_string(flattened_order.size()) + " points, expected " +
                        std::to_string(n_points));
    }
    std::vector<bool> seen(n_points, false);
    for (std::size_t idx : flattened_order) {
        if (idx >= n_points || seen[idx]) {
            throw Error(ErrorCode::invalid_input, "plan order is not a permutation");
        }
        seen[idx] = true;
    }
    if (sequences.size() != cluster_plan.clusters.size() ||
        cluster_plan.rotation_deltas.size() != cluster_plan.clusters.size()) {
        throw Error(ErrorCode::invalid_input, "plan has mismatched cluster and sequence counts");
    }
    std::size_t at = 0;
    for (const Sequence& seq : sequences) {
        for (std::size_t idx : seq.order) {
            if (flattened_order[at++] != idx) {
                throw Error(ErrorCode::invalid_input,
                            "flattened order does not concatenate the cluster sequences");
            }
        }
    }
}

Plan baseline_angle_sequence(std::span<const Waypoint> waypoints, std::size_t groups,
                             double table_angle) {
    if (waypoints.empty()) throw Error(ErrorCode::invalid_input, "no waypoints to sequence");
    if (groups < 1) throw Error(ErrorCode::invalid_input, "groups must be >= 1");

    const double width = kTwoPi / static_cast<double>(groups);
    std::vector<Cluster> bins(groups);
    for (std::size_t i = 0; i < waypoints.size(); ++i) {
        const double angle = normalize_angle(waypoints[i].table_angle);
        const auto b = std::min(static_cast<std::size_t>(angle / width), groups - 1);
        bins[b].members.push_back(i);
    }
    for (std::size_t b = 0; b < groups; ++b) {
        Cluster& bin = bins[b];
        if (bin.members.empty()) continue;
        Vec3 sum = Vec3::Zero();
        for (std::size_t idx : bin.members) sum += waypoints[idx].position();
        bin.centroid = sum / static_cast<double>(bin.members.size());
        bin.mean_angle = (static_cast<double>(b) + 0.5) * width;
    }
    std::erase_if(bins, [](const Cluster& c) { return c.members.empty(); });

    ClusterPlan cp = order_clusters(std::move(bins), table_angle);
    auto sequences = members_in_input_order(cp);
    return assemble("baseline", std::move(cp), std::move(sequences));
}

Plan greedy_plan(std::span<const Waypoint> waypoints, const ClusterParams& params,
                 double robot_center_angle, const PipelineOptions& options) {
    ClusterPlan cp = order_clusters(cluster_points(waypoints, params), robot_center_angle);

    std::vector<Sequence> sequences;
    sequences.reserve(cp.clusters.size());
    Vec3 tool = options.home_position;
    for (const Cluster& cluster : cp.clusters) {
        std::vector<std::size_t> members = cluster.members;
        std::sort(members.begin(), members.end());
        std::vector<Vec3> local;
        local.reserve(members.size());
        for (std::size_t idx : members) local.push_back(waypoints[idx].position());

        std::size_t start = 0;
        if (options.start_rule == StartRule::nearest_to_previous) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < local.size(); ++i) {
                const double d = (local[i] - tool).squaredNorm();
                if (d < best) {
                    best = d;
                    start = i;
                }
            }
        }

        const Sequence local_seq = greedy_sequence(DistanceMatrix(local), start);
        Sequence seq;
        seq.order.reserve(local_seq.order.size());
        for (std::size_t i : local_seq.order) seq.order.push_back(members[i]);
        tool = waypoints[seq.order.back()].position();
        sequences.push_back(std::move(seq));
    }
    return assemble("greedy", std::move(cp), std::move(sequences));
}

Plan clustering_only_plan(std::span<const Waypoint> waypoints, const ClusterParams& params,
                          double robot_center_angle) {
    ClusterPlan cp = order_clusters(cluster_points(waypoints, params), robot_center_angle);
    auto sequences = members_in_input_order(cp);
    return assemble("cluster", std::move(cp), std::move(sequences));
}

Plan full_pipeline(const PartModel& part, double standoff, double attack,
                   const ClusterParams& params, double robot_center_angle,
                   const PipelineOptions& options) {
    if (part.holes.empty()) throw Error(ErrorCode::invalid_input, "part has no holes");
    part.validate();
    const std::vector<Waypoint> waypoints = generate_waypoints(part, standoff, attack);
    return greedy_plan(waypoints, params, robot_center_angle, options);
}

}  // namespace turnseq
