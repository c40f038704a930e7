#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "turnseq/metrics.hpp"

namespace turnseq {

struct Scenario {
    PartModel part;
    PlannerConfig config;

    void validate() const;
};

/// The desk-scale stand-in for the drilled hemisphere: 40 holes on a 0.15 m
/// hemisphere, 0.05 m standoff, no attack tilt, five clusters.
Scenario hemisphere_scenario(std::uint64_t layout_seed = 7, std::uint64_t base_seed = 0);

Plan clustering_only_plan(const Scenario& scenario, std::uint64_t seed);
Plan greedy_pipeline_plan(const Scenario& scenario, std::uint64_t seed);
Plan baseline_plan(const Scenario& scenario);

inline constexpr std::array<Algorithm, 3> kComparedAlgorithms = {
    Algorithm::baseline, Algorithm::cluster, Algorithm::greedy};

struct ComparisonRow {
    BenchmarkReport report;
    bool is_mean = false;
    double improvement = 0.0;  // 1 - t / t_baseline_mean, execution time
};

struct ComparisonTable {
    std::vector<BenchmarkReport> trials;  // grouped by algorithm, trial order
    std::vector<BenchmarkReport> means;   // one per algorithm, same order
    double baseline_mean_time = 0.0;

    double improvement(const BenchmarkReport& report) const;
    /// Trial rows of each algorithm followed by its mean row.
    std::vector<ComparisonRow> rows() const;
};

/// Benchmarks baseline, clustering-only and the greedy pipeline on the same
/// seeds.
ComparisonTable run_comparison(const Scenario& scenario, std::size_t trials);

/// Long-format plot data: algorithm,seed,metric,value. Per-trial points for
/// every report metric plus the execution time improvement.
void write_plot_data_csv(std::ostream& out, const ComparisonTable& table);

}  // namespace turnseq
