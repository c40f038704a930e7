#include "turnseq/scenarios.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "turnseq/error.hpp"

namespace turnseq {

void Scenario::validate() const {
    if (part.holes.empty()) throw Error(ErrorCode::invalid_input, "scenario part has no holes");
    part.validate();
    config.validate();
}

Scenario hemisphere_scenario(std::uint64_t layout_seed, std::uint64_t base_seed) {
    Scenario s;
    s.part = hemisphere_layout(40, 0.15, layout_seed);
    s.config.standoff = 0.05;
    s.config.attack = 0.0;
    s.config.base_seed = base_seed;
    return s;
}

Plan clustering_only_plan(const Scenario& scenario, std::uint64_t seed) {
    return run_algorithm(Algorithm::cluster, scenario.part, scenario.config, seed);
}

Plan greedy_pipeline_plan(const Scenario& scenario, std::uint64_t seed) {
    return run_algorithm(Algorithm::greedy, scenario.part, scenario.config, seed);
}

Plan baseline_plan(const Scenario& scenario) {
    return run_algorithm(Algorithm::baseline, scenario.part, scenario.config,
                         scenario.config.base_seed);
}

double ComparisonTable::improvement(const BenchmarkReport& report) const {
    if (baseline_mean_time <= 0.0) return 0.0;
    return 1.0 - report.estimated_execution_time / baseline_mean_time;
}

std::vector<ComparisonRow> ComparisonTable::rows() const {
    std::vector<ComparisonRow> out;
    for (const BenchmarkReport& mean : means) {
        for (const BenchmarkReport& r : trials) {
            if (r.algorithm_name == mean.algorithm_name) out.push_back({r, false, improvement(r)});
        }
        out.push_back({mean, true, improvement(mean)});
    }
    return out;
}

ComparisonTable run_comparison(const Scenario& scenario, std::size_t trials) {
    scenario.validate();
    ComparisonTable table;
    for (Algorithm algorithm : kComparedAlgorithms) {
        auto reports = benchmark(algorithm, scenario.part, scenario.config, trials);
        table.means.push_back(mean_report(reports));
        table.trials.insert(table.trials.end(), reports.begin(), reports.end());
    }
    table.baseline_mean_time = table.means.front().estimated_execution_time;
    return table;
}

void write_plot_data_csv(std::ostream& out, const ComparisonTable& table) {
    out << "algorithm,seed,metric,value\n";
    for (const BenchmarkReport& r : table.trials) {
        const auto row = [&](std::string_view metric, double value) {
            fmt::print(out, "{},{},{},{:.6f}\n", r.algorithm_name, r.seed, metric, value);
        };
        row("planning_time_s", r.planning_time);
        row("ssp_distance_m", r.ssp_distance);
        row("total_rotation_rad", r.total_rotation);
        row("estimated_execution_time_s", r.estimated_execution_time);
        row("execution_time_improvement", table.improvement(r));
    }
}

}  // namespace turnseq
