#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "turnseq/scenarios.hpp"

using namespace turnseq;

TEST_CASE("hemisphere_scenario defaults") {
    const Scenario s = hemisphere_scenario();
    CHECK(s.part.holes.size() == 40);
    CHECK(s.config.standoff == 0.05);
    CHECK(s.config.cluster.k == 5);
    CHECK(rad_to_deg(s.config.cluster.angular_bound) == doctest::Approx(72.0));
    CHECK_NOTHROW(s.validate());
}

TEST_CASE("clustering_only_plan") {
    SUBCASE("one hole") {
        Scenario s = hemisphere_scenario();
        s.part = hemisphere_layout(1, 0.15, 3);
        const Plan plan = clustering_only_plan(s, 0);
        CHECK(plan.flattened_order == std::vector<std::size_t>{0});
    }
    SUBCASE("deterministic for a fixed seed, input order inside clusters") {
        const Scenario s = hemisphere_scenario();
        const Plan a = clustering_only_plan(s, 42);
        const Plan b = clustering_only_plan(s, 42);
        CHECK(a.flattened_order == b.flattened_order);
        for (const Sequence& seq : a.sequences) CHECK(std::is_sorted(seq.order.begin(), seq.order.end()));
        CHECK_NOTHROW(a.validate(40));
    }
}

TEST_CASE("every algorithm yields a permutation within one turn") {
    const Scenario s = hemisphere_scenario();
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        for (Algorithm alg : kComparedAlgorithms) {
            const Plan plan = run_algorithm(alg, s.part, s.config, seed);
            CHECK_NOTHROW(plan.validate(40));
            CHECK(plan.cluster_plan.total_rotation <= kTwoPi + 1e-9);
        }
    }
}

TEST_CASE("run_comparison: table shape and direction") {
    const Scenario s = hemisphere_scenario();
    const ComparisonTable table = run_comparison(s, 3);
    CHECK(table.trials.size() == 9);
    CHECK(table.means.size() == 3);
    const auto rows = table.rows();
    CHECK(rows.size() == 12);
    CHECK(table.means[0].algorithm_name == "baseline");
    CHECK(table.means[2].algorithm_name == "greedy");
    CHECK(table.means[2].ssp_distance < table.means[0].ssp_distance);
    CHECK(table.improvement(table.means[0]) == doctest::Approx(0.0));
    for (const auto& row : rows) CHECK(std::isfinite(row.improvement));

    double base_var = 0.0;
    for (const auto& r : table.trials) {
        if (r.algorithm_name == "baseline") base_var += std::abs(r.ssp_distance - table.means[0].ssp_distance);
    }
    CHECK(base_var == 0.0);

    std::ostringstream plot;
    write_plot_data_csv(plot, table);
    std::istringstream in(plot.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "algorithm,seed,metric,value");
    int n = 0;
    while (std::getline(in, line)) ++n;
    CHECK(n == 9 * 5);
}

TEST_CASE("greedy improves execution time more than clustering alone in most batches") {
    int wins = 0;
    for (std::uint64_t batch = 0; batch < 50; ++batch) {
        const ComparisonTable t = run_comparison(hemisphere_scenario(7, batch * 3), 3);
        if (t.improvement(t.means[2]) > t.improvement(t.means[1])) ++wins;
    }
    MESSAGE("greedy beat clustering-only in " << wins << " of 50 batches");
    CHECK(wins >= 40);
}

// Registered as its own ctest entry: on the synthetic shuffled hemisphere the
// clustering-only mean does not land below the angle baseline.
TEST_CASE("clustering-only ssp lies between baseline and greedy over 50 seeds" *
          doctest::test_suite("direction")) {
    const Scenario s = hemisphere_scenario();
    const auto pts = positions_of(generate_waypoints(s.part, s.config.standoff, s.config.attack));
    const double baseline = ssp_distance(baseline_plan(s), pts);
    double cluster = 0.0;
    double greedy = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        cluster += ssp_distance(clustering_only_plan(s, seed), pts) / 50.0;
        greedy += ssp_distance(greedy_pipeline_plan(s, seed), pts) / 50.0;
    }
    MESSAGE("baseline " << baseline << " m, clustering-only " << cluster << " m, greedy " << greedy
                        << " m");
    CHECK(cluster < baseline);
    CHECK(cluster > greedy);
}
