// turnseq: generate part layouts, plan turntable/robot visiting sequences and
// benchmark the planners against the angle-sector baseline.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "turnseq/error.hpp"
#include "turnseq/io.hpp"
#include "turnseq/metrics.hpp"
#include "turnseq/scenarios.hpp"

namespace {

using namespace turnseq;

struct CliOptions {
    // generate
    std::size_t n = 40;
    double radius = 0.15;
    std::string out_path;

    // plan / bench
    std::string layout_path;
    std::string algorithm = "greedy";
    std::size_t trials = 3;
    std::string report_path;
    std::string plot_path;

    std::size_t k = 5;
    double angular_bound_deg = 72.0;
    double standoff = 0.05;
    double attack_deg = 0.0;
    double robot_speed = CellModel{}.robot_linear_speed;
    double table_speed = CellModel{}.turntable_angular_speed;
    double dwell = CellModel{}.dwell_per_point;
    double planner_overhead = 0.0;
    double robot_center_deg = 0.0;
    std::uint64_t seed = 0;
    std::size_t max_iterations = 100;
    std::string start_rule = "nearest";
    std::string format = "table";
};

const CLI::Validator kPositive =
    CLI::Validator([](std::string& s) -> std::string {
        double v = 0.0;
        if (!CLI::detail::lexical_cast(s, v) || !(v > 0.0) || !std::isfinite(v)) {
            return "must be a number > 0, got " + s;
        }
        return {};
    }, "POSITIVE");

const CLI::Validator kNonNegative =
    CLI::Validator([](std::string& s) -> std::string {
        double v = 0.0;
        if (!CLI::detail::lexical_cast(s, v) || !(v >= 0.0) || !std::isfinite(v)) {
            return "must be a number >= 0, got " + s;
        }
        return {};
    }, "NON-NEGATIVE");

const CLI::Validator kFinite =
    CLI::Validator([](std::string& s) -> std::string {
        double v = 0.0;
        if (!CLI::detail::lexical_cast(s, v) || !std::isfinite(v)) return "must be a finite number";
        return {};
    }, "NUMBER");

const CLI::Validator kBoundDeg =
    CLI::Validator([](std::string& s) -> std::string {
        double v = 0.0;
        if (!CLI::detail::lexical_cast(s, v) || !(v > 0.0 && v <= 360.0)) {
            return "must lie in (0, 360], got " + s;
        }
        return {};
    }, "DEG");

void add_planner_flags(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--k", o.k, "Cluster count")->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
    cmd->add_option("--angular-bound-deg", o.angular_bound_deg, "Reachable sector width")->check(kBoundDeg);
    cmd->add_option("--standoff", o.standoff, "Stand-off along the hole axis, m")->check(kNonNegative);
    cmd->add_option("--attack-deg", o.attack_deg, "Attack angle about the hole x axis")->check(kFinite);
    cmd->add_option("--robot-speed", o.robot_speed, "Tool linear speed, m/s")->check(kPositive);
    cmd->add_option("--table-speed", o.table_speed, "Turntable speed, rad/s")->check(kPositive);
    cmd->add_option("--dwell", o.dwell, "Action time per point, s")->check(kNonNegative);
    cmd->add_option("--planner-overhead", o.planner_overhead, "Motion-planner time per point, s")
        ->check(kNonNegative);
    cmd->add_option("--robot-center-deg", o.robot_center_deg, "Table angle facing the robot")
        ->check(kFinite);
    cmd->add_option("--seed", o.seed, "Clustering seed (base seed for bench)");
    cmd->add_option("--max-iterations", o.max_iterations, "k-means iteration cap")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
    cmd->add_option("--start-rule", o.start_rule, "Cluster entry point: nearest or first")
        ->check(CLI::IsMember({"nearest", "first"}));
    cmd->add_option("--format", o.format, "Stdout format")->check(CLI::IsMember({"table", "json"}));
}

PlannerConfig make_config(const CliOptions& o) {
    PlannerConfig c;
    c.standoff = o.standoff;
    c.attack = deg_to_rad(o.attack_deg);
    c.cluster.k = o.k;
    c.cluster.angular_bound = deg_to_rad(o.angular_bound_deg);
    c.cluster.max_iterations = o.max_iterations;
    c.cluster.seed = o.seed;
    c.cell.robot_linear_speed = o.robot_speed;
    c.cell.turntable_angular_speed = o.table_speed;
    c.cell.dwell_per_point = o.dwell;
    c.cell.planner_overhead_per_point = o.planner_overhead;
    c.robot_center_angle = deg_to_rad(o.robot_center_deg);
    c.base_seed = o.seed;
    c.pipeline.start_rule =
        o.start_rule == "first" ? StartRule::first_listed : StartRule::nearest_to_previous;
    c.validate();
    return c;
}

int cmd_generate(const CliOptions& o) {
    const PartModel part = hemisphere_layout(o.n, o.radius, o.seed);
    save_layout(part, o.out_path);
    fmt::print("wrote {} holes to {}\n", part.holes.size(), o.out_path);
    return 0;
}

int cmd_plan(const CliOptions& o) {
    const auto algorithm = parse_algorithm(o.algorithm);
    if (!algorithm) throw Error(ErrorCode::invalid_input, "unknown algorithm '" + o.algorithm + "'");
    const PartModel part = load_layout(o.layout_path);
    const PlannerConfig config = make_config(o);

    const auto begin = std::chrono::steady_clock::now();
    const Plan plan = run_algorithm(*algorithm, part, config, o.seed);
    const auto end = std::chrono::steady_clock::now();
    const double planning_time = std::chrono::duration<double>(end - begin).count();

    const auto waypoints = generate_waypoints(part, config.standoff, config.attack);
    const auto positions = positions_of(waypoints);
    write_text_file(o.out_path, plan_to_json(plan, waypoints));

    const double ssp = ssp_distance(plan, positions);
    if (o.format == "json") {
        nlohmann::json s{{"algorithm", plan.algorithm},
                         {"n_points", positions.size()},
                         {"ssp_distance_m", ssp},
                         {"total_rotation_rad", plan.cluster_plan.total_rotation},
                         {"planning_time_s", planning_time}};
        std::cout << s.dump() << '\n';
    } else {
        fmt::print("{} n={} ssp_distance_m={:.6f} total_rotation_rad={:.6f} planning_time_s={:.6f}\n",
                   plan.algorithm, positions.size(), ssp, plan.cluster_plan.total_rotation,
                   planning_time);
    }
    return 0;
}

void print_table(const ComparisonTable& table, const CellModel& cell) {
    if (cell.is_default()) {
        fmt::print("# cell model uses placeholder defaults: robot {} m/s, turntable {} rad/s, dwell {} s\n",
                   cell.robot_linear_speed, cell.turntable_angular_speed, cell.dwell_per_point);
    }
    fmt::print("{:<9} {:>5} {:>6} {:>4} {:>12} {:>10} {:>10} {:>12} {:>12}\n", "algorithm", "trial",
               "seed", "n", "planning_s", "ssp_m", "rot_rad", "exec_est_s", "improvement");
    for (const ComparisonRow& row : table.rows()) {
        const BenchmarkReport& r = row.report;
        fmt::print("{:<9} {:>5} {:>6} {:>4} {:>12.6f} {:>10.4f} {:>10.4f} {:>12.3f} {:>11.1f}%\n",
                   r.algorithm_name, row.is_mean ? std::string("mean") : std::to_string(r.trial),
                   row.is_mean ? std::string("-") : std::to_string(r.seed), r.n_points,
                   r.planning_time, r.ssp_distance, r.total_rotation, r.estimated_execution_time,
                   100.0 * row.improvement);
    }
}

void print_json(const ComparisonTable& table, const CellModel& cell) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ComparisonRow& row : table.rows()) {
        const BenchmarkReport& r = row.report;
        nlohmann::json j{{"algorithm", r.algorithm_name},
                         {"n_points", r.n_points},
                         {"planning_time_s", r.planning_time},
                         {"ssp_distance_m", r.ssp_distance},
                         {"total_rotation_rad", r.total_rotation},
                         {"estimated_execution_time_s", r.estimated_execution_time},
                         {"improvement", row.improvement}};
        if (row.is_mean) {
            j["trial"] = "mean";
        } else {
            j["trial"] = r.trial;
            j["seed"] = r.seed;
        }
        rows.push_back(std::move(j));
    }
    nlohmann::json doc{{"placeholder_cell_model", cell.is_default()}, {"rows", std::move(rows)}};
    std::cout << doc.dump(2) << '\n';
}

int cmd_bench(const CliOptions& o) {
    if (o.trials < 1) throw Error(ErrorCode::invalid_input, "--trials must be >= 1");
    Scenario scenario;
    scenario.part = load_layout(o.layout_path);
    scenario.config = make_config(o);
    const ComparisonTable table = run_comparison(scenario, o.trials);

    std::ostringstream report;
    write_report_csv(report, table.trials);
    write_text_file(o.report_path, report.str());
    std::ostringstream plot;
    write_plot_data_csv(plot, table);
    write_text_file(o.plot_path, plot.str());

    if (o.format == "json") print_json(table, scenario.config.cell);
    else print_table(table, scenario.config.cell);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CliOptions opts;
    CLI::App app{"Turntable task sequencing: layouts, plans and benchmarks"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "Write a synthetic hemisphere hole layout");
    gen->add_option("--n", opts.n, "Number of holes")->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
    gen->add_option("--radius", opts.radius, "Hemisphere radius, m")->check(kPositive);
    gen->add_option("--seed", opts.seed, "Layout seed");
    gen->add_option("--out", opts.out_path, "Layout JSON path")->required();

    auto* plan = app.add_subcommand("plan", "Plan a visiting sequence for a layout");
    plan->add_option("--layout", opts.layout_path, "Layout JSON path")->required();
    plan->add_option("--algorithm", opts.algorithm, "baseline, cluster or greedy");
    plan->add_option("--out", opts.out_path, "Plan JSON path")->required();
    add_planner_flags(plan, opts);

    auto* bench = app.add_subcommand("bench", "Compare baseline, clustering-only and greedy");
    bench->add_option("--layout", opts.layout_path, "Layout JSON path")->required();
    bench->add_option("--trials", opts.trials, "Trials per algorithm");
    bench->add_option("--report", opts.report_path, "Per-trial report CSV path")->required();
    bench->add_option("--plot", opts.plot_path, "Plot-data CSV path")->required();
    add_planner_flags(bench, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*gen) return cmd_generate(opts);
        if (*plan) return cmd_plan(opts);
        if (*bench) return cmd_bench(opts);
    } catch (const turnseq::Error& e) {
        std::cerr << "turnseq: " << to_string(e.code()) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "turnseq: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
