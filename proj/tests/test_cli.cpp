// Drives the turnseq executable end to end through the shell.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "turnseq/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int status = 0;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("turnseq_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run run(const std::string& args) {
    const fs::path out = scratch() / "stdout.txt";
    const fs::path err = scratch() / "stderr.txt";
    const std::string cmd = std::string(TURNSEQ_CLI_PATH) + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    return {WEXITSTATUS(raw), slurp(out), slurp(err)};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

// Drops the planning_time column, the only wall-clock field in the CSV files.
std::string without_timing(const std::string& csv, bool long_format) {
    std::string result;
    for (const std::string& line : lines(csv)) {
        if (long_format) {
            if (line.find(",planning_time_s,") == std::string::npos) result += line + "\n";
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        cells.erase(cells.begin() + 4);
        for (const auto& c : cells) result += c + ",";
        result += "\n";
    }
    return result;
}

const std::string kBundled = std::string(TURNSEQ_DATA_DIR) + "/hemisphere40.json";

}  // namespace

TEST_CASE("generate writes loadable, deterministic layouts") {
    const fs::path a = scratch() / "a.json";
    const fs::path b = scratch() / "b.json";
    Run r = run("generate --n 40 --radius 0.15 --seed 7 --out " + a.string());
    REQUIRE(r.status == 0);
    CHECK(r.err.empty());
    CHECK(turnseq::load_layout(a).holes.size() == 40);

    REQUIRE(run("generate --n 40 --radius 0.15 --seed 7 --out " + b.string()).status == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(turnseq::layout_to_json(turnseq::load_layout(a)) == slurp(a));
    CHECK(slurp(a) == slurp(kBundled));

    REQUIRE(run("generate --n 1 --out " + b.string()).status == 0);
    CHECK(turnseq::load_layout(b).holes.size() == 1);
}

TEST_CASE("generate rejects bad arguments") {
    Run r = run("generate --n 0 --out " + (scratch() / "x.json").string());
    CHECK(r.status != 0);
    CHECK(r.out.empty());
    CHECK(r.err.find("--n") != std::string::npos);

    r = run("generate --radius -2 --out " + (scratch() / "x.json").string());
    CHECK(r.status != 0);
    CHECK(r.err.find("--radius") != std::string::npos);

    r = run("generate --out /nonexistent-dir/x.json");
    CHECK(r.status != 0);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("plan: baseline on a small layout is deterministic") {
    const fs::path layout = scratch() / "three.json";
    REQUIRE(run("generate --n 3 --seed 2 --out " + layout.string()).status == 0);
    const fs::path p1 = scratch() / "p1.json";
    const fs::path p2 = scratch() / "p2.json";
    Run r = run("plan --layout " + layout.string() + " --algorithm baseline --out " + p1.string());
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("baseline n=3 ", 0) == 0);
    CHECK(lines(r.out).size() == 1);
    REQUIRE(run("plan --layout " + layout.string() + " --algorithm baseline --out " + p2.string())
                .status == 0);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(nlohmann::json::parse(slurp(p1))["steps"].size() == 3);
}

TEST_CASE("plan: greedy with a fixed seed is reproducible") {
    const fs::path p1 = scratch() / "g1.json";
    const fs::path p2 = scratch() / "g2.json";
    REQUIRE(run("plan --layout " + kBundled + " --algorithm greedy --seed 5 --out " + p1.string()).status == 0);
    REQUIRE(run("plan --layout " + kBundled + " --algorithm greedy --seed 5 --out " + p2.string()).status == 0);
    CHECK(slurp(p1) == slurp(p2));
}

TEST_CASE("plan: greedy is no longer than the baseline on the bundled layout") {
    const fs::path out = scratch() / "plan.json";
    Run base = run("plan --layout " + kBundled + " --algorithm baseline --format json --out " + out.string());
    REQUIRE(base.status == 0);
    const double base_ssp = nlohmann::json::parse(base.out)["ssp_distance_m"].get<double>();
    int ok = 0;
    for (int seed = 0; seed < 50; ++seed) {
        Run g = run("plan --layout " + kBundled + " --algorithm greedy --format json --seed " +
                    std::to_string(seed) + " --out " + out.string());
        REQUIRE(g.status == 0);
        if (nlohmann::json::parse(g.out)["ssp_distance_m"].get<double>() <= base_ssp) ++ok;
    }
    CHECK(ok >= 45);
}

TEST_CASE("plan: error cases exit nonzero with a message on stderr") {
    const std::string out = (scratch() / "x.json").string();
    Run r = run("plan --layout " + kBundled + " --algorithm tabu --out " + out);
    CHECK(r.status != 0);
    CHECK(r.out.empty());
    CHECK(r.err.find("unknown algorithm") != std::string::npos);

    r = run("plan --layout " + (scratch() / "missing.json").string() + " --out " + out);
    CHECK(r.status != 0);
    CHECK(r.err.find("cannot open layout") != std::string::npos);

    const fs::path broken = scratch() / "broken.json";
    std::ofstream(broken) << R"({"holes":[{"origin":[0,0,0],"x_axis":[1,0,0],"y_axis":[1,0,0],"z_axis":[0,0,1]}]})";
    r = run("plan --layout " + broken.string() + " --out " + out);
    CHECK(r.status != 0);
    CHECK(r.err.find("holes[0]") != std::string::npos);

    r = run("plan --layout " + kBundled + " --k 0 --out " + out);
    CHECK(r.status != 0);
    CHECK(r.err.find("--k") != std::string::npos);

    r = run("plan --layout " + kBundled + " --table-speed 0 --out " + out);
    CHECK(r.status != 0);
    CHECK(r.err.find("--table-speed") != std::string::npos);
}

TEST_CASE("bench: files, row counts and determinism") {
    const fs::path r1 = scratch() / "r1.csv";
    const fs::path p1 = scratch() / "p1.csv";
    const fs::path r2 = scratch() / "r2.csv";
    const fs::path p2 = scratch() / "p2.csv";
    Run a = run("bench --layout " + kBundled + " --trials 3 --seed 11 --report " + r1.string() +
                " --plot " + p1.string());
    REQUIRE(a.status == 0);
    CHECK(lines(slurp(r1)).size() == 1 + 9 + 3);
    CHECK(lines(slurp(p1)).size() == 1 + 9 * 5);
    CHECK(a.out.find("placeholder") != std::string::npos);

    Run b = run("bench --layout " + kBundled + " --trials 3 --seed 11 --format json --report " +
                r2.string() + " --plot " + p2.string());
    REQUIRE(b.status == 0);
    CHECK(without_timing(slurp(r1), false) == without_timing(slurp(r2), false));
    CHECK(without_timing(slurp(p1), true) == without_timing(slurp(p2), true));

    const auto doc = nlohmann::json::parse(b.out);
    REQUIRE(doc["rows"].size() == 12);
    for (const auto& row : doc["rows"]) {
        REQUIRE(row.contains("improvement"));
        CHECK(std::isfinite(row["improvement"].get<double>()));
    }
}

TEST_CASE("bench: trials below one is an error") {
    Run r = run("bench --layout " + kBundled + " --trials 0 --report " + (scratch() / "r.csv").string() +
                " --plot " + (scratch() / "p.csv").string());
    CHECK(r.status != 0);
    CHECK(r.out.empty());
    CHECK(r.err.find("trials") != std::string::npos);
}
