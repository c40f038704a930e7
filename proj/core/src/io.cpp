#include "turnseq/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "turnseq/error.hpp"

namespace turnseq {
namespace {

using nlohmann::json;

json vec_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

Vec3 read_vec(const json& node, const std::string& field) {
    if (!node.is_array() || node.size() != 3) {
        throw Error(ErrorCode::invalid_input, field + ": expected an array of 3 numbers");
    }
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
        if (!node[i].is_number()) {
            throw Error(ErrorCode::invalid_input, field + ": expected an array of 3 numbers");
        }
        v[i] = node[i].get<double>();
    }
    return v;
}

}  // namespace

std::string layout_to_json(const PartModel& part) {
    json doc;
    doc["turntable_axis"] = vec_json(part.turntable_axis);
    doc["turntable_center"] = vec_json(part.turntable_center);
    json holes = json::array();
    for (const HoleFrame& h : part.holes) {
        holes.push_back({{"origin", vec_json(h.origin)},
                         {"x_axis", vec_json(h.x_axis)},
                         {"y_axis", vec_json(h.y_axis)},
                         {"z_axis", vec_json(h.z_axis)}});
    }
    doc["holes"] = std::move(holes);
    return doc.dump(2) + "\n";
}

PartModel layout_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::invalid_input, std::string("layout is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::invalid_input, "layout must be a JSON object");

    PartModel part;
    if (doc.contains("turntable_axis")) part.turntable_axis = read_vec(doc["turntable_axis"], "turntable_axis");
    if (doc.contains("turntable_center")) {
        part.turntable_center = read_vec(doc["turntable_center"], "turntable_center");
    }
    if (!doc.contains("holes") || !doc["holes"].is_array()) {
        throw Error(ErrorCode::invalid_input, "holes: expected an array");
    }
    const json& holes = doc["holes"];
    if (holes.empty()) throw Error(ErrorCode::invalid_input, "holes: layout has no holes");
    for (std::size_t i = 0; i < holes.size(); ++i) {
        const std::string prefix = "holes[" + std::to_string(i) + "].";
        const json& h = holes[i];
        if (!h.is_object()) throw Error(ErrorCode::invalid_input, prefix + ": expected an object");
        HoleFrame frame;
        for (const char* key : {"origin", "x_axis", "y_axis", "z_axis"}) {
            if (!h.contains(key)) throw Error(ErrorCode::invalid_input, prefix + key + ": missing");
        }
        frame.origin = read_vec(h["origin"], prefix + "origin");
        frame.x_axis = read_vec(h["x_axis"], prefix + "x_axis");
        frame.y_axis = read_vec(h["y_axis"], prefix + "y_axis");
        frame.z_axis = read_vec(h["z_axis"], prefix + "z_axis");
        part.holes.push_back(frame);
    }
    part.validate();
    return part;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::io, "cannot open " + path.string() + " for writing");
    out << text;
    out.close();
    if (!out) throw Error(ErrorCode::io, "failed writing " + path.string());
}

void save_layout(const PartModel& part, const std::filesystem::path& path) {
    write_text_file(path, layout_to_json(part));
}

PartModel load_layout(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io, "cannot open layout " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return layout_from_json(buf.str());
}

std::string plan_to_json(const Plan& plan, std::span<const Waypoint> waypoints) {
    plan.validate(waypoints.size());
    json steps = json::array();
    const auto& cp = plan.cluster_plan;
    for (std::size_t c = 0; c < plan.sequences.size(); ++c) {
        bool first = true;
        for (std::size_t idx : plan.sequences[c].order) {
            steps.push_back({{"waypoint_index", idx},
                             {"cluster_index", c},
                             {"position", vec_json(waypoints[idx].position())},
                             {"table_angle", waypoints[idx].table_angle},
                             {"rotation_before", first ? cp.rotation_deltas[c] : 0.0}});
            first = false;
        }
    }
    json doc;
    doc["algorithm"] = plan.algorithm;
    doc["n_points"] = waypoints.size();
    doc["n_clusters"] = cp.clusters.size();
    doc["total_rotation"] = cp.total_rotation;
    doc["steps"] = std::move(steps);
    return doc.dump(2) + "\n";
}

}  // namespace turnseq
