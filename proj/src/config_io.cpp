#include "gridgather/config_io.hpp"

#include <sstream>

#include "gridgather/minmax.hpp"
#include "json.hpp"

namespace gridgather {

using nlohmann::json;

namespace {

SchedKind parse_kind(const std::string& s) {
    if (s == "fsync") return SchedKind::fsync;
    if (s == "ssync") return SchedKind::ssync;
    if (s == "async" || s == "async-nasty") return SchedKind::async_sched;
    throw ParseError("unknown scheduler kind: " + s);
}

} // namespace

ConfigFile parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object() || !j.contains("robots") || !j["robots"].is_array())
        throw ParseError("expected an object with a \"robots\" array");

    ConfigFile out;
    for (const auto& r : j["robots"]) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
            !r[1].is_number_integer())
            throw ParseError("robot entries must be [x, y] integer pairs");
        out.robots.add(GridNode{r[0].get<coord_t>(), r[1].get<coord_t>()});
    }
    if (out.robots.robot_count() == 0) throw ParseError("at least one robot required");

    if (j.contains("scheduler")) {
        const auto& s = j["scheduler"];
        if (!s.is_object()) throw ParseError("\"scheduler\" must be an object");
        SchedulerSpec spec;
        if (s.contains("kind")) {
            std::string kind = s["kind"].get<std::string>();
            spec.kind = parse_kind(kind);
            spec.nasty = kind == "async-nasty";
        }
        if (s.contains("seed")) spec.seed = s["seed"].get<std::uint64_t>();
        if (s.contains("fairness_window"))
            spec.fairness_window = s["fairness_window"].get<std::int64_t>();
        if (s.contains("max_look_to_move_delay"))
            spec.max_look_to_move_delay = s["max_look_to_move_delay"].get<std::int64_t>();
        out.scheduler = spec;
    }
    if (j.contains("limits") && j["limits"].is_object() &&
        j["limits"].contains("max_activations"))
        out.max_activations = j["limits"]["max_activations"].get<std::int64_t>();
    return out;
}

std::string config_to_json(const Configuration& c) {
    json robots = json::array();
    for (const auto& [p, k] : c.counts())
        for (int i = 0; i < k; ++i) robots.push_back(json::array({p.x, p.y}));
    json j;
    j["robots"] = robots;
    return j.dump(2);
}

std::string render_ascii(const Configuration& c) {
    Rect box = mer(c);
    MinMaxSet vm = minmax_nodes(c);
    for (const auto& m : vm.nodes) {
        box.x_min = std::min(box.x_min, m.x);
        box.x_max = std::max(box.x_max, m.x);
        box.y_min = std::min(box.y_min, m.y);
        box.y_max = std::max(box.y_max, m.y);
    }
    std::ostringstream os;
    for (coord_t y = box.y_max; y >= box.y_min; --y) {
        for (coord_t x = box.x_min; x <= box.x_max; ++x) {
            GridNode p{x, y};
            bool mm = vm.contains(p);
            int k = c.count_at(p);
            char ch = '.';
            if (k >= 2) ch = mm ? '@' : 'M';
            else if (k == 1) ch = mm ? '@' : 'R';
            else if (mm) ch = '*';
            os << ch;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace gridgather
