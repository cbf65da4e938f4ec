#include "gridgather/analysis.hpp"

#include <sstream>

#include "gridgather/config_io.hpp"
#include "json.hpp"

namespace gridgather {

Analysis analyze(const Configuration& c) {
    Analysis a;
    a.config = c;
    a.box = mer(c);
    a.vm = minmax_nodes(c);
    a.shape = classify_gm(a.vm);
    for (const auto& m : a.vm.nodes) a.centralities.push_back(centrality(c, m));
    a.weber_nodes = weber_minmax(c, a.vm);
    a.autos = automorphisms(c);
    a.cls = classify(c);
    return a;
}

std::string Analysis::text() const {
    std::ostringstream os;
    os << "n: " << config.robot_count() << "\n";
    os << "mer: x [" << box.x_min << ", " << box.x_max << "]  y [" << box.y_min << ", "
       << box.y_max << "]  (" << box.a() << "x" << box.b() << ")\n";
    os << "k: " << vm.k << "\n";
    os << "minmax nodes (" << vm.nodes.size() << "):";
    for (std::size_t i = 0; i < vm.nodes.size(); ++i)
        os << " (" << vm.nodes[i].x << "," << vm.nodes[i].y << "):c=" << centralities[i];
    os << "\n";
    os << "shape: " << shape_name(shape) << "\n";
    os << "weber minmax:";
    for (const auto& m : weber_nodes) os << " (" << m.x << "," << m.y << ")";
    os << "\n";
    os << "automorphisms: ";
    if (autos.empty()) os << "none (asymmetric)";
    for (std::size_t i = 0; i < autos.size(); ++i)
        os << (i ? ", " : "") << autos[i].describe();
    os << "\n";
    os << "class: " << gather_kind_name(cls.kind);
    if (cls.kind == GatherKind::ungatherable)
        os << " (" << reason_name(cls.reason)
           << (cls.witness ? ", witness " + cls.witness->describe() : "") << ")";
    if (cls.kind != GatherKind::ungatherable && config.robot_count() < 9 &&
        config.occupied_count() > 1)
        os << " (n < 9: below the algorithm's population bound)";
    os << "\n\n" << render_ascii(config);
    return os.str();
}

std::string Analysis::to_json() const {
    nlohmann::json j;
    j["n"] = config.robot_count();
    j["mer"] = {{"x_min", box.x_min}, {"x_max", box.x_max}, {"y_min", box.y_min},
                {"y_max", box.y_max}};
    j["k"] = vm.k;
    nlohmann::json nodes = nlohmann::json::array();
    for (std::size_t i = 0; i < vm.nodes.size(); ++i)
        nodes.push_back({{"x", vm.nodes[i].x}, {"y", vm.nodes[i].y},
                         {"centrality", centralities[i]}});
    j["minmax_nodes"] = nodes;
    j["shape"] = shape_name(shape);
    nlohmann::json webers = nlohmann::json::array();
    for (const auto& m : weber_nodes) webers.push_back({{"x", m.x}, {"y", m.y}});
    j["weber_minmax"] = webers;
    nlohmann::json syms = nlohmann::json::array();
    for (const auto& s : autos) syms.push_back(s.describe());
    j["automorphisms"] = syms;
    j["class"] = gather_kind_name(cls.kind);
    if (cls.kind == GatherKind::ungatherable) j["reason"] = reason_name(cls.reason);
    return j.dump(2);
}

OracleReport oracle_report(const Configuration& c, std::size_t max_scan_nodes) {
    OracleReport r;
    r.vm = minmax_nodes_bruteforce(c.occupied_nodes(), max_scan_nodes);
    Rect box = mer(c);
    std::ostringstream os;
    auto robots = c.occupied_nodes();
    for (coord_t y = box.y_max + 2; y >= box.y_min - 2; --y) {
        for (coord_t x = box.x_min - 2; x <= box.x_max + 2; ++x) {
            coord_t worst = 0;
            for (const auto& p : robots) worst = std::max(worst, manhattan(p, GridNode{x, y}));
            os << worst << (x == box.x_max + 2 ? "" : " ");
        }
        os << '\n';
    }
    r.table = os.str();
    return r;
}

std::string OracleReport::text() const {
    std::ostringstream os;
    os << "bruteforce k: " << vm.k << "\n";
    os << "bruteforce minmax nodes (" << vm.nodes.size() << "):";
    for (const auto& m : vm.nodes) os << " (" << m.x << "," << m.y << ")";
    os << "\nmax-distance table (MER plus margin 2):\n" << table;
    return os.str();
}

} // namespace gridgather
