#include "gridgather/minmax.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace gridgather {

const char* shape_name(GmShape s) {
    switch (s) {
        case GmShape::single_node: return "SingleNode";
        case GmShape::step_graph: return "StepGraph";
        case GmShape::disconnected_step_graph: return "DisconnectedStepGraph";
        case GmShape::four_cycle: return "FourCycle";
    }
    return "?";
}

MinMaxSet minmax_nodes(const std::vector<GridNode>& robots) {
    assert(!robots.empty());
    RotatedCoord r0 = to_rotated(robots[0]);
    coord_t u_min = r0.u, u_max = r0.u, v_min = r0.v, v_max = r0.v;
    for (const auto& p : robots) {
        RotatedCoord r = to_rotated(p);
        u_min = std::min(u_min, r.u);
        u_max = std::max(u_max, r.u);
        v_min = std::min(v_min, r.v);
        v_max = std::max(v_max, r.v);
    }
    coord_t k = med_radius(robots);
    MinMaxSet out;
    out.k = k;
    for (coord_t u = u_max - k; u <= u_min + k; ++u)
        for (coord_t v = v_max - k; v <= v_min + k; ++v)
            if (((u - v) & 1) == 0) out.nodes.push_back(from_rotated(RotatedCoord{u, v}));
    std::sort(out.nodes.begin(), out.nodes.end());
    assert(!out.nodes.empty());
    return out;
}

MinMaxSet minmax_nodes_bruteforce(const std::vector<GridNode>& robots,
                                  std::size_t max_scan_nodes) {
    assert(!robots.empty());
    Rect box = mer(robots);
    std::size_t scan = static_cast<std::size_t>(box.width() + 5) *
                       static_cast<std::size_t>(box.height() + 5);
    if (scan > max_scan_nodes)
        throw std::invalid_argument("minmax_nodes_bruteforce: scan bound exceeded");
    MinMaxSet out;
    coord_t best = -1;
    for (coord_t x = box.x_min - 2; x <= box.x_max + 2; ++x) {
        for (coord_t y = box.y_min - 2; y <= box.y_max + 2; ++y) {
            GridNode v{x, y};
            coord_t worst = 0;
            for (const auto& p : robots) worst = std::max(worst, manhattan(p, v));
            if (best < 0 || worst < best) {
                best = worst;
                out.nodes.clear();
            }
            if (worst == best) out.nodes.push_back(v);
        }
    }
    out.k = best;
    std::sort(out.nodes.begin(), out.nodes.end());
    return out;
}

namespace {

bool is_unit_square(std::vector<GridNode> n) {
    if (n.size() != 4) return false;
    std::sort(n.begin(), n.end());
    GridNode a = n[0];
    return n[1] == GridNode{a.x, a.y + 1} && n[2] == GridNode{a.x + 1, a.y} &&
           n[3] == GridNode{a.x + 1, a.y + 1};
}

bool diagonal_neighbor(GridNode a, GridNode b) {
    return abs_c(a.x - b.x) == 1 && abs_c(a.y - b.y) == 1;
}

} // namespace

GmShape classify_gm(const MinMaxSet& s) {
    const auto& n = s.nodes;
    if (n.empty()) throw CharacterizationViolation("empty min-max set");
    if (n.size() == 1) return GmShape::single_node;
    if (is_unit_square(n)) return GmShape::four_cycle;

    // Grid-adjacency degree of every node.
    std::set<GridNode> in_set(n.begin(), n.end());
    auto degree = [&](GridNode p) {
        int d = 0;
        for (auto q : {offset(p, 1, 0), offset(p, -1, 0), offset(p, 0, 1), offset(p, 0, -1)})
            if (in_set.count(q)) ++d;
        return d;
    };

    bool any_adjacent = false;
    for (std::size_t i = 0; i < n.size(); ++i)
        if (degree(n[i]) > 0) any_adjacent = true;

    if (any_adjacent) {
        // Candidate step graph: a connected path whose consecutive triples sit
        // on three corners of a unit square (no straight triples).
        int endpoints = 0;
        for (const auto& p : n) {
            int d = degree(p);
            if (d == 1) ++endpoints;
            else if (d != 2) throw CharacterizationViolation("node degree not in {1,2}");
        }
        if (endpoints != 2) throw CharacterizationViolation("path endpoints != 2");
        auto path = chain_order(s);
        if (path.size() != n.size()) throw CharacterizationViolation("adjacency graph not connected");
        for (std::size_t i = 2; i < path.size(); ++i) {
            GridNode a = path[i - 2], b = path[i - 1], c = path[i];
            if (a.x == b.x && b.x == c.x) throw CharacterizationViolation("straight triple");
            if (a.y == b.y && b.y == c.y) throw CharacterizationViolation("straight triple");
        }
        return GmShape::step_graph;
    }

    // Disconnected step graph: no shared grid lines and 1..2 diagonal
    // neighbors per node.
    for (std::size_t i = 0; i < n.size(); ++i) {
        int diag = 0;
        for (std::size_t j = 0; j < n.size(); ++j) {
            if (i == j) continue;
            if (n[i].x == n[j].x || n[i].y == n[j].y)
                throw CharacterizationViolation("isolated nodes sharing a grid line");
            if (diagonal_neighbor(n[i], n[j])) ++diag;
        }
        if (diag < 1 || diag > 2)
            throw CharacterizationViolation("diagonal degree not in {1,2}");
    }
    return GmShape::disconnected_step_graph;
}

std::vector<GridNode> chain_order(const MinMaxSet& s) {
    const auto& n = s.nodes;
    if (n.size() <= 1) return n;
    if (is_unit_square(n)) return n;

    std::set<GridNode> in_set(n.begin(), n.end());
    bool any_adjacent = false;
    for (std::size_t i = 0; i + 1 < n.size() && !any_adjacent; ++i)
        for (std::size_t j = i + 1; j < n.size() && !any_adjacent; ++j)
            if (adjacent(n[i], n[j])) any_adjacent = true;

    auto neighbors = [&](GridNode p) {
        std::vector<GridNode> out;
        if (any_adjacent) {
            for (auto q : {offset(p, 1, 0), offset(p, -1, 0), offset(p, 0, 1), offset(p, 0, -1)})
                if (in_set.count(q)) out.push_back(q);
        } else {
            for (auto q : {offset(p, 1, 1), offset(p, 1, -1), offset(p, -1, 1), offset(p, -1, -1)})
                if (in_set.count(q)) out.push_back(q);
        }
        return out;
    };

    std::vector<GridNode> endpoints;
    for (const auto& p : n)
        if (neighbors(p).size() == 1) endpoints.push_back(p);
    if (endpoints.empty()) return n; // not a path; caller will reject
    GridNode start = *std::min_element(endpoints.begin(), endpoints.end());

    std::vector<GridNode> path{start};
    std::set<GridNode> seen{start};
    while (true) {
        bool advanced = false;
        for (const auto& q : neighbors(path.back())) {
            if (!seen.count(q)) {
                path.push_back(q);
                seen.insert(q);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return path;
}

std::vector<GridNode> central_nodes(const MinMaxSet& s) {
    auto path = chain_order(s);
    if (path.empty()) return {};
    std::size_t m = path.size();
    if (m % 2 == 1) return {path[m / 2]};
    std::vector<GridNode> out{path[m / 2 - 1], path[m / 2]};
    std::sort(out.begin(), out.end());
    return out;
}

coord_t centrality(const std::vector<GridNode>& occupied, GridNode v) {
    coord_t sum = 0;
    for (const auto& p : occupied) sum += manhattan(p, v);
    return sum;
}

std::vector<GridNode> weber_minmax(const std::vector<GridNode>& occupied, const MinMaxSet& s) {
    std::vector<GridNode> out;
    coord_t best = -1;
    for (const auto& m : s.nodes) {
        coord_t c = centrality(occupied, m);
        if (best < 0 || c < best) {
            best = c;
            out.clear();
        }
        if (c == best) out.push_back(m);
    }
    return out;
}

BoundaryCondition boundary_condition(const std::vector<GridNode>& occupied, const Diamond& d) {
    for (const auto& p : occupied)
        if (!d.contains(p)) throw std::invalid_argument("boundary_condition: not an enclosing diamond");
    if (d.k != med_radius(occupied))
        throw std::invalid_argument("boundary_condition: diamond is not minimal");

    BoundaryCondition bc;
    for (auto b : all_boundaries) {
        int i = static_cast<int>(b);
        for (const auto& p : occupied) {
            if (on_boundary(d, b, p)) bc.occupied[i] = true;
            if (on_co_boundary_side(d, b, p)) bc.side_occupied[i] = true;
        }
    }
    int occ = 0;
    for (bool o : bc.occupied) occ += o ? 1 : 0;

    if (occ == 4) {
        bc.kind = BoundaryConditionKind::c1_all_four;
    } else if (occ == 3) {
        for (auto b : all_boundaries)
            if (!bc.occupied[static_cast<int>(b)]) bc.empty_boundary = b;
        if (bc.side_occupied[static_cast<int>(*bc.empty_boundary)])
            bc.kind = BoundaryConditionKind::c2_three_plus_near;
    } else if (occ == 2) {
        bool ur = bc.occupied[0], ul = bc.occupied[1], dl = bc.occupied[2], dr = bc.occupied[3];
        bool opposite = (ur && dl && !ul && !dr) || (ul && dr && !ur && !dl);
        if (opposite) {
            auto e1 = ur ? BoundaryId::ul : BoundaryId::ur;
            auto e2 = ur ? BoundaryId::dr : BoundaryId::dl;
            bc.empty_pair = {e1, e2};
            if (bc.side_occupied[static_cast<int>(e1)] && bc.side_occupied[static_cast<int>(e2)])
                bc.kind = BoundaryConditionKind::c3_two_opposite_plus_near;
        }
    }
    return bc;
}

} // namespace gridgather
