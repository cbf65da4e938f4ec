#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gridgather/geometry.hpp"

namespace gridgather {

// V_M(R): the nodes minimizing the maximum Manhattan distance to any robot,
// together with that optimal distance k.
struct MinMaxSet {
    std::vector<GridNode> nodes; // sorted
    coord_t k = 0;

    bool contains(GridNode p) const {
        return std::binary_search(nodes.begin(), nodes.end(), p);
    }
};

enum class GmShape : int { single_node = 0, step_graph = 1, disconnected_step_graph = 2, four_cycle = 3 };

const char* shape_name(GmShape s);

// Thrown by classify_gm when the node set fits none of the admissible
// shapes; seeing it fire means the computation of the set is wrong, never
// that a new shape exists.
struct CharacterizationViolation : std::logic_error {
    explicit CharacterizationViolation(const std::string& what) : std::logic_error(what) {}
};

MinMaxSet minmax_nodes(const std::vector<GridNode>& robots);
inline MinMaxSet minmax_nodes(const Configuration& c) { return minmax_nodes(c.occupied_nodes()); }
inline MinMaxSet minmax_nodes(const WeakConfig& w) { return minmax_nodes(occupied_of(w)); }

// Independent oracle: scans every node of the MER expanded by margin 2 and
// takes the argmin of the max distance. Optima can never lie outside the MER
// (stepping away from it increases the distance to the far side), so the
// margin is slack the tests assert is never touched.
MinMaxSet minmax_nodes_bruteforce(const std::vector<GridNode>& robots,
                                  std::size_t max_scan_nodes = 4000000);
inline MinMaxSet minmax_nodes_bruteforce(const Configuration& c) {
    return minmax_nodes_bruteforce(c.occupied_nodes());
}

GmShape classify_gm(const MinMaxSet& s);

// The min-max chain in path order (step graphs under grid adjacency,
// disconnected step graphs under diagonal adjacency); endpoints chosen so the
// first node is the lexicographically smaller endpoint. Four-cycles and
// singletons come back in sorted order.
std::vector<GridNode> chain_order(const MinMaxSet& s);

// Central node(s) of the chain: one for odd length, two for even.
std::vector<GridNode> central_nodes(const MinMaxSet& s);

// Sum of Manhattan distances from v to every occupied node; multiplicities
// count once (weak detection).
coord_t centrality(const std::vector<GridNode>& occupied, GridNode v);
inline coord_t centrality(const Configuration& c, GridNode v) {
    return centrality(c.occupied_nodes(), v);
}
inline coord_t centrality(const WeakConfig& w, GridNode v) {
    return centrality(occupied_of(w), v);
}

// Argmin-of-centrality subset of the min-max set. Ties are kept: downstream
// target selection resolves them.
std::vector<GridNode> weber_minmax(const std::vector<GridNode>& occupied, const MinMaxSet& s);
inline std::vector<GridNode> weber_minmax(const Configuration& c, const MinMaxSet& s) {
    return weber_minmax(c.occupied_nodes(), s);
}

enum class BoundaryConditionKind : int { c1_all_four = 1, c2_three_plus_near = 2, c3_two_opposite_plus_near = 3, other = 0 };

struct BoundaryCondition {
    BoundaryConditionKind kind = BoundaryConditionKind::other;
    std::array<bool, 4> occupied{};       // by BoundaryId
    std::array<bool, 4> side_occupied{};  // co-boundary side by BoundaryId
    std::optional<BoundaryId> empty_boundary;              // C2
    std::optional<std::pair<BoundaryId, BoundaryId>> empty_pair; // C3
};

// Detects C1/C2/C3 on a minimal enclosing diamond of the configuration.
// Requires d to actually be one (center within distance k of every robot,
// k == med_radius).
BoundaryCondition boundary_condition(const std::vector<GridNode>& occupied, const Diamond& d);
inline BoundaryCondition boundary_condition(const Configuration& c, const Diamond& d) {
    return boundary_condition(c.occupied_nodes(), d);
}

} // namespace gridgather
