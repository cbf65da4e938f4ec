#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gridgather/config.hpp"
#include "gridgather/types.hpp"

namespace gridgather {

// Axis-aligned bounding rectangle. Side lengths are counted in grid edges;
// a() is the long side, b() the short one.
struct Rect {
    coord_t x_min = 0, x_max = 0, y_min = 0, y_max = 0;

    coord_t width() const { return x_max - x_min; }
    coord_t height() const { return y_max - y_min; }
    coord_t a() const { return width() > height() ? width() : height(); }
    coord_t b() const { return width() > height() ? height() : width(); }
    bool square() const { return width() == height(); }
    bool contains(GridNode p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
    auto operator<=>(const Rect&) const = default;
};

Rect mer(const std::vector<GridNode>& robots);
inline Rect mer(const Configuration& c) { return mer(c.occupied_nodes()); }
inline Rect mer(const WeakConfig& w) { return mer(occupied_of(w)); }

// L1 ball of radius k: the 45-degree square with side k*sqrt(2). The side
// length is never materialized; everything is done in Manhattan units.
struct Diamond {
    GridNode center;
    coord_t k = 0;

    bool contains(GridNode p) const { return manhattan(p, center) <= k; }
    bool on_perimeter(GridNode p) const { return manhattan(p, center) == k; }
    auto operator<=>(const Diamond&) const = default;
};

enum class BoundaryId : int { ur = 0, ul = 1, dl = 2, dr = 3 };
constexpr std::array<BoundaryId, 4> all_boundaries{BoundaryId::ur, BoundaryId::ul,
                                                   BoundaryId::dl, BoundaryId::dr};

// Perimeter nodes of d, exactly 4k of them for k >= 1 (empty for k == 0).
std::vector<GridNode> perimeter(const Diamond& d);

// Corner-inclusive quadrant membership: a perimeter node may belong to two
// boundaries (the four corners do).
bool on_boundary(const Diamond& d, BoundaryId b, GridNode p);

struct BoundarySet {
    std::array<std::vector<GridNode>, 4> sides; // indexed by BoundaryId
    std::array<GridNode, 4> corners;            // right, top, left, bottom

    const std::vector<GridNode>& side(BoundaryId b) const {
        return sides[static_cast<int>(b)];
    }
};

BoundarySet boundaries(const Diamond& d);

// Ring at distance k-1 from the center ({center} itself when k == 1).
std::vector<GridNode> co_boundary(const Diamond& d);

// Side of the co-boundary facing boundary b: the co-boundary nodes at
// distance 1 from some node of b.
std::vector<GridNode> co_boundary_side(const Diamond& d, BoundaryId b);
bool on_co_boundary_side(const Diamond& d, BoundaryId b, GridNode p);

// Smallest k such that some grid node is within Manhattan distance k of every
// robot. Closed form in rotated coordinates with a parity correction.
coord_t med_radius(const std::vector<GridNode>& robots);
inline coord_t med_radius(const Configuration& c) { return med_radius(c.occupied_nodes()); }

// All minimal enclosing diamonds, found by independent search: scan candidate
// centers over the expanded bounding box, keep the argmin of the enclosing
// radius. Centers come out sorted.
std::vector<Diamond> meds(const std::vector<GridNode>& robots);
inline std::vector<Diamond> meds(const Configuration& c) { return meds(c.occupied_nodes()); }

// Intersection of all minimal enclosing diamonds: a 45-degree rectangle,
// stored as a box in rotated coordinates. Grid nodes of the region are the
// parity-valid lattice points of the box.
struct Region {
    coord_t u_min = 0, u_max = 0, v_min = 0, v_max = 0;

    bool contains(GridNode p) const {
        RotatedCoord r = to_rotated(p);
        return r.u >= u_min && r.u <= u_max && r.v >= v_min && r.v <= v_max;
    }
    bool strictly_inside(GridNode p) const {
        RotatedCoord r = to_rotated(p);
        return r.u > u_min && r.u < u_max && r.v > v_min && r.v < v_max;
    }
    // 0 = on the (u == u_max) side, then counterclockwise. A node can sit on
    // several sides (corners).
    bool on_side(GridNode p, int which) const;

    std::size_t node_count_bound() const;
    // Enumerates the region's grid nodes; empty optional when the region
    // exceeds max_nodes.
    std::optional<std::vector<GridNode>> nodes(std::size_t max_nodes = 10000) const;
};

Region intersection_rectangle(const std::vector<GridNode>& robots);

// Bounding box of the robots in rotated coordinates. Coincides with the
// intersection rectangle except in parity-degenerate cases, where the
// intersection of the diamonds pokes one unit past the robots; the support
// box is the object whose preservation keeps the min-max set invariant, so
// the algorithm works with it.
Region support_box(const std::vector<GridNode>& robots);
inline Region intersection_rectangle(const Configuration& c) {
    return intersection_rectangle(c.occupied_nodes());
}
inline Region intersection_rectangle(const WeakConfig& w) {
    return intersection_rectangle(occupied_of(w));
}

inline bool is_interior(const std::vector<GridNode>& robots, GridNode v) {
    return intersection_rectangle(robots).strictly_inside(v);
}
inline bool is_interior(const Configuration& c, GridNode v) {
    return is_interior(c.occupied_nodes(), v);
}

} // namespace gridgather
