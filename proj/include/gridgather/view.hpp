#pragma once

#include <stdexcept>
#include <vector>

#include "gridgather/config.hpp"
#include "gridgather/geometry.hpp"
#include "gridgather/symmetry.hpp"

namespace gridgather {

// One corner scan of the MER: origin corner, outer direction (the side taken
// as x-axis), inner direction (the string direction), and the lambda digits
// in scan order. Degenerate sides have zero direction vectors and inner/outer
// extent 0.
struct CornerString {
    GridNode origin;
    GridNode xdir; // outer loop, along the long side
    GridNode ydir; // inner loop, the string direction
    coord_t x_len = 0;
    coord_t y_len = 0;
    std::vector<int> digits;

    bool operator>(const CornerString& o) const { return digits > o.digits; }
};

// 4 strings for a non-square MER (string direction forced to the short
// side), 8 for a square one (both directions per corner).
std::vector<CornerString> corner_strings(const WeakConfig& w);
inline std::vector<CornerString> corner_strings(const Configuration& c) {
    return corner_strings(c.weak());
}

struct AmbiguousKeyCorner : std::logic_error {
    AmbiguousKeyCorner() : std::logic_error("key corner is ambiguous (configuration is symmetric)") {}
};

// The unique lexicographically largest corner string. Throws
// AmbiguousKeyCorner exactly when the configuration is symmetric.
CornerString key_corner(const WeakConfig& w);

struct Frame {
    GridNode origin;
    GridNode xdir, ydir;
    coord_t x_len = 0, y_len = 0;

    // Scan rank of p from the key corner: outer coordinate times the inner
    // line length plus the inner coordinate.
    coord_t rank(GridNode p) const {
        coord_t i = (p.x - origin.x) * xdir.x + (p.y - origin.y) * xdir.y;
        coord_t j = (p.x - origin.x) * ydir.x + (p.y - origin.y) * ydir.y;
        return i * (y_len + 1) + j;
    }
};

Frame canonical_frame(const WeakConfig& w);

// View rank usable under symmetry: the sorted vector of scan ranks over every
// maximal corner string. Equal exactly on orbits of the automorphism group;
// a single-element vector for asymmetric configurations.
std::vector<coord_t> view_key(const WeakConfig& w, GridNode p);

// Ascending by view key; requires keys to be distinct on the given nodes
// (true for asymmetric configurations, and for orbit representatives).
std::vector<GridNode> order_nodes(const WeakConfig& w, std::vector<GridNode> nodes);

// Cached view machinery for one configuration, so repeated comparisons do not
// rebuild the corner strings.
class ViewOrder {
public:
    explicit ViewOrder(const WeakConfig& w);
    std::vector<coord_t> key(GridNode p) const;
    bool less(GridNode a, GridNode b) const { return key(a) < key(b); }
    bool ambiguous() const { return frames_.size() > 1; }

private:
    std::vector<Frame> frames_;
};

// Unique orientation of a node-type symmetry axis: the two
// scan directions along the axis are compared by the lambda string read off
// the axis line and then the parallel lines outward by distance; the larger
// string fixes the positive direction.
struct AxisOrder {
    GridNode base;     // a lattice point on the axis
    GridNode dir;      // positive unit step along the axis
    GridNode side;     // dir rotated +90 degrees: the positive side normal

    // Projection onto the axis direction (doubled for diagonal axes); used
    // only for ordering, so scale does not matter.
    coord_t t_of(GridNode p) const {
        return (p.x - base.x) * dir.x + (p.y - base.y) * dir.y;
    }
};

AxisOrder axis_order(const WeakConfig& w, const Isometry& axis);

// Nodes on the axis sorted along the positive direction. Throws when a node
// is off-axis.
std::vector<GridNode> order_axis_nodes(const WeakConfig& w, const Isometry& axis,
                                       std::vector<GridNode> nodes);

} // namespace gridgather
