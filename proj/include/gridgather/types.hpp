#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <cstdlib>

namespace gridgather {

// All coordinates are exact integers; nothing in the library touches floating
// point. Half-integer axes and rotation centers are stored doubled.
using coord_t = std::int64_t;

#ifndef NDEBUG
// Debug-build overflow guard: every coordinate that enters arithmetic stays
// far below the point where sums of four of them could wrap.
inline void check_coord(coord_t c) { assert(c < (coord_t(1) << 60) && c > -(coord_t(1) << 60)); }
#else
inline void check_coord(coord_t) {}
#endif

struct GridNode {
    coord_t x = 0;
    coord_t y = 0;
    auto operator<=>(const GridNode&) const = default;
};

// Image of a grid node under (x,y) -> (x+y, x-y). Manhattan distance becomes
// Chebyshev, which turns diamonds into axis-aligned boxes. Valid images
// satisfy u == v (mod 2).
struct RotatedCoord {
    coord_t u = 0;
    coord_t v = 0;
    auto operator<=>(const RotatedCoord&) const = default;
};

inline coord_t abs_c(coord_t a) { return a < 0 ? -a : a; }
inline int sign_c(coord_t a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

inline coord_t manhattan(GridNode a, GridNode b) {
    check_coord(a.x); check_coord(a.y); check_coord(b.x); check_coord(b.y);
    return abs_c(a.x - b.x) + abs_c(a.y - b.y);
}

inline coord_t chebyshev(RotatedCoord a, RotatedCoord b) {
    coord_t du = abs_c(a.u - b.u), dv = abs_c(a.v - b.v);
    return du > dv ? du : dv;
}

inline RotatedCoord to_rotated(GridNode p) {
    check_coord(p.x); check_coord(p.y);
    return RotatedCoord{p.x + p.y, p.x - p.y};
}

inline bool rotated_valid(RotatedCoord r) { return ((r.u - r.v) & 1) == 0; }

// Inverse of to_rotated. Rejects parity violations: (u,v) with u != v (mod 2)
// is not the image of any lattice point.
inline GridNode from_rotated(RotatedCoord r) {
    assert(rotated_valid(r));
    return GridNode{(r.u + r.v) / 2, (r.u - r.v) / 2};
}

inline GridNode offset(GridNode p, coord_t dx, coord_t dy) { return GridNode{p.x + dx, p.y + dy}; }

inline bool adjacent(GridNode a, GridNode b) { return manhattan(a, b) == 1; }

} // namespace gridgather
