#include "gridgather/view.hpp"

#include <algorithm>

namespace gridgather {

namespace {

int digit(const WeakConfig& w, GridNode p) { return static_cast<int>(lambda_of(w, p)); }

CornerString scan(const WeakConfig& w, GridNode origin, GridNode xd, coord_t xl, GridNode yd,
                  coord_t yl) {
    CornerString s;
    s.origin = origin;
    s.xdir = xd;
    s.ydir = yd;
    s.x_len = xl;
    s.y_len = yl;
    s.digits.reserve(static_cast<std::size_t>((xl + 1) * (yl + 1)));
    for (coord_t i = 0; i <= xl; ++i)
        for (coord_t j = 0; j <= yl; ++j)
            s.digits.push_back(
                digit(w, GridNode{origin.x + i * xd.x + j * yd.x, origin.y + i * xd.y + j * yd.y}));
    return s;
}

} // namespace

std::vector<CornerString> corner_strings(const WeakConfig& w) {
    Rect box = mer(w);
    coord_t wdt = box.width(), hgt = box.height();

    std::vector<CornerString> out;
    for (coord_t cx : {box.x_min, box.x_max}) {
        for (coord_t cy : {box.y_min, box.y_max}) {
            GridNode corner{cx, cy};
            GridNode hd{cx == box.x_min ? 1 : -1, 0};
            GridNode vd{0, cy == box.y_min ? 1 : -1};
            if (wdt == 0) hd = GridNode{0, 0};
            if (hgt == 0) vd = GridNode{0, 0};
            if (wdt == hgt) {
                out.push_back(scan(w, corner, hd, wdt, vd, hgt));
                out.push_back(scan(w, corner, vd, hgt, hd, wdt));
            } else if (wdt > hgt) {
                // long side horizontal; string direction is the short side
                out.push_back(scan(w, corner, hd, wdt, vd, hgt));
            } else {
                out.push_back(scan(w, corner, vd, hgt, hd, wdt));
            }
        }
    }
    return out;
}

namespace {

std::vector<const CornerString*> maximal_strings(const std::vector<CornerString>& all) {
    const std::vector<int>* best = nullptr;
    for (const auto& s : all)
        if (!best || s.digits > *best) best = &s.digits;
    std::vector<const CornerString*> out;
    for (const auto& s : all)
        if (s.digits == *best) out.push_back(&s);
    return out;
}

} // namespace

CornerString key_corner(const WeakConfig& w) {
    auto all = corner_strings(w);
    auto best = maximal_strings(all);
    // Two frames can coincide geometrically only on a single-node MER, where
    // both scans are the same trivial string.
    if (best.size() > 1) {
        bool all_same = true;
        for (const auto* s : best)
            all_same = all_same && s->origin == best[0]->origin && s->digits.size() == 1;
        if (!all_same) throw AmbiguousKeyCorner();
    }
    return *best[0];
}

Frame canonical_frame(const WeakConfig& w) {
    CornerString k = key_corner(w);
    return Frame{k.origin, k.xdir, k.ydir, k.x_len, k.y_len};
}

ViewOrder::ViewOrder(const WeakConfig& w) {
    auto all = corner_strings(w);
    for (const auto* s : maximal_strings(all))
        frames_.push_back(Frame{s->origin, s->xdir, s->ydir, s->x_len, s->y_len});
}

std::vector<coord_t> ViewOrder::key(GridNode p) const {
    std::vector<coord_t> out;
    out.reserve(frames_.size());
    for (const auto& f : frames_) out.push_back(f.rank(p));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<coord_t> view_key(const WeakConfig& w, GridNode p) { return ViewOrder(w).key(p); }

std::vector<GridNode> order_nodes(const WeakConfig& w, std::vector<GridNode> nodes) {
    ViewOrder vo(w);
    std::sort(nodes.begin(), nodes.end(), [&](GridNode a, GridNode b) {
        auto ka = vo.key(a), kb = vo.key(b);
        if (ka != kb) return ka < kb;
        return a < b;
    });
    return nodes;
}

namespace {

struct AxisGeom {
    GridNode base; // lattice point on the axis
    GridNode dir;  // unit step along the axis
    GridNode perp; // lattice step between neighbouring parallel lines
};

AxisGeom axis_geom(const Isometry& axis) {
    switch (axis.kind) {
        case IsoKind::reflect_v:
            assert((axis.ax2 & 1) == 0);
            return {GridNode{axis.ax2 / 2, 0}, GridNode{0, 1}, GridNode{1, 0}};
        case IsoKind::reflect_h:
            assert((axis.ax2 & 1) == 0);
            return {GridNode{0, axis.ax2 / 2}, GridNode{1, 0}, GridNode{0, 1}};
        case IsoKind::reflect_d_main:
            return {GridNode{0, axis.ax2 / 2}, GridNode{1, 1}, GridNode{0, -1}};
        case IsoKind::reflect_d_anti:
            return {GridNode{axis.ax2 / 2, 0}, GridNode{1, -1}, GridNode{0, 1}};
        default: assert(false && "axis_order needs a reflection"); return {};
    }
}

} // namespace

AxisOrder axis_order(const WeakConfig& w, const Isometry& axis) {
    AxisGeom g = axis_geom(axis);

    // p = base + t*dir + h*perp; (dir, perp) is a lattice basis per axis kind.
    auto decompose = [&](GridNode p) {
        coord_t t = 0, h = 0;
        switch (axis.kind) {
            case IsoKind::reflect_v: t = p.y; h = p.x - g.base.x; break;
            case IsoKind::reflect_h: t = p.x; h = p.y - g.base.y; break;
            case IsoKind::reflect_d_main: t = p.x; h = p.x - p.y + g.base.y; break;
            case IsoKind::reflect_d_anti: t = p.x - g.base.x; h = p.y + p.x - g.base.x; break;
            default: break;
        }
        return std::pair<coord_t, coord_t>{t, h};
    };

    coord_t t_lo = 0, t_hi = 0, h_max = 0;
    bool first = true;
    for (const auto& e : w) {
        auto [t, h] = decompose(e.pos);
        if (first) { t_lo = t_hi = t; first = false; }
        t_lo = std::min(t_lo, t);
        t_hi = std::max(t_hi, t);
        h_max = std::max(h_max, abs_c(h));
    }

    auto read = [&](bool forward) {
        std::vector<int> s;
        for (coord_t h = 0; h <= h_max; ++h) {
            for (coord_t n = 0; n <= t_hi - t_lo; ++n) {
                coord_t t = forward ? t_lo + n : t_hi - n;
                GridNode p{g.base.x + t * g.dir.x + h * g.perp.x,
                           g.base.y + t * g.dir.y + h * g.perp.y};
                s.push_back(digit(w, p));
            }
        }
        return s;
    };

    GridNode dir = g.dir;
    if (read(false) > read(true)) dir = GridNode{-g.dir.x, -g.dir.y};
    return AxisOrder{g.base, dir, GridNode{-dir.y, dir.x}};
}

std::vector<GridNode> order_axis_nodes(const WeakConfig& w, const Isometry& axis,
                                       std::vector<GridNode> nodes) {
    AxisOrder ord = axis_order(w, axis);
    for (const auto& p : nodes) {
        GridNode image = axis.apply(p);
        if (image != p) throw std::invalid_argument("order_axis_nodes: node off the axis");
    }
    std::sort(nodes.begin(), nodes.end(),
              [&](GridNode a, GridNode b) { return ord.t_of(a) < ord.t_of(b); });
    return nodes;
}

} // namespace gridgather
