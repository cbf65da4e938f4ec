#include "gridgather/algorithm.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace gridgather {

const char* phase_name(AlgoPhase p) {
    switch (p) {
        case AlgoPhase::creating_multiplicity: return "CreatingMultiplicity";
        case AlgoPhase::finalization: return "Finalization";
        case AlgoPhase::done: return "Done";
        case AlgoPhase::refuse: return "Refuse";
    }
    return "?";
}

const char* rule_name(MoveRule r) {
    switch (r) {
        case MoveRule::none: return "none";
        case MoveRule::toward_target: return "toward_target";
        case MoveRule::aligned_approach: return "aligned_approach";
        case MoveRule::axis_walk: return "axis_walk";
        case MoveRule::axis_sidestep: return "axis_sidestep";
        case MoveRule::boundary_entry: return "boundary_entry";
        case MoveRule::symmetry_break: return "symmetry_break";
        case MoveRule::finalize: return "finalize";
    }
    return "?";
}

namespace {

bool occupied_at(const WeakConfig& w, GridNode p) { return lambda_of(w, p) != Occupancy::empty; }

coord_t cross(GridNode a, GridNode b) { return a.x * b.y - a.y * b.x; }

// Doubled perpendicular distance from p to a reflection axis.
coord_t axis_dist2(const Isometry& axis, GridNode p) {
    switch (axis.kind) {
        case IsoKind::reflect_v: return abs_c(2 * p.x - axis.ax2);
        case IsoKind::reflect_h: return abs_c(2 * p.y - axis.ax2);
        case IsoKind::reflect_d_main: return abs_c(2 * (p.y - p.x) - axis.ax2);
        case IsoKind::reflect_d_anti: return abs_c(2 * (p.x + p.y) - axis.ax2);
        default: return 0;
    }
}

bool on_axis(const Isometry& axis, GridNode p) { return axis.apply(p) == p; }

// Working state shared by the planners for one configuration.
struct Ctx {
    const WeakConfig& w;
    std::vector<GridNode> occ;
    MinMaxSet vm;
    ViewOrder view;

    explicit Ctx(const WeakConfig& cfg)
        : w(cfg), occ(occupied_of(cfg)), vm(minmax_nodes(occ)), view(cfg) {}
};

using SelKey = std::pair<std::vector<coord_t>, std::vector<coord_t>>;

// argmin over positions by (numeric key parts, view key); deterministic and
// isometry-equivariant because both parts are.
std::optional<GridNode> argmin_pos(const Ctx& c, const std::vector<GridNode>& pool,
                                   const std::function<std::vector<coord_t>(GridNode)>& num) {
    std::optional<GridNode> best;
    SelKey best_key;
    for (const auto& p : pool) {
        SelKey k{num(p), c.view.key(p)};
        if (!best || k < best_key) {
            best = p;
            best_key = k;
        }
    }
    return best;
}

std::vector<GridNode> step_candidates(GridNode from, GridNode to) {
    std::vector<GridNode> out;
    if (from.x != to.x) out.push_back(GridNode{from.x + sign_c(to.x - from.x), from.y});
    if (from.y != to.y) out.push_back(GridNode{from.x, from.y + sign_c(to.y - from.y)});
    return out;
}

enum class TieRule { view, ccw, lex };

// One shortest step toward target; larger coordinate gap first, configurable
// tie rule, occupied destinations other than the target skipped.
GridNode step_plain(const Ctx& c, GridNode from, GridNode target, TieRule tie, bool& flagged) {
    auto cands = step_candidates(from, target);
    if (cands.empty()) return from;
    if (cands.size() == 2) {
        coord_t dx = abs_c(target.x - from.x), dy = abs_c(target.y - from.y);
        bool x_first;
        if (dx != dy) {
            x_first = dx > dy;
        } else if (tie == TieRule::view) {
            x_first = c.view.key(cands[0]) < c.view.key(cands[1]);
        } else if (tie == TieRule::ccw) {
            GridNode r{from.x - target.x, from.y - target.y};
            GridNode s{cands[0].x - target.x, cands[0].y - target.y};
            x_first = cross(r, s) > 0;
        } else {
            x_first = cands[0] < cands[1];
        }
        if (!x_first) std::swap(cands[0], cands[1]);
    }
    for (const auto& d : cands)
        if (d == target || !occupied_at(c.w, d)) return d;
    flagged = true;
    return from;
}

// Pair stepper under a reflection axis with the target on the axis: align
// onto the grid line through the target first, then walk it in. Mirror
// partners end up on mirrored approach lines that meet only at the target.
GridNode step_aligned(const Ctx& c, GridNode from, GridNode target, const Isometry& axis,
                      const AxisOrder& ord, bool& flagged, MoveRule& rule) {
    coord_t dx = target.x - from.x, dy = target.y - from.y;
    rule = MoveRule::aligned_approach;
    if (on_axis(axis, from)) {
        bool diagonal =
            axis.kind == IsoKind::reflect_d_main || axis.kind == IsoKind::reflect_d_anti;
        rule = diagonal ? MoveRule::axis_sidestep : MoveRule::axis_walk;
        return step_plain(c, from, target, TieRule::lex, flagged);
    }
    std::vector<GridNode> order; // preferred candidate first
    auto pref_x = GridNode{from.x + sign_c(dx), from.y};
    auto pref_y = GridNode{from.x, from.y + sign_c(dy)};
    switch (axis.kind) {
        case IsoKind::reflect_v:
            // reduce the along-axis gap first, approach along L_H(target)
            if (dy != 0) order = {pref_y, pref_x};
            else order = {pref_x};
            break;
        case IsoKind::reflect_h:
            if (dx != 0) order = {pref_x, pref_y};
            else order = {pref_y};
            break;
        default: {
            // diagonal axis: close the smaller gap first; ties resolved
            // toward the axis-positive side
            if (dx == 0) order = {pref_y};
            else if (dy == 0) order = {pref_x};
            else if (abs_c(dx) < abs_c(dy)) order = {pref_x, pref_y};
            else if (abs_c(dy) < abs_c(dx)) order = {pref_y, pref_x};
            else {
                coord_t tx = ord.t_of(pref_x), ty = ord.t_of(pref_y);
                order = tx > ty ? std::vector<GridNode>{pref_x, pref_y}
                                : std::vector<GridNode>{pref_y, pref_x};
            }
            break;
        }
    }
    for (const auto& d : order)
        if (d == target || !occupied_at(c.w, d)) return d;
    flagged = true;
    return from;
}

// Weak configuration after moving the given robots one step (creating phase:
// all labels single).
WeakConfig after_moves(const WeakConfig& w, const std::vector<std::pair<GridNode, GridNode>>& mv) {
    std::map<GridNode, int> cnt;
    for (const auto& e : w) cnt[e.pos] = e.label == Occupancy::multiple ? 2 : 1;
    for (const auto& [from, to] : mv) {
        auto it = cnt.find(from);
        if (it != cnt.end() && --it->second == 0) cnt.erase(it);
        cnt[to] += 1;
    }
    WeakConfig out;
    for (const auto& [p, k] : cnt)
        out.push_back(LabeledNode{p, k >= 2 ? Occupancy::multiple : Occupancy::single});
    return out;
}

bool vm_preserved(const Ctx& c, const std::vector<std::pair<GridNode, GridNode>>& mv) {
    WeakConfig moved = after_moves(c.w, mv);
    MinMaxSet nv = minmax_nodes(moved);
    return nv.k == c.vm.k && nv.nodes == c.vm.nodes;
}

bool support_preserved(const Ctx& c, const std::vector<std::pair<GridNode, GridNode>>& mv) {
    Region before = support_box(c.occ);
    Region after = support_box(occupied_of(after_moves(c.w, mv)));
    return before.u_min == after.u_min && before.u_max == after.u_max &&
           before.v_min == after.v_min && before.v_max == after.v_max;
}

bool stays_asymmetric(const Ctx& c, const std::vector<std::pair<GridNode, GridNode>>& mv) {
    return automorphisms(after_moves(c.w, mv)).empty();
}

std::vector<GridNode> interior_positions(const Ctx& c, const Region& ir) {
    std::vector<GridNode> out;
    for (const auto& p : c.occ)
        if (ir.strictly_inside(p)) out.push_back(p);
    return out;
}

std::vector<GridNode> without(std::vector<GridNode> v, GridNode p) {
    v.erase(std::remove(v.begin(), v.end(), p), v.end());
    return v;
}

std::vector<coord_t> dist_key(GridNode p, GridNode m) { return {manhattan(p, m)}; }

// ---------------------------------------------------------------- movable

int movable_clause(const Ctx& c, GridNode pos, const Diamond& med, const BoundaryCondition& bc) {
    coord_t d = manhattan(pos, med.center);
    if (d > med.k) return 0;
    bool interior = d < med.k;

    auto max_view_among = [&](const std::vector<GridNode>& group) {
        // true iff pos has the maximum view key within the group
        for (const auto& q : group)
            if (q != pos && c.view.key(q) > c.view.key(pos)) return false;
        return true;
    };
    auto robots_on_boundary = [&](BoundaryId b) {
        std::vector<GridNode> out;
        for (const auto& p : c.occ)
            if (on_boundary(med, b, p)) out.push_back(p);
        return out;
    };
    auto robots_on_side = [&](BoundaryId b) {
        std::vector<GridNode> out;
        for (const auto& p : c.occ)
            if (on_co_boundary_side(med, b, p)) out.push_back(p);
        return out;
    };

    if (bc.kind == BoundaryConditionKind::c1_all_four) {
        if (interior) return 1;
        // boundary robot: movable unless it holds the max view on some
        // boundary through it
        for (auto b : all_boundaries)
            if (on_boundary(med, b, pos) && max_view_among(robots_on_boundary(b))) return 0;
        return 2;
    }

    bool on_cb = d == med.k - 1;
    auto empty_sides = [&]() {
        std::vector<BoundaryId> out;
        if (bc.empty_boundary) out.push_back(*bc.empty_boundary);
        if (bc.empty_pair) {
            out.push_back(bc.empty_pair->first);
            out.push_back(bc.empty_pair->second);
        }
        return out;
    }();

    if (bc.kind == BoundaryConditionKind::c2_three_plus_near ||
        bc.kind == BoundaryConditionKind::c3_two_opposite_plus_near) {
        if (interior && !on_cb) return 1;
        if (on_cb) {
            // a witness on the side facing an empty boundary must stay unless
            // another robot on that side outranks it
            for (auto b : empty_sides)
                if (on_co_boundary_side(med, b, pos) && max_view_among(robots_on_side(b)))
                    return 0;
            for (auto b : all_boundaries)
                if (bc.occupied[static_cast<int>(b)] && on_co_boundary_side(med, b, pos)) return 2;
            for (auto b : empty_sides)
                if (on_co_boundary_side(med, b, pos)) return 3;
            return 0;
        }
        // boundary robot
        for (auto b : all_boundaries)
            if (on_boundary(med, b, pos) && bc.occupied[static_cast<int>(b)] &&
                max_view_among(robots_on_boundary(b)))
                return 0;
        return 4;
    }
    return 0;
}

// ------------------------------------------------------------ finalization

// Weber nodes over the whole grid form the product of the coordinate median
// intervals of the occupied nodes.
std::vector<GridNode> weber_box(const std::vector<GridNode>& occ) {
    std::vector<coord_t> xs, ys;
    for (const auto& p : occ) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    std::size_t n = xs.size();
    coord_t x_lo = xs[(n - 1) / 2], x_hi = xs[n / 2];
    coord_t y_lo = ys[(n - 1) / 2], y_hi = ys[n / 2];
    std::vector<GridNode> out;
    for (coord_t x = x_lo; x <= x_hi; ++x)
        for (coord_t y = y_lo; y <= y_hi; ++y) out.push_back(GridNode{x, y});
    return out;
}

void plan_finalization(Plan& P, const Ctx& c) {
    P.phase = AlgoPhase::finalization;

    std::vector<GridNode> multiples;
    for (const auto& e : c.w)
        if (e.label == Occupancy::multiple) multiples.push_back(e.pos);

    GridNode m;
    if (multiples.size() == 1) {
        m = multiples[0];
    } else {
        // Several multiplicities can only arise from rotational runs, where
        // the gathering point is the unique Weber node.
        auto wb = weber_box(c.occ);
        if (wb.size() == 1) {
            m = wb[0];
        } else {
            std::vector<GridNode> both;
            for (const auto& p : multiples)
                if (std::find(wb.begin(), wb.end(), p) != wb.end()) both.push_back(p);
            m = !both.empty() ? both[0] : wb[0];
            P.flagged = true;
            P.note = "finalization: non-unique weber node";
        }
    }
    P.target = m;

    auto autos = automorphisms(c.w);
    std::vector<Isometry> reflections, rotations;
    for (const auto& iso : autos)
        (iso.is_reflection() ? reflections : rotations).push_back(iso);

    Region ir = support_box(c.occ);
    std::vector<GridNode> interior = without(interior_positions(c, ir), m);
    std::vector<GridNode> rest = without(c.occ, m);
    if (rest.empty()) return;

    bool flagged = false;
    if (!rotations.empty()) {
        // closest orbit moves; ties within the orbit share the key
        auto best = argmin_pos(c, rest, [&](GridNode p) { return dist_key(p, m); });
        SelKey bk{dist_key(*best, m), c.view.key(*best)};
        for (const auto& p : rest) {
            if (SelKey{dist_key(p, m), c.view.key(p)} == bk)
                P.movers.push_back(
                    {p, step_plain(c, p, m, TieRule::ccw, flagged), MoveRule::finalize});
        }
    } else if (reflections.size() == 1 && on_axis(reflections[0], m)) {
        const auto& axis = reflections[0];
        AxisOrder ord = axis_order(c.w, axis);
        const auto& pool = !interior.empty() ? interior : rest;
        auto best = argmin_pos(c, pool, [&](GridNode p) { return dist_key(p, m); });
        GridNode r = *best, rm = axis.apply(*best);
        MoveRule rule = MoveRule::finalize;
        GridNode d1 = step_aligned(c, r, m, axis, ord, flagged, rule);
        P.movers.push_back({r, d1, rule});
        if (rm != r) {
            GridNode d2 = step_aligned(c, rm, m, axis, ord, flagged, rule);
            P.movers.push_back({rm, d2, rule});
        }
    } else {
        const auto& pool = (c.vm.nodes.size() >= 2 && !interior.empty()) ? interior : rest;
        auto best = argmin_pos(c, pool, [&](GridNode p) { return dist_key(p, m); });
        P.movers.push_back(
            {*best, step_plain(c, *best, m, TieRule::view, flagged), MoveRule::finalize});
    }
    P.flagged = P.flagged || flagged;
}

// --------------------------------------------------------- target selection

GridNode tie_break_pair(const Ctx& c, GridNode a, GridNode b,
                        const std::optional<Isometry>& axis, bool& resolved) {
    resolved = true;
    coord_t ca = centrality(c.occ, a), cb = centrality(c.occ, b);
    if (ca != cb) return ca < cb ? a : b;
    auto closest = [&](GridNode mm) {
        coord_t best = -1;
        for (const auto& p : c.occ) {
            coord_t d = manhattan(p, mm);
            if (best < 0 || d < best) best = d;
        }
        return best;
    };
    coord_t da = closest(a), db = closest(b);
    if (da != db) return da < db ? a : b;
    if (axis) {
        if (on_axis(*axis, a) && on_axis(*axis, b)) {
            AxisOrder ord = axis_order(c.w, *axis);
            return ord.t_of(a) < ord.t_of(b) ? a : b;
        }
        resolved = false; // mirror pair off the axis: indistinguishable
        return a;
    }
    auto ka = c.view.key(a), kb = c.view.key(b);
    return ka < kb ? a : b;
}

GridNode four_cycle_target(const Ctx& c, const std::vector<GridNode>& cands,
                           const std::optional<Isometry>& axis, bool& resolved) {
    resolved = true;
    MinMaxSet sub{cands, c.vm.k};
    std::vector<GridNode> webers = weber_minmax(c.occ, sub);
    if (webers.size() == 1) return webers[0];
    auto closest = [&](GridNode mm) {
        coord_t best = -1;
        for (const auto& p : c.occ) {
            coord_t d = manhattan(p, mm);
            if (best < 0 || d < best) best = d;
        }
        return best;
    };
    coord_t bestd = -1;
    std::vector<GridNode> near;
    for (const auto& mm : webers) {
        coord_t d = closest(mm);
        if (bestd < 0 || d < bestd) {
            bestd = d;
            near.clear();
        }
        if (d == bestd) near.push_back(mm);
    }
    if (near.size() == 1) return near[0];
    if (axis) {
        std::vector<GridNode> on_l;
        for (const auto& mm : near)
            if (on_axis(*axis, mm)) on_l.push_back(mm);
        if (!on_l.empty()) {
            AxisOrder ord = axis_order(c.w, *axis);
            return *std::min_element(on_l.begin(), on_l.end(), [&](GridNode x, GridNode y) {
                return ord.t_of(x) < ord.t_of(y);
            });
        }
        resolved = false;
        return near[0];
    }
    return *std::min_element(near.begin(), near.end(), [&](GridNode x, GridNode y) {
        auto kx = c.view.key(x), ky = c.view.key(y);
        if (kx != ky) return kx < ky;
        return x < y;
    });
}

std::optional<GridNode> creating_target(const Ctx& c, const GatherClass& cls) {
    switch (cls.kind) {
        case GatherKind::i1: return c.vm.nodes[0];
        case GatherKind::i4: {
            assert((cls.rotation->ax2 & 1) == 0 && (cls.rotation->ay2 & 1) == 0);
            return GridNode{cls.rotation->ax2 / 2, cls.rotation->ay2 / 2};
        }
        case GatherKind::i2:
        case GatherKind::i3: {
            std::optional<Isometry> axis = cls.axis;
            GmShape shape = classify_gm(c.vm);
            bool resolved = true;
            GridNode t;
            if (shape == GmShape::four_cycle) {
                std::vector<GridNode> cands = c.vm.nodes;
                if (axis) {
                    std::vector<GridNode> fixed;
                    for (const auto& mm : c.vm.nodes)
                        if (on_axis(*axis, mm)) fixed.push_back(mm);
                    if (fixed.size() == 2) cands = fixed;
                }
                t = four_cycle_target(c, cands, axis, resolved);
            } else {
                auto cn = central_nodes(c.vm);
                if (cn.size() == 1) t = cn[0];
                else t = tie_break_pair(c, cn[0], cn[1], axis, resolved);
            }
            if (!resolved) return std::nullopt;
            return t;
        }
        default: return std::nullopt;
    }
}

// ------------------------------------------------------------ I1 planners

void plan_i1_asym(Plan& P, const Ctx& c, GridNode m) {
    Diamond med{m, c.vm.k};
    BoundaryCondition bc = boundary_condition(c.occ, med);
    bool flagged = false;

    if (bc.kind == BoundaryConditionKind::other) {
        P.flagged = true;
        P.note = "I1 without C1/C2/C3 (characterization violation)";
        return;
    }

    coord_t inner_limit = bc.kind == BoundaryConditionKind::c1_all_four ? med.k - 1 : med.k - 2;
    std::vector<GridNode> inner; // the robots the subcases count
    for (const auto& p : c.occ)
        if (manhattan(p, m) <= inner_limit) inner.push_back(p);

    auto movable_pool = [&](bool want_cb) {
        std::vector<GridNode> out;
        for (const auto& p : c.occ) {
            coord_t d = manhattan(p, m);
            bool is_cb = d == med.k - 1;
            if (want_cb != is_cb) continue;
            if (want_cb || d == med.k)
                if (movable_clause(c, p, med, bc) > 0) out.push_back(p);
        }
        return out;
    };

    std::optional<GridNode> mover;
    MoveRule rule = MoveRule::toward_target;
    if (inner.size() >= 2) {
        mover = argmin_pos(c, without(inner, m), [&](GridNode p) { return dist_key(p, m); });
    } else if (inner.size() == 1 && inner[0] != m && manhattan(inner[0], m) > 1) {
        mover = inner[0];
    } else {
        if (bc.kind != BoundaryConditionKind::c1_all_four) {
            auto cb_pool = movable_pool(true);
            mover = argmin_pos(c, cb_pool, [&](GridNode p) { return dist_key(p, m); });
        }
        if (!mover) {
            auto b_pool = movable_pool(false);
            mover = argmin_pos(c, b_pool, [&](GridNode p) { return dist_key(p, m); });
            if (mover) rule = MoveRule::boundary_entry;
        }
    }
    if (!mover) {
        P.flagged = true;
        P.note = "I1: no movable robot";
        return;
    }
    GridNode dest = step_plain(c, *mover, m, TieRule::view, flagged);
    P.movers.push_back({*mover, dest, rule});
    P.flagged = P.flagged || flagged;
}

void plan_i1_reflective(Plan& P, const Ctx& c, GridNode m, const Isometry& axis) {
    AxisOrder ord = axis_order(c.w, axis);
    Diamond med{m, c.vm.k};
    bool flagged = false;

    bool diagonal = axis.kind == IsoKind::reflect_d_main || axis.kind == IsoKind::reflect_d_anti;
    coord_t inner_limit = diagonal ? med.k - 2 : med.k - 1;
    std::vector<GridNode> inner;
    for (const auto& p : c.occ)
        if (manhattan(p, m) <= std::max<coord_t>(inner_limit, 0) && manhattan(p, m) < med.k)
            inner.push_back(p);

    auto add_pair = [&](GridNode r, MoveRule why) {
        MoveRule rule = why;
        GridNode d1 = step_aligned(c, r, m, axis, ord, flagged, rule);
        P.movers.push_back({r, d1, why == MoveRule::boundary_entry ? why : rule});
        GridNode rm = axis.apply(r);
        if (rm != r) {
            rule = why;
            GridNode d2 = step_aligned(c, rm, m, axis, ord, flagged, rule);
            P.movers.push_back({rm, d2, why == MoveRule::boundary_entry ? why : rule});
        }
    };

    std::vector<GridNode> inner_off_m = without(inner, m);
    if (inner.size() >= 2 && !inner_off_m.empty()) {
        auto best = argmin_pos(c, inner_off_m, [&](GridNode p) {
            return std::vector<coord_t>{axis_dist2(axis, p), manhattan(p, m)};
        });
        add_pair(*best, MoveRule::aligned_approach);
    } else if (inner.size() == 1 && inner[0] != m) {
        // the unique inner robot sits on the axis; it walks to the target
        add_pair(inner[0], MoveRule::aligned_approach);
    } else {
        // co-boundary robots first on a diagonal axis, then boundary pairs
        // whose departure keeps the min-max set intact
        std::vector<GridNode> pool;
        if (diagonal) {
            for (const auto& p : c.occ) {
                if (manhattan(p, m) != med.k - 1) continue;
                // movable: not the only robot on its co-boundary side
                bool lone = true;
                for (auto b : all_boundaries) {
                    if (!on_co_boundary_side(med, b, p)) continue;
                    for (const auto& q : c.occ)
                        if (q != p && on_co_boundary_side(med, b, q)) lone = false;
                }
                GridNode pm = axis.apply(p);
                std::vector<std::pair<GridNode, GridNode>> mv{
                    {p, step_plain(c, p, m, TieRule::lex, flagged)}};
                if (pm != p) mv.push_back({pm, step_plain(c, pm, m, TieRule::lex, flagged)});
                if (!lone && vm_preserved(c, mv)) pool.push_back(p);
            }
        }
        if (pool.empty()) {
            for (const auto& p : c.occ) {
                if (manhattan(p, m) != med.k) continue;
                GridNode pm = axis.apply(p);
                MoveRule r1 = MoveRule::boundary_entry;
                std::vector<std::pair<GridNode, GridNode>> mv{
                    {p, step_aligned(c, p, m, axis, ord, flagged, r1)}};
                if (pm != p) mv.push_back({pm, step_aligned(c, pm, m, axis, ord, flagged, r1)});
                if (vm_preserved(c, mv)) pool.push_back(p);
            }
        }
        auto best = argmin_pos(c, pool, [&](GridNode p) { return dist_key(p, m); });
        if (!best) {
            P.flagged = true;
            P.note = "I1 reflective: no movable robot";
            return;
        }
        add_pair(*best, MoveRule::boundary_entry);
    }
    P.flagged = P.flagged || flagged;
}

void plan_i1_rotational(Plan& P, const Ctx& c, GridNode m, const Isometry& rot) {
    bool flagged = false;
    std::vector<GridNode> pool;
    for (const auto& p : without(c.occ, m)) {
        if (manhattan(p, m) < c.vm.k) {
            pool.push_back(p);
            continue;
        }
        // boundary orbit: keep the min-max set intact
        std::vector<std::pair<GridNode, GridNode>> mv;
        GridNode q = p;
        do {
            mv.push_back({q, step_plain(c, q, m, TieRule::ccw, flagged)});
            q = rot.apply(q);
        } while (q != p);
        if (vm_preserved(c, mv)) pool.push_back(p);
    }
    auto best = argmin_pos(c, pool, [&](GridNode p) { return dist_key(p, m); });
    if (!best) {
        P.flagged = true;
        P.note = "I1 rotational: no movable robot";
        return;
    }
    SelKey bk{dist_key(*best, m), c.view.key(*best)};
    for (const auto& p : pool)
        if (SelKey{dist_key(p, m), c.view.key(p)} == bk)
            P.movers.push_back({p, step_plain(c, p, m, TieRule::ccw, flagged),
                                MoveRule::toward_target});
    P.flagged = P.flagged || flagged;
}

// ------------------------------------------------------------ I2 planner

void plan_i2(Plan& P, const Ctx& c, GridNode m, GmShape shape) {
    Region ir = support_box(c.occ);
    std::vector<GridNode> interior = interior_positions(c, ir);
    std::vector<GridNode> interior_off_m = without(interior, m);
    bool flagged = false;

    auto boundary_mover = [&]() -> std::optional<GridNode> {
        std::vector<GridNode> pool;
        for (const auto& p : c.occ) {
            if (ir.strictly_inside(p)) continue;
            GridNode dest = step_plain(c, p, m, TieRule::view, flagged);
            if (dest == p) continue;
            std::vector<std::pair<GridNode, GridNode>> mv{{p, dest}};
            if (support_preserved(c, mv) && stays_asymmetric(c, mv)) pool.push_back(p);
        }
        return argmin_pos(c, pool, [&](GridNode p) { return dist_key(p, m); });
    };

    std::optional<GridNode> mover;
    MoveRule rule = MoveRule::toward_target;
    bool target_held = occupied_at(c.w, m);
    if (interior.size() >= 2 && !interior_off_m.empty()) {
        mover = argmin_pos(c, interior_off_m, [&](GridNode p) { return dist_key(p, m); });
    } else if (interior.size() == 1 && !interior_off_m.empty() && shape != GmShape::four_cycle &&
               manhattan(interior[0], m) > 1 && !target_held) {
        mover = interior[0];
    } else {
        mover = boundary_mover();
        rule = MoveRule::boundary_entry;
    }
    if (!mover) {
        P.flagged = true;
        P.note = "I2: no movable robot";
        return;
    }
    P.movers.push_back({*mover, step_plain(c, *mover, m, TieRule::view, flagged), rule});
    P.flagged = P.flagged || flagged;
}

// ------------------------------------------------------------ I3 planner

void plan_i3(Plan& P, const Ctx& c, const std::optional<GridNode>& target, const Isometry& axis) {
    bool flagged = false;
    AxisOrder ord = axis_order(c.w, axis);

    if (!target) {
        // Central candidates form an indistinguishable mirror pair; break the
        // symmetry with one robot on the axis stepping aside.
        std::vector<GridNode> on_l;
        for (const auto& p : c.occ)
            if (on_axis(axis, p)) on_l.push_back(p);
        std::sort(on_l.begin(), on_l.end(),
                  [&](GridNode a, GridNode b) { return ord.t_of(a) < ord.t_of(b); });
        for (const auto& p : on_l) {
            // adjacent off-axis nodes, positive side first, then lexicographic
            std::vector<GridNode> cands;
            for (auto e : {GridNode{1, 0}, GridNode{-1, 0}, GridNode{0, 1}, GridNode{0, -1}}) {
                GridNode q{p.x + e.x, p.y + e.y};
                if (!on_axis(axis, q)) cands.push_back(q);
            }
            std::sort(cands.begin(), cands.end(), [&](GridNode a, GridNode b) {
                coord_t sa = (a.x - p.x) * ord.side.x + (a.y - p.y) * ord.side.y;
                coord_t sb = (b.x - p.x) * ord.side.x + (b.y - p.y) * ord.side.y;
                if (sa != sb) return sa > sb;
                return a < b;
            });
            for (const auto& d : cands) {
                if (!occupied_at(c.w, d)) {
                    P.movers.push_back({p, d, MoveRule::symmetry_break});
                    P.flagged = true;
                    P.note = "I3: symmetry break (mirror-tied central pair)";
                    return;
                }
            }
        }
        P.flagged = true;
        P.note = "I3: mirror-tied central pair and no escape move";
        return;
    }

    GridNode m = *target;
    Region ir = support_box(c.occ);
    std::vector<GridNode> interior = interior_positions(c, ir);
    std::vector<GridNode> interior_off_m = without(interior, m);

    auto add_pair = [&](GridNode r, MoveRule why) {
        MoveRule rule = why;
        GridNode d1 = step_aligned(c, r, m, axis, ord, flagged, rule);
        P.movers.push_back({r, d1, why == MoveRule::boundary_entry ? why : rule});
        GridNode rm = axis.apply(r);
        if (rm != r) {
            rule = why;
            GridNode d2 = step_aligned(c, rm, m, axis, ord, flagged, rule);
            P.movers.push_back({rm, d2, why == MoveRule::boundary_entry ? why : rule});
        }
    };

    if (interior.size() >= 2 && !interior_off_m.empty()) {
        auto best = argmin_pos(c, interior_off_m, [&](GridNode p) { return dist_key(p, m); });
        add_pair(*best, MoveRule::aligned_approach);
    } else if (interior.size() == 1 && !interior_off_m.empty()) {
        add_pair(interior[0], MoveRule::aligned_approach);
    } else {
        std::vector<GridNode> pool;
        for (const auto& p : c.occ) {
            if (ir.strictly_inside(p)) continue;
            GridNode pm = axis.apply(p);
            MoveRule r1 = MoveRule::boundary_entry;
            std::vector<std::pair<GridNode, GridNode>> mv{
                {p, step_aligned(c, p, m, axis, ord, flagged, r1)}};
            if (pm != p) mv.push_back({pm, step_aligned(c, pm, m, axis, ord, flagged, r1)});
            bool moves_somewhere = false;
            for (auto& [f, t] : mv) moves_somewhere = moves_somewhere || f != t;
            if (moves_somewhere && support_preserved(c, mv)) pool.push_back(p);
        }
        auto best = argmin_pos(c, pool, [&](GridNode p) { return dist_key(p, m); });
        if (!best) {
            P.flagged = true;
            P.note = "I3: no movable robot";
            return;
        }
        add_pair(*best, MoveRule::boundary_entry);
    }
    P.flagged = P.flagged || flagged;
}

// ------------------------------------------------------------ I4 planner

void plan_i4(Plan& P, const Ctx& c, GridNode m) {
    bool flagged = false;
    std::vector<GridNode> pool = without(c.occ, m);
    auto best = argmin_pos(c, pool, [&](GridNode p) { return dist_key(p, m); });
    if (!best) return;
    SelKey bk{dist_key(*best, m), c.view.key(*best)};
    for (const auto& p : pool)
        if (SelKey{dist_key(p, m), c.view.key(p)} == bk)
            P.movers.push_back({p, step_plain(c, p, m, TieRule::ccw, flagged),
                                MoveRule::toward_target});
    P.flagged = P.flagged || flagged;
}

} // namespace

Plan plan_moves(const WeakConfig& w) {
    Plan P;
    assert(!w.empty());
    if (w.size() == 1) {
        P.phase = AlgoPhase::done;
        return P;
    }

    bool has_multiple = false;
    for (const auto& e : w) has_multiple = has_multiple || e.label == Occupancy::multiple;

    Ctx c(w);
    if (has_multiple) {
        P.cls = classify(w);
        plan_finalization(P, c);
        return P;
    }

    P.phase = AlgoPhase::creating_multiplicity;
    P.cls = classify(w);
    if (P.cls.kind == GatherKind::ungatherable) {
        P.phase = AlgoPhase::refuse;
        return P;
    }

    std::optional<GridNode> target = creating_target(c, P.cls);
    P.target = target;
    switch (P.cls.kind) {
        case GatherKind::i1:
            if (P.cls.rotation) plan_i1_rotational(P, c, *target, *P.cls.rotation);
            else if (P.cls.axis) plan_i1_reflective(P, c, *target, *P.cls.axis);
            else plan_i1_asym(P, c, *target);
            break;
        case GatherKind::i2:
            plan_i2(P, c, *target, classify_gm(c.vm));
            break;
        case GatherKind::i3:
            plan_i3(P, c, target, *P.cls.axis);
            break;
        case GatherKind::i4:
            plan_i4(P, c, *target);
            break;
        default: break;
    }
    return P;
}

AlgoPhase phase_of(const Snapshot& s) {
    if (s.entries.size() == 1) return AlgoPhase::done;
    bool has_multiple = false;
    for (const auto& e : s.entries) has_multiple = has_multiple || e.label == Occupancy::multiple;
    if (has_multiple) return AlgoPhase::finalization;
    if (classify(s.entries).kind == GatherKind::ungatherable) return AlgoPhase::refuse;
    return AlgoPhase::creating_multiplicity;
}

Move decide(const Snapshot& s) {
    Plan P = plan_moves(s.entries);
    for (const auto& mv : P.movers)
        if (mv.from == s.self) return Move{mv.dest, mv.rule};
    return Move{s.self, MoveRule::none};
}

std::optional<GridNode> select_target(const WeakConfig& w) {
    Ctx c(w);
    GatherClass cls = classify(w);
    if (cls.kind == GatherKind::ungatherable) return std::nullopt;
    return creating_target(c, cls);
}

std::vector<GridNode> target_candidates(const WeakConfig& w) {
    Ctx c(w);
    GatherClass cls = classify(w);
    switch (cls.kind) {
        case GatherKind::i1: return {c.vm.nodes[0]};
        case GatherKind::i4:
            return {GridNode{cls.rotation->ax2 / 2, cls.rotation->ay2 / 2}};
        case GatherKind::i2:
        case GatherKind::i3: {
            if (classify_gm(c.vm) == GmShape::four_cycle) return c.vm.nodes;
            return central_nodes(c.vm);
        }
        default: return {};
    }
}

MovablePredicate is_movable(const Snapshot& s, GridNode pos, const BoundaryCondition& cond) {
    Ctx c(s.entries);
    Diamond med{c.vm.nodes[0], c.vm.k};
    int clause = movable_clause(c, pos, med, cond);
    return MovablePredicate{clause > 0, clause};
}

} // namespace gridgather
