#include "gridgather/symmetry.hpp"

#include <algorithm>

namespace gridgather {

GridNode Isometry::apply(GridNode p) const {
    switch (kind) {
        case IsoKind::reflect_v: return GridNode{ax2 - p.x, p.y};
        case IsoKind::reflect_h: return GridNode{p.x, ax2 - p.y};
        case IsoKind::reflect_d_main: {
            coord_t c = ax2 / 2;
            return GridNode{p.y - c, p.x + c};
        }
        case IsoKind::reflect_d_anti: {
            coord_t s = ax2 / 2;
            return GridNode{s - p.y, s - p.x};
        }
        case IsoKind::rot90:
            // counterclockwise about (ax2/2, ay2/2)
            return GridNode{(ax2 - 2 * p.y + ay2) / 2, (ay2 + 2 * p.x - ax2) / 2};
        case IsoKind::rot180: return GridNode{ax2 - p.x, ay2 - p.y};
    }
    return p;
}

bool Isometry::lattice_valid() const {
    switch (kind) {
        case IsoKind::reflect_d_main:
        case IsoKind::reflect_d_anti: return (ax2 & 1) == 0;
        case IsoKind::rot90: return ((ax2 + ay2) & 1) == 0;
        default: return true;
    }
}

std::string Isometry::describe() const {
    auto frac = [](coord_t d2) -> std::string {
        if ((d2 & 1) == 0) return std::to_string(d2 / 2);
        std::string sign = d2 < 0 ? "-" : "";
        return sign + std::to_string(abs_c(d2) / 2) + ".5";
    };
    switch (kind) {
        case IsoKind::reflect_v: return "reflect x=" + frac(ax2);
        case IsoKind::reflect_h: return "reflect y=" + frac(ax2);
        case IsoKind::reflect_d_main: return "reflect y=x+" + frac(ax2);
        case IsoKind::reflect_d_anti: return "reflect x+y=" + frac(ax2);
        case IsoKind::rot90: return "rot90 center=(" + frac(ax2) + "," + frac(ay2) + ")";
        case IsoKind::rot180: return "rot180 center=(" + frac(ax2) + "," + frac(ay2) + ")";
    }
    return "?";
}

bool is_partitive(const Isometry& iso) {
    switch (iso.kind) {
        case IsoKind::reflect_v:
        case IsoKind::reflect_h: return (iso.ax2 & 1) != 0;
        case IsoKind::reflect_d_main:
        case IsoKind::reflect_d_anti: return false; // node axes only
        case IsoKind::rot90:
        case IsoKind::rot180: return (iso.ax2 & 1) != 0 || (iso.ay2 & 1) != 0;
    }
    return false;
}

namespace {

bool preserves(const WeakConfig& w, const Isometry& iso) {
    // An isometry mapping every occupied node to an equally-labeled occupied
    // node permutes the finite occupied set, so labels elsewhere (empty)
    // follow automatically.
    for (const auto& e : w)
        if (lambda_of(w, iso.apply(e.pos)) != e.label) return false;
    return true;
}

} // namespace

std::vector<Isometry> automorphisms(const WeakConfig& w) {
    assert(!w.empty());
    Rect box = mer(w);
    coord_t sx = box.x_min + box.x_max;
    coord_t sy = box.y_min + box.y_max;

    std::vector<Isometry> candidates;
    candidates.push_back({IsoKind::reflect_v, sx, 0});
    candidates.push_back({IsoKind::reflect_h, sy, 0});
    candidates.push_back({IsoKind::rot180, sx, sy});
    if (box.square()) {
        candidates.push_back({IsoKind::reflect_d_main, 2 * (box.y_min - box.x_min), 0});
        candidates.push_back({IsoKind::reflect_d_anti, 2 * (box.x_min + box.y_max), 0});
        candidates.push_back({IsoKind::rot90, sx, sy});
    }

    std::vector<Isometry> out;
    for (const auto& iso : candidates) {
        if (!iso.lattice_valid()) continue;
        bool ok = preserves(w, iso);
        if (ok && iso.kind == IsoKind::rot90) {
            // rot90 stands for the whole order-4 subgroup; spot-check rot270.
            GridNode probe = iso.apply(iso.apply(iso.apply(w[0].pos)));
            ok = lambda_of(w, probe) == w[0].label;
        }
        if (ok) out.push_back(iso);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const char* gather_kind_name(GatherKind k) {
    switch (k) {
        case GatherKind::i1: return "I1";
        case GatherKind::i2: return "I2";
        case GatherKind::i3: return "I3";
        case GatherKind::i4: return "I4";
        case GatherKind::ungatherable: return "Ungatherable";
    }
    return "?";
}

const char* reason_name(UngatherableReason r) {
    switch (r) {
        case UngatherableReason::none: return "none";
        case UngatherableReason::partitive: return "partitive";
        case UngatherableReason::corollary2: return "corollary2";
        case UngatherableReason::corollary3: return "corollary3";
        case UngatherableReason::corollary4: return "corollary4";
        case UngatherableReason::lemma16: return "lemma16";
        case UngatherableReason::lemma17: return "lemma17";
    }
    return "?";
}

namespace {

bool axis_parallel_reflection(const Isometry& iso) {
    return iso.kind == IsoKind::reflect_v || iso.kind == IsoKind::reflect_h;
}

// Does the reflection axis pass through node p?
bool axis_contains(const Isometry& iso, GridNode p) {
    switch (iso.kind) {
        case IsoKind::reflect_v: return 2 * p.x == iso.ax2;
        case IsoKind::reflect_h: return 2 * p.y == iso.ax2;
        case IsoKind::reflect_d_main: return 2 * (p.y - p.x) == iso.ax2;
        case IsoKind::reflect_d_anti: return 2 * (p.x + p.y) == iso.ax2;
        default: return false;
    }
}

bool center_is(const Isometry& iso, GridNode p) {
    return iso.is_rotation() && iso.ax2 == 2 * p.x && iso.ay2 == 2 * p.y;
}

UngatherableReason corollary_for(GmShape shape, const Isometry& witness, std::size_t vm_count) {
    switch (shape) {
        case GmShape::four_cycle:
            if (axis_parallel_reflection(witness) || witness.is_rotation())
                return UngatherableReason::corollary2;
            break;
        case GmShape::disconnected_step_graph:
            if (axis_parallel_reflection(witness)) return UngatherableReason::corollary3;
            if (witness.is_rotation() && vm_count % 2 == 0) return UngatherableReason::corollary3;
            break;
        case GmShape::step_graph:
            if (axis_parallel_reflection(witness) && vm_count > 2) return UngatherableReason::corollary4;
            if (witness.is_rotation() && vm_count >= 2) return UngatherableReason::corollary4;
            if (!axis_parallel_reflection(witness) && witness.is_reflection() && vm_count >= 2)
                return UngatherableReason::corollary4; // diagonal axis along the chain
            break;
        default: break;
    }
    return UngatherableReason::partitive;
}

} // namespace

GatherClass classify(const WeakConfig& w) {
    assert(!w.empty());
    MinMaxSet vm = minmax_nodes(w);
    GmShape shape = classify_gm(vm);
    std::vector<Isometry> autos = automorphisms(w);

    GatherClass out;

    for (const auto& iso : autos) {
        if (is_partitive(iso)) {
            out.kind = GatherKind::ungatherable;
            out.witness = iso;
            out.reason = corollary_for(shape, iso, vm.nodes.size());
            return out;
        }
    }

    std::vector<Isometry> reflections, rotations;
    for (const auto& iso : autos)
        (iso.is_reflection() ? reflections : rotations).push_back(iso);

    // A single line of symmetry carrying neither robots nor min-max
    // nodes makes gathering impossible.
    if (autos.size() == 1 && reflections.size() == 1) {
        const auto& l = reflections[0];
        bool carries = false;
        for (const auto& e : w) carries = carries || axis_contains(l, e.pos);
        for (const auto& m : vm.nodes) carries = carries || axis_contains(l, m);
        if (!carries) {
            out.kind = GatherKind::ungatherable;
            out.reason = UngatherableReason::lemma16;
            out.witness = l;
            return out;
        }
    }

    // Same for a rotation center.
    if (!rotations.empty()) {
        const auto& rot = rotations.back(); // rot180 sorts after rot90
        bool carries = false;
        for (const auto& e : w) carries = carries || center_is(rot, e.pos);
        for (const auto& m : vm.nodes) carries = carries || center_is(rot, m);
        if (!carries) {
            out.kind = GatherKind::ungatherable;
            out.reason = UngatherableReason::lemma17;
            out.witness = rot;
            return out;
        }
    }

    if (vm.nodes.size() == 1) {
        out.kind = GatherKind::i1;
        if (!rotations.empty()) out.rotation = rotations.back();
        else if (reflections.size() == 1) out.axis = reflections[0];
        return out;
    }

    if (autos.empty()) {
        out.kind = GatherKind::i2;
        return out;
    }
    if (!rotations.empty()) {
        // Rotation takes precedence over a coexisting reflection: the target
        // argument depends only on the center.
        out.kind = GatherKind::i4;
        out.rotation = rotations.back();
        return out;
    }
    out.kind = GatherKind::i3;
    out.axis = reflections[0];
    return out;
}

} // namespace gridgather
