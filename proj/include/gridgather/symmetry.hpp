#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridgather/minmax.hpp"

namespace gridgather {

enum class IsoKind : int {
    reflect_v = 0,   // axis x = ax2/2
    reflect_h = 1,   // axis y = ax2/2
    reflect_d_main = 2, // axis y = x + ax2/2 (ax2 always even: only node axes map the lattice to itself)
    reflect_d_anti = 3, // axis x + y = ax2/2 (ax2 always even)
    rot90 = 4,       // order-4 rotation about (ax2/2, ay2/2)
    rot180 = 5,      // about (ax2/2, ay2/2)
};

// A non-identity grid automorphism candidate. Axis offsets and rotation
// centers are stored doubled so half-integer lines stay exact.
struct Isometry {
    IsoKind kind;
    coord_t ax2 = 0;
    coord_t ay2 = 0;

    GridNode apply(GridNode p) const;
    bool is_reflection() const { return kind != IsoKind::rot90 && kind != IsoKind::rot180; }
    bool is_rotation() const { return !is_reflection(); }
    // Order-4 rotations map the lattice to itself only around nodes or unit
    // square centers.
    bool lattice_valid() const;
    std::string describe() const;
    auto operator<=>(const Isometry&) const = default;
};

// All non-identity automorphisms of the labeled configuration. Every
// automorphism of a finite configuration must map its MER to itself, which
// leaves exactly seven candidates (the rectangle point group); rot270 is
// folded into rot90.
std::vector<Isometry> automorphisms(const WeakConfig& w);
inline std::vector<Isometry> automorphisms(const Configuration& c) {
    return automorphisms(c.weak());
}

// True iff the cyclic group generated by iso fixes no grid node: edge-axis
// reflections and rotations about non-node centers.
bool is_partitive(const Isometry& iso);

enum class GatherKind : int { i1 = 1, i2 = 2, i3 = 3, i4 = 4, ungatherable = 0 };

enum class UngatherableReason : int {
    none = 0,
    partitive = 1,     // partitive automorphism, no shape-specific corollary
    corollary2 = 2,    // four-cycle with axis-parallel reflection or rotation
    corollary3 = 3,    // disconnected step graph with axis-parallel reflection or even rotation
    corollary4 = 4,    // step graph with the listed symmetries
    lemma16 = 5,       // single reflection whose axis carries no robot and no min-max node
    lemma17 = 6,       // rotation whose center carries no robot and no min-max node
};

struct GatherClass {
    GatherKind kind = GatherKind::i1;
    std::optional<Isometry> axis;     // i3: the unique reflection
    std::optional<Isometry> rotation; // i4 (and i1 with rotational symmetry)
    UngatherableReason reason = UngatherableReason::none;
    std::optional<Isometry> witness;  // isometry backing an ungatherable verdict
};

const char* gather_kind_name(GatherKind k);
const char* reason_name(UngatherableReason r);

// Classification per the impossibility results and the I1..I4 partition.
// Configurations admitting both a reflection and a rotation classify by the
// rotation. Population (n >= 9) is enforced by the algorithm/simulator, not
// here, so small configurations can still be analyzed.
GatherClass classify(const WeakConfig& w);
inline GatherClass classify(const Configuration& c) { return classify(c.weak()); }

} // namespace gridgather
