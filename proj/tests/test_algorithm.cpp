#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gridgather/algorithm.hpp"
#include "support.hpp"

using namespace gridgather;

namespace {

Configuration cfg(std::initializer_list<GridNode> pts) {
    return Configuration(std::vector<GridNode>(pts));
}

// I1/C1 instance: unique min-max node (0,0) with k = 4, one robot sitting on
// it, all four boundaries occupied, several interior robots.
Configuration i1_c1() {
    return cfg({{2, 2}, {-2, 2}, {-2, -2}, {2, -2}, {0, 0}, {1, 0}, {0, 1}, {-1, -1}, {2, 0}});
}

// I1/C1 with two robots on the upper-right boundary.
Configuration i1_c1_two_ur() {
    return cfg({{2, 2}, {3, 1}, {-2, 2}, {-1, -3}, {1, -3}, {0, 0}, {1, 0}, {0, 1}, {-1, 1}});
}

// I1/C2: boundaries UR/UL/DL occupied, DR empty, sole witness on the DR side
// of the co-boundary.
Configuration i1_c2() {
    return cfg({{2, 2}, {-2, 2}, {-2, -2}, {1, -2}, {0, 0}, {1, 0}, {0, 1}, {-1, 0}, {1, 1}});
}

// I2 instance, disconnected-step chain of four with distinct central
// centralities; target is (3,2).
Configuration i2_even_chain() {
    return cfg({{1, 0}, {5, 4}, {2, 1}, {3, 2}, {3, 4}, {1, 1}, {2, 2}, {3, 3}, {4, 4}});
}

// I1 with 90-degree rotational symmetry about the occupied node (0,0).
Configuration i1_rot() {
    return cfg({{3, 1}, {-1, 3}, {-3, -1}, {1, -3}, {2, 0}, {0, 2}, {-2, 0}, {0, -2}, {0, 0}});
}

// I4: 180-degree rotation about (0,0), min-max chain {(-1,1),(0,0),(1,-1)}.
Configuration i4_odd_chain() {
    return cfg({{2, 2}, {-2, -2}, {3, 1}, {-3, -1}, {0, 2}, {0, -2}, {1, 1}, {-1, -1}, {0, 0}});
}

// I3: single diagonal reflection, two min-max nodes on the axis.
Configuration i3_axis_chain() {
    return cfg({{1, 1}, {6, 2}, {2, 6}, {3, 1}, {1, 3}, {4, 3}, {3, 4}, {4, 1}, {1, 4}});
}

std::vector<PlannedMove> movers_of(const Configuration& c) {
    return plan_moves(c.weak()).movers;
}

} // namespace

TEST_CASE("phase detection") {
    Configuration done;
    done.add({3, 3}, 9);
    CHECK(phase_of(snapshot_of(done, {3, 3})) == AlgoPhase::done);

    Configuration fin = i1_c1();
    fin.add({1, 0}); // second robot at (1,0): multiplicity
    CHECK(phase_of(snapshot_of(fin, {0, 0})) == AlgoPhase::finalization);

    CHECK(phase_of(snapshot_of(i1_c1(), {0, 0})) == AlgoPhase::creating_multiplicity);

    Configuration refuse = cfg({{0, 0}, {1, 0}});
    CHECK(phase_of(snapshot_of(refuse, {0, 0})) == AlgoPhase::refuse);
}

TEST_CASE("co-located robots perform null moves") {
    Configuration done;
    done.add({3, 3}, 9);
    Move m = decide(snapshot_of(done, {3, 3}));
    CHECK(m.dest == GridNode{3, 3});
}

TEST_CASE("I1/C1 designates exactly one interior mover") {
    Configuration c = i1_c1();
    auto vm = minmax_nodes(c);
    REQUIRE(vm.nodes == std::vector<GridNode>{{0, 0}});
    REQUIRE(vm.k == 4);
    REQUIRE(boundary_condition(c, Diamond{{0, 0}, 4}).kind == BoundaryConditionKind::c1_all_four);
    REQUIRE(automorphisms(c).empty());

    int non_null = 0;
    for (const auto& r : c.occupied_nodes()) {
        Move m = decide(snapshot_of(c, r));
        if (m.dest != r) {
            ++non_null;
            // closest interior robot steps toward the target
            CHECK(manhattan(r, {0, 0}) == 1);
            CHECK(manhattan(m.dest, {0, 0}) == 0);
        }
    }
    CHECK(non_null == 1);
}

TEST_CASE("movable clauses under C1") {
    Configuration c = i1_c1_two_ur();
    auto vm = minmax_nodes(c);
    REQUIRE(vm.nodes == std::vector<GridNode>{{0, 0}});
    Diamond med{{0, 0}, vm.k};
    BoundaryCondition bc = boundary_condition(c, med);
    REQUIRE(bc.kind == BoundaryConditionKind::c1_all_four);

    Snapshot s = snapshot_of(c, {0, 0});
    // interior robot: movable by clause 1
    auto interior = is_movable(s, {1, 0}, bc);
    CHECK(interior.movable);
    CHECK(interior.rule == 1);

    // of the two robots on the UR boundary exactly one (the max view) stays
    auto a = is_movable(s, {2, 2}, bc);
    auto b = is_movable(s, {3, 1}, bc);
    CHECK(a.movable != b.movable);
    // sole robot on its boundary is never movable
    CHECK_FALSE(is_movable(s, {-2, 2}, bc).movable);
}

TEST_CASE("movable clauses under C2") {
    Configuration c = i1_c2();
    auto vm = minmax_nodes(c);
    REQUIRE(vm.nodes == std::vector<GridNode>{{0, 0}});
    REQUIRE(vm.k == 4);
    Diamond med{{0, 0}, 4};
    BoundaryCondition bc = boundary_condition(c, med);
    REQUIRE(bc.kind == BoundaryConditionKind::c2_three_plus_near);
    REQUIRE(*bc.empty_boundary == BoundaryId::dr);

    Snapshot s = snapshot_of(c, {0, 0});
    // the lone witness on the empty boundary's co-boundary side must stay
    CHECK_FALSE(is_movable(s, {1, -2}, bc).movable);
    // strictly inside robots are movable by clause 1
    CHECK(is_movable(s, {1, 1}, bc).movable);
    CHECK(is_movable(s, {1, 1}, bc).rule == 1);
}

TEST_CASE("select_target examples") {
    // unique min-max node
    CHECK(select_target(i1_c1().weak()) == GridNode{0, 0});

    // three-node disconnected chain: the unique central node
    auto t = select_target(cfg({{0, 0}, {2, 2}}).weak());
    REQUIRE(t.has_value());
    CHECK(*t == GridNode{1, 1});

    // even chain with distinct central centralities: the weber one
    Configuration c = i2_even_chain();
    REQUIRE(automorphisms(c).empty());
    auto vm = minmax_nodes(c);
    REQUIRE(vm.nodes ==
            std::vector<GridNode>{{1, 4}, {2, 3}, {3, 2}, {4, 1}});
    REQUIRE(classify_gm(vm) == GmShape::disconnected_step_graph);
    CHECK(centrality(c, {2, 3}) == 22);
    CHECK(centrality(c, {3, 2}) == 20);
    CHECK(select_target(c.weak()) == GridNode{3, 2});
    CHECK(target_candidates(c.weak()) == std::vector<GridNode>{{2, 3}, {3, 2}});
}

TEST_CASE("I2 designates a single mover toward the target") {
    Configuration c = i2_even_chain();
    auto movers = movers_of(c);
    REQUIRE(movers.size() == 1);
    CHECK(manhattan(movers[0].dest, {3, 2}) < manhattan(movers[0].from, {3, 2}));
}

TEST_CASE("I1 rotational moves one orbit of four") {
    Configuration c = i1_rot();
    auto cls = classify(c);
    REQUIRE(cls.kind == GatherKind::i1);
    REQUIRE(cls.rotation.has_value());
    auto movers = movers_of(c);
    REQUIRE(movers.size() == 4);
    for (const auto& mv : movers) {
        CHECK(manhattan(mv.from, {0, 0}) == 2);
        CHECK(manhattan(mv.dest, {0, 0}) == 1);
    }
    // destinations pairwise distinct (the orbit stays collision-free)
    for (std::size_t i = 0; i < movers.size(); ++i)
        for (std::size_t j = i + 1; j < movers.size(); ++j)
            CHECK(movers[i].dest != movers[j].dest);
}

TEST_CASE("I4 moves the closest orbit toward the center") {
    Configuration c = i4_odd_chain();
    auto cls = classify(c);
    REQUIRE(cls.kind == GatherKind::i4);
    CHECK(select_target(c.weak()) == GridNode{0, 0});
    CHECK(target_candidates(c.weak()) == std::vector<GridNode>{{0, 0}});

    auto movers = movers_of(c);
    REQUIRE(movers.size() == 2);
    for (const auto& mv : movers) {
        CHECK(manhattan(mv.from, {0, 0}) == 2);
        CHECK(manhattan(mv.dest, {0, 0}) == 1);
    }
}

TEST_CASE("I3 moves a mirror pair with the aligned stepper") {
    Configuration c = i3_axis_chain();
    auto cls = classify(c);
    REQUIRE(cls.kind == GatherKind::i3);
    auto t = select_target(c.weak());
    REQUIRE(t.has_value());
    // both central candidates are on the axis; the target is one of them
    CHECK((*t == GridNode{2, 2} || *t == GridNode{3, 3}));

    auto movers = movers_of(c);
    REQUIRE(!movers.empty());
    CHECK(movers.size() <= 2);
    if (movers.size() == 2) {
        Isometry axis = *cls.axis;
        CHECK(axis.apply(movers[0].from) == movers[1].from);
    }
    for (const auto& mv : movers)
        CHECK(manhattan(mv.dest, *t) <= manhattan(mv.from, *t));
}

TEST_CASE("finalization: closest robot approaches the multiplicity") {
    Configuration c = cfg({{4, 1}, {-3, 2}, {2, 3}, {-1, -4}, {1, 2}, {-2, 0}, {3, -2}, {0, -3}});
    c.add({0, 0}, 2); // the multiplicity
    int non_null = 0;
    GridNode mover{0, 0};
    for (const auto& r : c.occupied_nodes()) {
        Move m = decide(snapshot_of(c, r));
        if (m.dest != r) {
            ++non_null;
            mover = r;
            CHECK(m.rule == MoveRule::finalize);
            CHECK(manhattan(m.dest, {0, 0}) == manhattan(r, {0, 0}) - 1);
        }
    }
    CHECK(non_null == 1);
    // it is one of the closest robots
    coord_t best = -1;
    for (const auto& r : c.occupied_nodes()) {
        if (r == GridNode{0, 0}) continue;
        coord_t d = manhattan(r, {0, 0});
        if (best < 0 || d < best) best = d;
    }
    CHECK(manhattan(mover, {0, 0}) == best);
}

TEST_CASE("decide is pure") {
    Configuration c = i1_c1();
    for (const auto& r : c.occupied_nodes()) {
        Snapshot s = snapshot_of(c, r);
        Move first = decide(s);
        for (int t = 0; t < 5; ++t) {
            Move again = decide(s);
            CHECK(again.dest == first.dest);
            CHECK(again.rule == first.rule);
        }
    }
}

TEST_CASE("decide ignores multiplicity counts") {
    Configuration a = cfg({{4, 1}, {-3, 2}, {2, 3}, {1, 2}, {-2, 0}, {3, -2}, {0, -3}});
    Configuration b = a;
    a.add({0, 0}, 2);
    b.add({0, 0}, 7);
    for (const auto& r : a.occupied_nodes()) {
        Move ma = decide(snapshot_of(a, r));
        Move mb = decide(snapshot_of(b, r));
        CHECK(ma.dest == mb.dest);
        CHECK(ma.rule == mb.rule);
    }
}

namespace {

using Transform = std::function<GridNode(GridNode)>;

const std::vector<Transform> point_group = {
    [](GridNode p) { return p; },
    [](GridNode p) { return GridNode{-p.x, p.y}; },
    [](GridNode p) { return GridNode{p.x, -p.y}; },
    [](GridNode p) { return GridNode{-p.x, -p.y}; },
    [](GridNode p) { return GridNode{p.y, p.x}; },
    [](GridNode p) { return GridNode{-p.y, p.x}; },
    [](GridNode p) { return GridNode{p.y, -p.x}; },
    [](GridNode p) { return GridNode{-p.y, -p.x}; },
};

} // namespace

TEST_CASE("decide is equivariant under grid isometries") {
    Rng rng(61);
    int tested = 0;
    for (int t = 0; t < 30; ++t) {
        auto c = ggtest::random_config(rng, 9 + static_cast<int>(rng.below(5)), 9);
        if (!automorphisms(c).empty()) continue;
        ++tested;
        auto robots = c.occupied_nodes();
        for (const auto& g : point_group) {
            for (coord_t off : {-7, 0, 13}) {
                auto h = [&](GridNode p) { return offset(g(p), off, -off); };
                std::vector<GridNode> img;
                for (auto p : robots) img.push_back(h(p));
                Configuration ci(img);
                for (const auto& r : robots) {
                    Move m = decide(snapshot_of(c, r));
                    Move mi = decide(snapshot_of(ci, h(r)));
                    CHECK(mi.dest == h(m.dest));
                }
            }
        }
    }
    CHECK(tested >= 20);
}

TEST_CASE("ungatherable snapshots refuse to move") {
    Configuration c = cfg({{0, 0}, {1, 0}});
    for (const auto& r : c.occupied_nodes()) {
        Move m = decide(snapshot_of(c, r));
        CHECK(m.dest == r);
    }
}

TEST_CASE("mover count is bounded by the class") {
    auto bound_of = [](const GatherClass& cls) -> std::size_t {
        switch (cls.kind) {
            case GatherKind::i1: return cls.rotation ? 4 : (cls.axis ? 2 : 1);
            case GatherKind::i2: return 1;
            case GatherKind::i3: return 2;
            case GatherKind::i4: return 4;
            default: return 0;
        }
    };
    Rng rng(62);
    for (int t = 0; t < 300; ++t) {
        auto c = ggtest::random_config(rng, 9 + static_cast<int>(rng.below(10)), 9);
        Plan p = plan_moves(c.weak());
        if (p.phase != AlgoPhase::creating_multiplicity) continue;
        CHECK(p.movers.size() <= bound_of(p.cls));
    }
    for (auto c : {i1_rot(), i4_odd_chain(), i3_axis_chain(), i1_c1(), i2_even_chain()}) {
        Plan p = plan_moves(c.weak());
        CHECK(p.movers.size() <= bound_of(p.cls));
    }
}

TEST_CASE("mirror-tied central pair breaks symmetry through an axis robot") {
    // Min-max chain {(2,3),(3,2)} straddles the diagonal axis; the axis
    // carries a robot, so the configuration is gatherable but no target can
    // be agreed on until the symmetry is broken.
    Configuration c =
        cfg({{1, 0}, {0, 1}, {6, 3}, {3, 6}, {2, 1}, {1, 2}, {5, 2}, {2, 5}, {4, 4}});
    auto cls = classify(c);
    REQUIRE(cls.kind == GatherKind::i3);
    CHECK(minmax_nodes(c).nodes == std::vector<GridNode>{{2, 3}, {3, 2}});
    CHECK_FALSE(select_target(c.weak()).has_value());

    Plan p = plan_moves(c.weak());
    REQUIRE(p.movers.size() == 1);
    CHECK(p.movers[0].from == GridNode{4, 4});
    CHECK(p.movers[0].rule == MoveRule::symmetry_break);
    CHECK(manhattan(p.movers[0].dest, {4, 4}) == 1);
    // destination leaves the axis
    CHECK(p.movers[0].dest.x != p.movers[0].dest.y);
}
