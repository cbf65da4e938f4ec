#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridgather/algorithm.hpp"
#include "gridgather/config.hpp"

namespace gridgather {

enum class SchedKind : int { fsync = 0, ssync = 1, async_sched = 2 };

const char* sched_kind_name(SchedKind k);

struct SchedulerSpec {
    SchedKind kind = SchedKind::async_sched;
    std::uint64_t seed = 0;
    // Upper bound on system activations between consecutive activations of
    // any one robot; >= n keeps the scheduler fair.
    std::int64_t fairness_window = 0; // 0: default 4n
    // ASYNC only: how many other-robot move commits may happen between a
    // robot's look and its own move.
    std::int64_t max_look_to_move_delay = 0; // 0 under FSYNC/SSYNC
    // ASYNC adversary policy: false = seeded random, true = always delay
    // pending movers maximally (stress mode).
    bool nasty = false;
};

enum class EventKind : int { look = 0, move = 1, null_move = 2 };

struct SimEvent {
    std::int64_t tick = 0;
    std::int32_t actor = 0; // internal index, never visible to decide()
    EventKind kind = EventKind::look;
    GridNode from;
    GridNode to;
    std::int64_t snapshot_tick = 0; // tick of the look this action was computed from
    MoveRule rule = MoveRule::none;
};

struct RunResult {
    bool terminated = false;
    Configuration final_config;
    std::int64_t activations = 0; // completed look events
    std::vector<std::int64_t> per_robot_distance;
    std::optional<GridNode> gathering_node;
    std::int64_t initial_radius = 0;
    std::int64_t excess_travel = 0; // max distance traveled minus initial k
    std::string error; // nonempty when preconditions failed
};

struct Trace {
    std::vector<SimEvent> events;
    std::string text() const; // line format: tick actor action fx fy tx ty snapshot_tick
};

// Default activation cutoff: 200 * n * (k + 1).
std::int64_t default_max_activations(const Configuration& c0);

std::pair<RunResult, Trace> run(const Configuration& c0, const SchedulerSpec& sched,
                                std::int64_t max_activations = 0);

struct VerifyReport {
    bool ok = false;
    bool terminated = false;
    bool gathered_at_initial_minmax = false;
    bool multiplicity_bound_ok = false; // <= 1 multiple node throughout (I1..I3)
    bool target_stable = false;
    bool class_preserved = false;
    std::int64_t excess_travel = 0;
    std::vector<std::string> violations;
    std::string summary() const;
};

VerifyReport verify(const Configuration& c0, const RunResult& result, const Trace& trace);

} // namespace gridgather
