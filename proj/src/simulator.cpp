#include "gridgather/simulator.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gridgather/rng.hpp"

namespace gridgather {

const char* sched_kind_name(SchedKind k) {
    switch (k) {
        case SchedKind::fsync: return "fsync";
        case SchedKind::ssync: return "ssync";
        case SchedKind::async_sched: return "async";
    }
    return "?";
}

std::string Trace::text() const {
    std::ostringstream os;
    os << "gridgather-trace v1\n";
    for (const auto& e : events) {
        const char* a = e.kind == EventKind::look ? "look"
                        : e.kind == EventKind::move ? "move"
                                                    : "null";
        os << e.tick << ' ' << e.actor << ' ' << a << ' ' << e.from.x << ' ' << e.from.y << ' '
           << e.to.x << ' ' << e.to.y << ' ' << e.snapshot_tick << '\n';
    }
    return os.str();
}

std::int64_t default_max_activations(const Configuration& c0) {
    return 200 * c0.robot_count() * (med_radius(c0) + 1);
}

namespace {

struct Engine {
    std::vector<GridNode> pos;
    Configuration cfg;
    Trace trace;
    std::int64_t tick = 0;
    std::int64_t looks = 0;
    std::vector<std::int64_t> traveled;

    // plan cache: configurations change only at commits
    WeakConfig cached_weak;
    Plan cached_plan;
    bool cache_valid = false;

    explicit Engine(const Configuration& c0) : cfg(c0) {
        for (const auto& [p, k] : c0.counts())
            for (int i = 0; i < k; ++i) pos.push_back(p);
        traveled.assign(pos.size(), 0);
    }

    const Plan& plan() {
        if (!cache_valid) {
            cached_weak = cfg.weak();
            cached_plan = plan_moves(cached_weak);
            cache_valid = true;
        }
        return cached_plan;
    }

    Move decide_for(std::size_t i) {
        const Plan& P = plan();
        for (const auto& mv : P.movers)
            if (mv.from == pos[i]) return Move{mv.dest, mv.rule};
        return Move{pos[i], MoveRule::none};
    }

    void record_look(std::size_t i) {
        trace.events.push_back({tick, static_cast<std::int32_t>(i), EventKind::look, pos[i],
                                pos[i], tick, MoveRule::none});
        ++looks;
    }

    void commit(std::size_t i, const Move& m, std::int64_t snapshot_tick) {
        bool moved = m.dest != pos[i];
        trace.events.push_back({tick, static_cast<std::int32_t>(i),
                                moved ? EventKind::move : EventKind::null_move, pos[i], m.dest,
                                snapshot_tick, m.rule});
        if (moved) {
            cfg.move(pos[i], m.dest);
            traveled[i] += manhattan(pos[i], m.dest);
            pos[i] = m.dest;
            cache_valid = false;
        }
    }

    bool gathered() const { return cfg.occupied_count() == 1; }
};

RunResult finish(Engine& e, bool terminated, std::int64_t k0) {
    RunResult r;
    r.terminated = terminated;
    r.final_config = e.cfg;
    r.activations = e.looks;
    r.per_robot_distance = e.traveled;
    r.initial_radius = k0;
    if (e.gathered()) r.gathering_node = e.cfg.counts().begin()->first;
    std::int64_t worst = 0;
    for (auto d : e.traveled) worst = std::max(worst, d);
    r.excess_travel = worst - k0;
    return r;
}

} // namespace

std::pair<RunResult, Trace> run(const Configuration& c0, const SchedulerSpec& sched,
                                std::int64_t max_activations) {
    RunResult bad;
    if (c0.robot_count() == 0) {
        bad.error = "empty configuration";
        return {bad, {}};
    }
    if (!c0.all_distinct() && c0.occupied_count() > 1) {
        // a fully gathered multiset is already final and is accepted as-is
        bad.error = "initial positions must be distinct";
        return {bad, {}};
    }
    GatherClass cls = classify(c0);
    if (cls.kind == GatherKind::ungatherable) {
        bad.error = std::string("ungatherable: ") + reason_name(cls.reason);
        return {bad, {}};
    }
    if (c0.robot_count() < 9 && c0.occupied_count() > 1) {
        bad.error = "algorithm requires n >= 9";
        return {bad, {}};
    }

    Engine e(c0);
    std::int64_t k0 = med_radius(c0);
    if (max_activations <= 0) max_activations = default_max_activations(c0);
    std::size_t n = e.pos.size();
    std::int64_t fairness = sched.fairness_window > 0 ? sched.fairness_window
                                                      : 4 * static_cast<std::int64_t>(n);
    Rng rng(sched.seed ^ 0x67726964ULL);

    if (sched.kind == SchedKind::fsync || sched.kind == SchedKind::ssync) {
        std::vector<std::int64_t> idle_rounds(n, 0);
        while (e.looks < max_activations) {
            if (e.gathered()) return {finish(e, true, k0), std::move(e.trace)};
            // active set: everyone under FSYNC, a fair nonempty subset under SSYNC
            std::vector<std::size_t> active;
            if (sched.kind == SchedKind::fsync) {
                for (std::size_t i = 0; i < n; ++i) active.push_back(i);
            } else {
                for (std::size_t i = 0; i < n; ++i)
                    if (idle_rounds[i] + 1 >= fairness || rng.coin()) active.push_back(i);
                if (active.empty()) active.push_back(rng.below(n));
            }
            std::int64_t round_tick = e.tick;
            std::vector<std::pair<std::size_t, Move>> decisions;
            for (auto i : active) {
                e.record_look(i);
                decisions.push_back({i, e.decide_for(i)});
            }
            for (std::size_t i = 0; i < n; ++i) idle_rounds[i] += 1;
            for (auto& [i, m] : decisions) {
                e.commit(i, m, round_tick);
                idle_rounds[i] = 0;
            }
            ++e.tick;
        }
        return {finish(e, e.gathered(), k0), std::move(e.trace)};
    }

    // ASYNC: per-robot look/move events with bounded staleness and fairness.
    struct Pending {
        Move move;
        std::int64_t look_tick = 0;
        std::int64_t commits_seen = 0; // other-robot move commits since the look
    };
    std::vector<std::optional<Pending>> pending(n);
    std::vector<std::int64_t> since_active(n, 0);
    std::int64_t delay_cap = sched.max_look_to_move_delay;

    while (e.looks < max_activations) {
        // quiescent: gathered and every outstanding decision is a null move
        bool live_pending = false;
        for (std::size_t i = 0; i < n; ++i)
            if (pending[i] && pending[i]->move.dest != e.pos[i]) live_pending = true;
        if (e.gathered() && !live_pending) return {finish(e, true, k0), std::move(e.trace)};

        // forced commits: robots whose staleness budget is exhausted
        std::vector<std::size_t> must_commit, may_commit, may_look, starved;
        for (std::size_t i = 0; i < n; ++i) {
            if (pending[i]) {
                may_commit.push_back(i);
                if (pending[i]->commits_seen >= delay_cap) must_commit.push_back(i);
            } else {
                may_look.push_back(i);
                if (since_active[i] >= fairness - 1) starved.push_back(i);
            }
        }

        std::size_t actor;
        bool do_commit;
        if (!must_commit.empty()) {
            actor = must_commit[sched.nasty ? 0 : rng.below(must_commit.size())];
            do_commit = true;
        } else if (!starved.empty() && !may_look.empty()) {
            actor = starved[0];
            do_commit = false;
        } else if (sched.nasty) {
            // maximize staleness: look with everyone possible before committing
            if (!may_look.empty()) {
                actor = may_look[rng.below(may_look.size())];
                do_commit = false;
            } else {
                actor = may_commit[rng.below(may_commit.size())];
                do_commit = true;
            }
        } else {
            std::size_t total = may_commit.size() + may_look.size();
            std::size_t pick = rng.below(total);
            if (pick < may_commit.size()) {
                actor = may_commit[pick];
                do_commit = true;
            } else {
                actor = may_look[pick - may_commit.size()];
                do_commit = false;
            }
        }

        if (do_commit) {
            Pending p = *pending[actor];
            pending[actor].reset();
            bool moved = p.move.dest != e.pos[actor];
            e.commit(actor, p.move, p.look_tick);
            ++e.tick;
            if (moved)
                for (auto& q : pending)
                    if (q) q->commits_seen += 1;
        } else {
            e.record_look(actor);
            Move m = e.decide_for(actor);
            pending[actor] = Pending{m, e.tick, 0};
            since_active[actor] = 0;
            ++e.tick;
            for (std::size_t i = 0; i < n; ++i)
                if (i != actor) since_active[i] += 1;
        }
    }
    return {finish(e, e.gathered(), k0), std::move(e.trace)};
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    os << (ok ? "PASS" : "FAIL") << " terminated=" << terminated
       << " minmax_membership=" << gathered_at_initial_minmax
       << " multiplicity_bound=" << multiplicity_bound_ok << " target_stable=" << target_stable
       << " class_preserved=" << class_preserved << " excess_travel=" << excess_travel;
    for (const auto& v : violations) os << "\n  violation: " << v;
    return os.str();
}

VerifyReport verify(const Configuration& c0, const RunResult& result, const Trace& trace) {
    VerifyReport rep;
    rep.excess_travel = result.excess_travel;
    rep.terminated = result.terminated;
    if (!result.error.empty()) {
        rep.violations.push_back("run error: " + result.error);
        return rep;
    }
    if (!rep.terminated) rep.violations.push_back("run did not terminate within the cutoff");

    MinMaxSet oracle = minmax_nodes_bruteforce(c0);
    if (result.gathering_node) {
        rep.gathered_at_initial_minmax = oracle.contains(*result.gathering_node);
        if (!rep.gathered_at_initial_minmax)
            rep.violations.push_back("gathering node is not a min-max node of the initial configuration");
    } else {
        rep.violations.push_back("no gathering node");
    }

    GatherClass cls0 = classify(c0);
    std::vector<GridNode> candidates = target_candidates(c0.weak());
    bool multiplicity_exempt = cls0.kind == GatherKind::i4 ||
                               (cls0.kind == GatherKind::i1 && cls0.rotation.has_value());

    rep.multiplicity_bound_ok = true;
    rep.target_stable = true;
    rep.class_preserved = true;

    // Replay the trace, checking the per-state invariants after every commit.
    Configuration cur = c0;
    std::optional<GridNode> prev_target;
    bool prev_target_occupied = false;
    auto check_state = [&]() {
        int multiples = 0;
        for (const auto& [p, k] : cur.counts())
            if (k >= 2) ++multiples;
        if (!multiplicity_exempt && multiples > 1 && rep.multiplicity_bound_ok) {
            rep.multiplicity_bound_ok = false;
            rep.violations.push_back("more than one multiplicity node");
        }
        if (cur.occupied_count() == 1) return;
        WeakConfig w = cur.weak();
        if (multiples == 0) {
            // creating phase: the recomputed target stays within the initial
            // candidates, and once the target is occupied it may move only to
            // another occupied candidate (a robot transiting the sibling
            // candidate right before the merge)
            auto t = select_target(w);
            if (t && rep.target_stable) {
                if (std::find(candidates.begin(), candidates.end(), *t) == candidates.end()) {
                    rep.target_stable = false;
                    rep.violations.push_back("target left the initial candidate set");
                }
                if (prev_target && prev_target_occupied && *t != *prev_target &&
                    cur.count_at(*t) == 0 && rep.target_stable) {
                    rep.target_stable = false;
                    rep.violations.push_back("occupied target abandoned");
                }
            }
            if (t) {
                prev_target = t;
                prev_target_occupied = cur.count_at(*t) > 0;
            }
            if (rep.class_preserved && classify(w).kind == GatherKind::ungatherable) {
                rep.class_preserved = false;
                rep.violations.push_back("configuration became ungatherable");
            }
        }
    };

    std::vector<GridNode> positions;
    for (const auto& [p, k] : c0.counts())
        for (int i = 0; i < k; ++i) positions.push_back(p);

    check_state();
    for (const auto& ev : trace.events) {
        if (ev.kind == EventKind::look) continue;
        std::size_t i = static_cast<std::size_t>(ev.actor);
        if (i >= positions.size() || positions[i] != ev.from) {
            rep.violations.push_back("trace inconsistency: actor not at recorded origin");
            break;
        }
        if (manhattan(ev.from, ev.to) > 1) {
            rep.violations.push_back("teleporting robot in trace");
            break;
        }
        if (ev.kind == EventKind::move) {
            cur.move(ev.from, ev.to);
            positions[i] = ev.to;
            check_state();
        }
    }

    if (result.terminated && cur.occupied_count() != 1)
        rep.violations.push_back("trace replay does not end gathered");

    rep.ok = rep.violations.empty();
    return rep;
}

} // namespace gridgather
