#include "gridgather.h"

#include <array>
#include <cstdlib>
#include <cstring>
#include <set>
#include <sstream>

#include "gridgather/analysis.hpp"
#include "gridgather/config_io.hpp"
#include "gridgather/rng.hpp"
#include "gridgather/simulator.hpp"

using namespace gridgather;

struct gg_config {
    ConfigFile file;
};

struct gg_analysis {
    Analysis a;
    std::string text;
    std::string json;
    std::string reason;
};

struct gg_run {
    RunResult result;
    std::string trace_text;
    std::string summary;
    std::string final_ascii;
};

extern "C" {

unsigned gg_version(void) { return 10000; } // 1.0.0

const char* gg_status_message(gg_status s) {
    switch (s) {
        case GG_OK: return "ok";
        case GG_ERR_PARSE: return "parse error";
        case GG_ERR_UNGATHERABLE: return "configuration is ungatherable";
        case GG_ERR_CUTOFF: return "activation cutoff reached before termination";
        case GG_ERR_BOUND: return "scan bound exceeded";
        case GG_ERR_INVALID: return "invalid argument";
    }
    return "unknown status";
}

void gg_string_free(char* s) { std::free(s); }

static char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gg_status gg_config_parse(const char* json_text, gg_config** out, char** err_msg) {
    if (!json_text || !out) return GG_ERR_INVALID;
    try {
        auto* c = new gg_config{parse_config(json_text)};
        *out = c;
        return GG_OK;
    } catch (const ParseError& e) {
        if (err_msg) *err_msg = dup_string(e.what());
        return GG_ERR_PARSE;
    }
}

gg_status gg_config_from_points(const int64_t* xy_pairs, size_t n, gg_config** out) {
    if (!xy_pairs || !out || n == 0) return GG_ERR_INVALID;
    auto* c = new gg_config{};
    for (size_t i = 0; i < n; ++i)
        c->file.robots.add(GridNode{xy_pairs[2 * i], xy_pairs[2 * i + 1]});
    *out = c;
    return GG_OK;
}

void gg_config_free(gg_config* c) { delete c; }

int64_t gg_config_robot_count(const gg_config* c) { return c ? c->file.robots.robot_count() : 0; }

int gg_config_scheduler(const gg_config* c, gg_sched_spec* out) {
    if (!c || !c->file.scheduler) return 0;
    if (out) {
        const auto& s = *c->file.scheduler;
        out->kind = static_cast<int>(s.kind);
        out->seed = s.seed;
        out->fairness_window = s.fairness_window;
        out->max_look_to_move_delay = s.max_look_to_move_delay;
        out->nasty = s.nasty ? 1 : 0;
    }
    return 1;
}

int gg_config_max_activations(const gg_config* c, int64_t* out) {
    if (!c || !c->file.max_activations) return 0;
    if (out) *out = *c->file.max_activations;
    return 1;
}

static gg_analysis* make_analysis(const Analysis& a) {
    auto* out = new gg_analysis{a, a.text(), a.to_json(), ""};
    if (a.cls.kind == GatherKind::ungatherable) out->reason = reason_name(a.cls.reason);
    return out;
}

gg_status gg_analyze(const gg_config* c, gg_analysis** out) {
    if (!c || !out) return GG_ERR_INVALID;
    *out = make_analysis(analyze(c->file.robots));
    return GG_OK;
}

gg_status gg_oracle(const gg_config* c, size_t max_scan_nodes, gg_analysis** out) {
    if (!c || !out) return GG_ERR_INVALID;
    if (max_scan_nodes == 0) max_scan_nodes = 4000000;
    try {
        OracleReport rep = oracle_report(c->file.robots, max_scan_nodes);
        Analysis a = analyze(c->file.robots);
        a.vm = rep.vm; // report the brute-force set
        auto* res = new gg_analysis{a, rep.text(), a.to_json(), ""};
        *out = res;
        return GG_OK;
    } catch (const std::invalid_argument&) {
        return GG_ERR_BOUND;
    }
}

void gg_analysis_free(gg_analysis* a) { delete a; }

int64_t gg_analysis_radius(const gg_analysis* a) { return a->a.vm.k; }
size_t gg_analysis_minmax_count(const gg_analysis* a) { return a->a.vm.nodes.size(); }
void gg_analysis_minmax_node(const gg_analysis* a, size_t i, int64_t* x, int64_t* y) {
    if (i < a->a.vm.nodes.size()) {
        if (x) *x = a->a.vm.nodes[i].x;
        if (y) *y = a->a.vm.nodes[i].y;
    }
}
int gg_analysis_shape(const gg_analysis* a) { return static_cast<int>(a->a.shape); }
int gg_analysis_gather_class(const gg_analysis* a) { return static_cast<int>(a->a.cls.kind); }
const char* gg_analysis_class_reason(const gg_analysis* a) { return a->reason.c_str(); }
const char* gg_analysis_report_text(const gg_analysis* a) { return a->text.c_str(); }
const char* gg_analysis_report_json(const gg_analysis* a) { return a->json.c_str(); }

gg_status gg_simulate(const gg_config* c, const gg_sched_spec* sched, int64_t max_activations,
                      gg_run** out) {
    if (!c || !out) return GG_ERR_INVALID;
    SchedulerSpec spec;
    if (sched) {
        spec.kind = static_cast<SchedKind>(sched->kind);
        spec.seed = sched->seed;
        spec.fairness_window = sched->fairness_window;
        spec.max_look_to_move_delay = sched->max_look_to_move_delay;
        spec.nasty = sched->nasty != 0;
    }
    auto [result, trace] = run(c->file.robots, spec, max_activations);
    if (!result.error.empty()) return GG_ERR_UNGATHERABLE;

    std::ostringstream sum;
    sum << "terminated: " << (result.terminated ? "yes" : "no") << "\n";
    if (result.gathering_node)
        sum << "gathering node: (" << result.gathering_node->x << ", "
            << result.gathering_node->y << ")\n";
    sum << "activations: " << result.activations << "\n";
    sum << "initial k: " << result.initial_radius << "\n";
    sum << "excess travel: " << result.excess_travel << "\n";

    std::string sketch = render_ascii(result.final_config);
    auto* r = new gg_run{std::move(result), trace.text(), sum.str(), std::move(sketch)};
    *out = r;
    return r->result.terminated ? GG_OK : GG_ERR_CUTOFF;
}

void gg_run_free(gg_run* r) { delete r; }

int gg_run_terminated(const gg_run* r) { return r->result.terminated ? 1 : 0; }
int gg_run_gathering_node(const gg_run* r, int64_t* x, int64_t* y) {
    if (!r->result.gathering_node) return 0;
    if (x) *x = r->result.gathering_node->x;
    if (y) *y = r->result.gathering_node->y;
    return 1;
}
int64_t gg_run_activations(const gg_run* r) { return r->result.activations; }
int64_t gg_run_excess_travel(const gg_run* r) { return r->result.excess_travel; }
const char* gg_run_trace(const gg_run* r) { return r->trace_text.c_str(); }
const char* gg_run_summary(const gg_run* r) { return r->summary.c_str(); }
const char* gg_run_final_ascii(const gg_run* r) { return r->final_ascii.c_str(); }

int gg_run_verify(const gg_config* c, const gg_run* r, char** report) {
    std::istringstream is(r->trace_text);
    std::string header;
    std::getline(is, header);
    Trace trace;
    SimEvent ev;
    std::string action;
    while (is >> ev.tick >> ev.actor >> action >> ev.from.x >> ev.from.y >> ev.to.x >> ev.to.y >>
           ev.snapshot_tick) {
        ev.kind = action == "look" ? EventKind::look
                  : action == "move" ? EventKind::move
                                     : EventKind::null_move;
        trace.events.push_back(ev);
    }
    VerifyReport rep = verify(c->file.robots, r->result, trace);
    if (report) *report = dup_string(rep.summary());
    return rep.ok ? 1 : 0;
}

gg_status gg_verify_campaign(int64_t count, int64_t n_min, int64_t n_max, int64_t box,
                             uint64_t seed, char** report) {
    if (count <= 0 || n_min < 1 || n_max < n_min || box < 1) return GG_ERR_INVALID;
    Rng rng(seed);
    std::ostringstream os;
    int64_t oracle_fail = 0, shape_violations = 0, run_fail = 0, gatherable = 0, ungatherable = 0;
    std::array<int64_t, 4> shape_tally{};

    for (int64_t t = 0; t < count; ++t) {
        int64_t n = rng.range(n_min, n_max);
        std::set<GridNode> pts;
        while (static_cast<int64_t>(pts.size()) < n)
            pts.insert(GridNode{rng.range(-box, box), rng.range(-box, box)});
        Configuration c(std::vector<GridNode>(pts.begin(), pts.end()));

        MinMaxSet fast = minmax_nodes(c);
        MinMaxSet slow = minmax_nodes_bruteforce(c);
        if (fast.k != slow.k || fast.nodes != slow.nodes) {
            ++oracle_fail;
            continue;
        }
        try {
            shape_tally[static_cast<int>(classify_gm(fast))] += 1;
        } catch (const CharacterizationViolation&) {
            ++shape_violations;
            continue;
        }

        GatherClass cls = classify(c);
        if (cls.kind == GatherKind::ungatherable) {
            ++ungatherable;
            continue;
        }
        if (c.robot_count() < 9) continue;
        ++gatherable;
        SchedulerSpec spec;
        spec.kind = SchedKind::async_sched;
        spec.seed = rng.next();
        spec.max_look_to_move_delay = 2 * n;
        spec.fairness_window = 4 * n;
        auto [result, trace] = run(c, spec);
        VerifyReport rep = verify(c, result, trace);
        if (!rep.ok) ++run_fail;
    }

    os << "configurations: " << count << "\n";
    os << "oracle mismatches: " << oracle_fail << "\n";
    os << "characterization violations: " << shape_violations << "\n";
    os << "shapes: single=" << shape_tally[0] << " step=" << shape_tally[1]
       << " disconnected=" << shape_tally[2] << " four_cycle=" << shape_tally[3] << "\n";
    os << "ungatherable: " << ungatherable << "\n";
    os << "end-to-end runs: " << gatherable << ", failures: " << run_fail << "\n";
    bool ok = oracle_fail == 0 && shape_violations == 0 && run_fail == 0;
    os << (ok ? "PASS" : "FAIL") << "\n";
    if (report) *report = dup_string(os.str());
    return ok ? GG_OK : GG_ERR_INVALID;
}

} // extern "C"
