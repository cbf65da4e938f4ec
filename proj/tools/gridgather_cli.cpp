// Command-line front end, a client of the shared-library C API.
//
//   gridgather analyze  <config.json>
//   gridgather oracle   <config.json>
//   gridgather simulate <config.json> [--scheduler K] [--seed S]
//                       [--trace-out F] [--render] [--max-activations N]
//   gridgather verify   [--count N] [--n-range LO HI] [--box B] [--seed S]
//
// Exit codes: 0 ok, 2 parse error, 3 ungatherable, 4 cutoff, 5 oracle bound.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gridgather.h"

namespace {

int fail_with(gg_status s, const char* detail) {
    std::fprintf(stderr, "error: %s%s%s\n", gg_status_message(s), detail ? ": " : "",
                 detail ? detail : "");
    return static_cast<int>(s);
}

gg_config* load_config(const std::string& path, int& exit_code) {
    std::ifstream in(path);
    if (!in) {
        std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
        exit_code = GG_ERR_PARSE;
        return nullptr;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    gg_config* cfg = nullptr;
    char* msg = nullptr;
    gg_status s = gg_config_parse(buf.str().c_str(), &cfg, &msg);
    if (s != GG_OK) {
        std::fprintf(stderr, "error: %s: %s\n", path.c_str(), msg ? msg : "parse error");
        gg_string_free(msg);
        exit_code = static_cast<int>(s);
        return nullptr;
    }
    exit_code = 0;
    return cfg;
}

uint64_t env_seed() {
    const char* s = std::getenv("GRIDGATHER_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"min-max gathering on the integer grid"};
    app.require_subcommand(1);

    std::string path;
    auto* analyze = app.add_subcommand("analyze", "report min-max structure and gather class");
    analyze->add_option("config", path, "configuration file")->required();
    auto* oracle = app.add_subcommand("oracle", "brute-force min-max set and distance table");
    oracle->add_option("config", path, "configuration file")->required();

    auto* simulate = app.add_subcommand("simulate", "run the gathering algorithm");
    simulate->add_option("config", path, "configuration file")->required();
    std::string sched_name = "async";
    uint64_t seed = env_seed();
    std::string trace_out;
    bool render = false;
    int64_t max_activations = 0;
    simulate->add_option("--scheduler", sched_name, "fsync | ssync | async | async-nasty");
    simulate->add_option("--seed", seed, "scheduler seed (default $GRIDGATHER_SEED)");
    simulate->add_option("--trace-out", trace_out, "write the event trace to this file");
    simulate->add_flag("--render", render, "print initial and final configurations");
    simulate->add_option("--max-activations", max_activations, "activation cutoff (0: default)");

    auto* verify = app.add_subcommand("verify", "seeded random verification campaign");
    int64_t count = 200, box = 15;
    std::vector<int64_t> n_range{1, 30};
    uint64_t vseed = env_seed();
    verify->add_option("--count", count, "number of random configurations");
    verify->add_option("--n-range", n_range, "robot count range LO HI")->expected(2);
    verify->add_option("--box", box, "coordinates drawn from [-box, box]");
    verify->add_option("--seed", vseed, "campaign seed (default $GRIDGATHER_SEED)");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed() || oracle->parsed()) {
        int rc = 0;
        gg_config* cfg = load_config(path, rc);
        if (!cfg) return rc;
        gg_analysis* a = nullptr;
        gg_status s = analyze->parsed() ? gg_analyze(cfg, &a) : gg_oracle(cfg, 0, &a);
        if (s != GG_OK) {
            gg_config_free(cfg);
            return fail_with(s, path.c_str());
        }
        std::printf("%s", gg_analysis_report_text(a));
        gg_analysis_free(a);
        gg_config_free(cfg);
        return 0;
    }

    if (simulate->parsed()) {
        int rc = 0;
        gg_config* cfg = load_config(path, rc);
        if (!cfg) return rc;

        gg_sched_spec spec{};
        spec.kind = GG_SCHED_ASYNC;
        if (sched_name == "fsync") spec.kind = GG_SCHED_FSYNC;
        else if (sched_name == "ssync") spec.kind = GG_SCHED_SSYNC;
        else if (sched_name == "async") spec.kind = GG_SCHED_ASYNC;
        else if (sched_name == "async-nasty") { spec.kind = GG_SCHED_ASYNC; spec.nasty = 1; }
        else {
            gg_config_free(cfg);
            return fail_with(GG_ERR_INVALID, sched_name.c_str());
        }
        spec.seed = seed;
        // file-embedded scheduler settings are defaults; flags win
        gg_sched_spec from_file{};
        if (gg_config_scheduler(cfg, &from_file)) {
            if (simulate->count("--scheduler") == 0) spec.kind = from_file.kind;
            if (simulate->count("--seed") == 0 && !std::getenv("GRIDGATHER_SEED"))
                spec.seed = from_file.seed;
            spec.fairness_window = from_file.fairness_window;
            spec.max_look_to_move_delay = from_file.max_look_to_move_delay;
            if (simulate->count("--scheduler") == 0) spec.nasty = from_file.nasty;
        }
        int64_t file_max = 0;
        if (max_activations == 0 && gg_config_max_activations(cfg, &file_max))
            max_activations = file_max;

        if (render) {
            gg_analysis* a = nullptr;
            if (gg_analyze(cfg, &a) == GG_OK) {
                std::printf("%s\n", gg_analysis_report_text(a));
                gg_analysis_free(a);
            }
        }

        gg_run* r = nullptr;
        gg_status s = gg_simulate(cfg, &spec, max_activations, &r);
        if (s == GG_ERR_UNGATHERABLE) {
            gg_analysis* a = nullptr;
            if (gg_analyze(cfg, &a) == GG_OK) {
                std::fprintf(stderr, "ungatherable (%s) or below population bound\n",
                             gg_analysis_class_reason(a));
                gg_analysis_free(a);
            }
            gg_config_free(cfg);
            return GG_ERR_UNGATHERABLE;
        }
        if (!r) {
            gg_config_free(cfg);
            return fail_with(s, nullptr);
        }

        std::printf("%s", gg_run_summary(r));
        if (render) std::printf("final:\n%s", gg_run_final_ascii(r));
        if (!trace_out.empty()) {
            std::ofstream out(trace_out);
            out << gg_run_trace(r);
        }
        char* report = nullptr;
        int ok = gg_run_verify(cfg, r, &report);
        std::printf("verify: %s\n", report ? report : "(no report)");
        gg_string_free(report);

        int rc_final = 0;
        if (s == GG_ERR_CUTOFF) rc_final = GG_ERR_CUTOFF;
        else if (!ok) rc_final = 1;
        gg_run_free(r);
        gg_config_free(cfg);
        return rc_final;
    }

    if (verify->parsed()) {
        char* report = nullptr;
        gg_status s = gg_verify_campaign(count, n_range[0], n_range[1], box, vseed, &report);
        std::printf("%s", report ? report : "");
        gg_string_free(report);
        return s == GG_OK ? 0 : 1;
    }
    return 0;
}
