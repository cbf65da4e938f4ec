#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "gridgather.h"

namespace {

const char* kI1Config = R"({
  "robots": [[2,2],[-2,2],[-2,-2],[2,-2],[0,0],[1,0],[0,1],[-1,-1],[2,0]],
  "scheduler": {"kind": "async", "seed": 9, "fairness_window": 36, "max_look_to_move_delay": 18}
})";

} // namespace

TEST_CASE("config parse and errors") {
    gg_config* c = nullptr;
    char* err = nullptr;
    REQUIRE(gg_config_parse(kI1Config, &c, &err) == GG_OK);
    CHECK(gg_config_robot_count(c) == 9);
    gg_sched_spec spec{};
    REQUIRE(gg_config_scheduler(c, &spec) == 1);
    CHECK(spec.kind == GG_SCHED_ASYNC);
    CHECK(spec.seed == 9);
    gg_config_free(c);

    gg_config* bad = nullptr;
    CHECK(gg_config_parse("{\"robots\": [[1]]}", &bad, &err) == GG_ERR_PARSE);
    CHECK(err != nullptr);
    gg_string_free(err);

    CHECK(gg_config_parse("not json", &bad, nullptr) == GG_ERR_PARSE);
}

TEST_CASE("analysis handle") {
    gg_config* c = nullptr;
    REQUIRE(gg_config_parse(kI1Config, &c, nullptr) == GG_OK);
    gg_analysis* a = nullptr;
    REQUIRE(gg_analyze(c, &a) == GG_OK);
    CHECK(gg_analysis_radius(a) == 4);
    REQUIRE(gg_analysis_minmax_count(a) == 1);
    int64_t x = 99, y = 99;
    gg_analysis_minmax_node(a, 0, &x, &y);
    CHECK(x == 0);
    CHECK(y == 0);
    CHECK(gg_analysis_shape(a) == GG_SHAPE_SINGLE_NODE);
    CHECK(gg_analysis_gather_class(a) == GG_CLASS_I1);
    CHECK(std::strstr(gg_analysis_report_text(a), "class: I1") != nullptr);
    CHECK(std::strstr(gg_analysis_report_json(a), "\"k\": 4") != nullptr);
    gg_analysis_free(a);

    gg_analysis* o = nullptr;
    REQUIRE(gg_oracle(c, 0, &o) == GG_OK);
    CHECK(gg_analysis_radius(o) == 4);
    CHECK(gg_analysis_minmax_count(o) == 1);
    gg_analysis_free(o);

    // bound exceeded
    int64_t far[] = {0, 0, 100000, 100000};
    gg_config* wide = nullptr;
    REQUIRE(gg_config_from_points(far, 2, &wide) == GG_OK);
    gg_analysis* ob = nullptr;
    CHECK(gg_oracle(wide, 0, &ob) == GG_ERR_BOUND);
    gg_config_free(wide);
    gg_config_free(c);
}

TEST_CASE("simulation through the C surface") {
    gg_config* c = nullptr;
    REQUIRE(gg_config_parse(kI1Config, &c, nullptr) == GG_OK);
    gg_sched_spec spec{};
    gg_config_scheduler(c, &spec);

    gg_run* r = nullptr;
    REQUIRE(gg_simulate(c, &spec, 0, &r) == GG_OK);
    CHECK(gg_run_terminated(r) == 1);
    int64_t x = 99, y = 99;
    REQUIRE(gg_run_gathering_node(r, &x, &y) == 1);
    CHECK(x == 0);
    CHECK(y == 0);
    CHECK(gg_run_activations(r) > 0);
    CHECK(std::strstr(gg_run_trace(r), "gridgather-trace v1") != nullptr);
    char* report = nullptr;
    CHECK(gg_run_verify(c, r, &report) == 1);
    CHECK(report != nullptr);
    gg_string_free(report);

    // determinism across the C surface
    gg_run* r2 = nullptr;
    REQUIRE(gg_simulate(c, &spec, 0, &r2) == GG_OK);
    CHECK(std::string(gg_run_trace(r)) == gg_run_trace(r2));
    gg_run_free(r2);
    gg_run_free(r);
    gg_config_free(c);
}

TEST_CASE("ungatherable and small populations refuse") {
    int64_t pair[] = {0, 0, 1, 0};
    gg_config* c = nullptr;
    REQUIRE(gg_config_from_points(pair, 2, &c) == GG_OK);
    gg_run* r = nullptr;
    CHECK(gg_simulate(c, nullptr, 0, &r) == GG_ERR_UNGATHERABLE);
    gg_config_free(c);

    int64_t three[] = {0, 0, 2, 0, 5, 5};
    gg_config* c3 = nullptr;
    REQUIRE(gg_config_from_points(three, 3, &c3) == GG_OK);
    CHECK(gg_simulate(c3, nullptr, 0, &r) == GG_ERR_UNGATHERABLE);
    gg_config_free(c3);
}

TEST_CASE("campaign smoke") {
    char* report = nullptr;
    CHECK(gg_verify_campaign(40, 1, 14, 8, 99, &report) == GG_OK);
    REQUIRE(report != nullptr);
    CHECK(std::strstr(report, "PASS") != nullptr);
    gg_string_free(report);
}
