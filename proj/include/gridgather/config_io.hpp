#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "gridgather/config.hpp"
#include "gridgather/simulator.hpp"

namespace gridgather {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// On-disk configuration file:
//   {
//     "robots": [[x, y], ...],
//     "scheduler": { "kind": "fsync|ssync|async|async-nasty", "seed": 0,
//                    "fairness_window": 0, "max_look_to_move_delay": 0 },
//     "limits": { "max_activations": 0 }
//   }
// Only "robots" is required.
struct ConfigFile {
    Configuration robots;
    std::optional<SchedulerSpec> scheduler;
    std::optional<std::int64_t> max_activations;
};

ConfigFile parse_config(const std::string& json_text);
std::string config_to_json(const Configuration& c);

// Plain-character sketch of a configuration: robots 'R', multiplicities 'M',
// min-max nodes '*', a robot on a min-max node '@', empty '.'.
std::string render_ascii(const Configuration& c);

} // namespace gridgather
