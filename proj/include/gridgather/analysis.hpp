#pragma once

#include <string>

#include "gridgather/algorithm.hpp"
#include "gridgather/config.hpp"

namespace gridgather {

// Everything the analyze command reports about one configuration.
struct Analysis {
    Configuration config;
    Rect box;
    MinMaxSet vm;
    GmShape shape;
    std::vector<coord_t> centralities;   // aligned with vm.nodes
    std::vector<GridNode> weber_nodes;   // argmin-centrality subset of vm
    std::vector<Isometry> autos;
    GatherClass cls;

    std::string text() const; // human-readable report with the grid sketch
    std::string to_json() const;
};

Analysis analyze(const Configuration& c);

// Brute-force view of the same data: oracle min-max set plus the per-node
// max-distance table over the scanned window.
struct OracleReport {
    MinMaxSet vm;
    std::string table;

    std::string text() const;
};

OracleReport oracle_report(const Configuration& c, std::size_t max_scan_nodes = 4000000);

} // namespace gridgather
