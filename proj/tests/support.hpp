#pragma once

#include <set>
#include <vector>

#include "gridgather/config.hpp"
#include "gridgather/rng.hpp"

namespace ggtest {

using namespace gridgather;

// n distinct nodes with coordinates in [-box, box].
inline std::vector<GridNode> random_nodes(Rng& rng, int n, coord_t box) {
    std::set<GridNode> pts;
    while (static_cast<int>(pts.size()) < n)
        pts.insert(GridNode{rng.range(-box, box), rng.range(-box, box)});
    return {pts.begin(), pts.end()};
}

inline Configuration random_config(Rng& rng, int n, coord_t box) {
    return Configuration(random_nodes(rng, n, box));
}

} // namespace ggtest
