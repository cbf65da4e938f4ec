#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gridgather/types.hpp"

namespace gridgather {

enum class Occupancy : int { empty = 0, single = 1, multiple = 2 };

// A labeled occupied node. Counts >= 2 are collapsed to `multiple`; this is
// the only form in which occupancy ever crosses into the algorithm layer
// (global-weak multiplicity detection).
struct LabeledNode {
    GridNode pos;
    Occupancy label = Occupancy::single;
    auto operator<=>(const LabeledNode&) const = default;
};

// The weak view of a configuration: sorted occupied nodes with collapsed
// labels. This is what a snapshot carries besides the observer's position.
using WeakConfig = std::vector<LabeledNode>;

// Exact multiset of robot positions. The simulator keeps true counts for
// bookkeeping; everything handed to the algorithm goes through weak().
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(const std::vector<GridNode>& robots) {
        for (const auto& p : robots) add(p);
    }

    void add(GridNode p, int k = 1) {
        count_[p] += k;
        n_ += k;
    }
    void move(GridNode from, GridNode to) {
        auto it = count_.find(from);
        assert(it != count_.end() && it->second > 0);
        if (--it->second == 0) count_.erase(it);
        count_[to] += 1;
    }

    int count_at(GridNode p) const {
        auto it = count_.find(p);
        return it == count_.end() ? 0 : it->second;
    }
    coord_t robot_count() const { return n_; }
    std::size_t occupied_count() const { return count_.size(); }
    bool all_distinct() const {
        for (const auto& [p, k] : count_)
            if (k > 1) return false;
        return true;
    }

    std::vector<GridNode> occupied_nodes() const {
        std::vector<GridNode> out;
        out.reserve(count_.size());
        for (const auto& [p, k] : count_) out.push_back(p);
        return out;
    }

    WeakConfig weak() const {
        WeakConfig out;
        out.reserve(count_.size());
        for (const auto& [p, k] : count_)
            out.push_back(LabeledNode{p, k >= 2 ? Occupancy::multiple : Occupancy::single});
        return out;
    }

    const std::map<GridNode, int>& counts() const { return count_; }

    bool operator==(const Configuration& o) const { return count_ == o.count_; }

private:
    std::map<GridNode, int> count_;
    coord_t n_ = 0;
};

inline Occupancy lambda_of(const Configuration& c, GridNode v) {
    int k = c.count_at(v);
    return k == 0 ? Occupancy::empty : (k == 1 ? Occupancy::single : Occupancy::multiple);
}

inline Occupancy lambda_of(const WeakConfig& w, GridNode v) {
    // WeakConfig is sorted by position.
    auto it = std::lower_bound(w.begin(), w.end(), v,
                               [](const LabeledNode& a, const GridNode& b) { return a.pos < b; });
    if (it == w.end() || it->pos != v) return Occupancy::empty;
    return it->label;
}

struct Snapshot {
    WeakConfig entries;
    GridNode self;
};

inline Snapshot snapshot_of(const Configuration& c, GridNode self_pos) {
    assert(c.count_at(self_pos) > 0 && "snapshot observer must be at an occupied node");
    return Snapshot{c.weak(), self_pos};
}

inline std::vector<GridNode> occupied_of(const WeakConfig& w) {
    std::vector<GridNode> out;
    out.reserve(w.size());
    for (const auto& e : w) out.push_back(e.pos);
    return out;
}

} // namespace gridgather
