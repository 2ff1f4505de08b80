#pragma once

#include <map>
#include <string>
#include <utility>

#include "mpinv/grid.hpp"

namespace mpinv {

// Integer-valued function on ordered grid pairs (u, v) with u <= v, supported
// inside a box.  Absent entries are zero.  The setter accepts arbitrary pairs
// so that structurally invalid tables can exist and be rejected downstream.
class RankInvariant {
public:
    GridBox box;
    std::map<std::pair<Point, Point>, long long> values;

    RankInvariant() = default;
    explicit RankInvariant(GridBox b) : box(std::move(b)) {}

    long long at(const Point& u, const Point& v) const {
        auto it = values.find({u, v});
        return it == values.end() ? 0 : it->second;
    }

    void set(const Point& u, const Point& v, long long val) {
        if (val == 0)
            values.erase({u, v});
        else
            values[{u, v}] = val;
    }

    void add(const Point& u, const Point& v, long long delta) {
        if (delta == 0) return;
        auto key = std::make_pair(u, v);
        auto [it, inserted] = values.try_emplace(key, delta);
        if (!inserted) {
            it->second += delta;
            if (it->second == 0) values.erase(it);
        }
    }

    // Conditions for a generalized rank invariant: nonzero only on u <= v,
    // support contained in the box.
    bool check_generalized(std::string* why = nullptr) const;

    // Value-wise equality on nonzero entries, boxes ignored.
    bool same_values(const RankInvariant& other) const { return values == other.values; }
};

}  // namespace mpinv
