#include "mpinv/rank_invariant.hpp"

namespace mpinv {

bool RankInvariant::check_generalized(std::string* why) const {
    for (const auto& [key, val] : values) {
        if (val == 0) continue;
        const auto& [u, v] = key;
        if (!leq(u, v)) {
            if (why) *why = "nonzero value at non-ordered pair " + format_point(u) + "|" + format_point(v);
            return false;
        }
        if (!box.contains(u) || !box.contains(v)) {
            if (why) *why = "support escapes the box at " + format_point(u) + "|" + format_point(v);
            return false;
        }
    }
    return true;
}

}  // namespace mpinv
