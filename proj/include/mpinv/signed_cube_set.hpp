#pragma once

#include <map>

#include "mpinv/grid.hpp"
#include "mpinv/rank_invariant.hpp"

namespace mpinv {

// Formal integer combination of cubes.  Terms are kept in the canonical cube
// order and zero coefficients are never stored.
class SignedCubeSet {
public:
    int n = 0;
    std::map<CubeSpec, long long, CubeOrderLess> terms;

    SignedCubeSet() = default;
    explicit SignedCubeSet(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("cube set needs at least one axis");
    }

    void add_term(const CubeSpec& cube, long long coeff);

    long long signed_rank(const Point& u, const Point& v) const;

    SignedCubeSet without_degenerate() const;
    bool all_positive() const;
    long long total_weight() const;  // sum of coefficients

    bool operator==(const SignedCubeSet&) const = default;
};

// 1 iff x <= u <= v <= y componentwise.
int cube_rank(const CubeSpec& cube, const Point& u, const Point& v);

// Greedy peeling along the canonical cube order; the result is the unique
// signed cube set whose rank function equals rho.  Throws
// std::invalid_argument("not a generalized rank invariant") when rho violates
// the support conditions.
SignedCubeSet decompose(const RankInvariant& rho);

// Rank function of X tabulated over the box.  All cubes must lie inside.
RankInvariant reconstruct(const SignedCubeSet& X, const GridBox& box);

// All (u, v) pairs with box.lo <= u <= v <= box.hi, sorted by the canonical
// cube order (u lex ascending, v lex descending on ties).
std::vector<std::pair<Point, Point>> ordered_box_pairs(const GridBox& box);

}  // namespace mpinv
