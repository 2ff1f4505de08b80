#include "mpinv/signed_cube_set.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "mpinv/rank_invariant.hpp"

namespace mpinv {

void SignedCubeSet::add_term(const CubeSpec& cube, long long coeff) {
    if (cube.n() != n) throw std::invalid_argument("cube dimension mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms.try_emplace(cube, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

int cube_rank(const CubeSpec& cube, const Point& u, const Point& v) {
    return leq(cube.x, u) && leq(u, v) && leq(v, cube.y) ? 1 : 0;
}

long long SignedCubeSet::signed_rank(const Point& u, const Point& v) const {
    long long r = 0;
    for (const auto& [cube, coeff] : terms) r += coeff * cube_rank(cube, u, v);
    return r;
}

SignedCubeSet SignedCubeSet::without_degenerate() const {
    SignedCubeSet out(n);
    for (const auto& [cube, coeff] : terms)
        if (!cube.degenerate()) out.terms.emplace(cube, coeff);
    return out;
}

bool SignedCubeSet::all_positive() const {
    return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second > 0; });
}

long long SignedCubeSet::total_weight() const {
    long long w = 0;
    for (const auto& [cube, coeff] : terms) w += coeff;
    return w;
}

std::vector<std::pair<Point, Point>> ordered_box_pairs(const GridBox& box) {
    auto pts = box.all_points();  // row-major == lex ascending
    std::vector<std::pair<Point, Point>> pairs;
    for (const auto& u : pts) {
        std::vector<Point> above;
        for (const auto& v : pts)
            if (leq(u, v)) above.push_back(v);
        std::sort(above.begin(), above.end(), [](const Point& a, const Point& b) { return lex_less(b, a); });
        for (auto& v : above) pairs.emplace_back(u, std::move(v));
    }
    return pairs;
}

namespace {

// Iterate all pairs x <= u <= v <= y and apply fn(u, v).
template <typename Fn>
void for_pairs_in_cube(const CubeSpec& cube, Fn&& fn) {
    GridBox inner(cube.x, cube.y);
    auto pts = inner.all_points();
    for (const auto& u : pts)
        for (const auto& v : pts)
            if (leq(u, v)) fn(u, v);
}

}  // namespace

SignedCubeSet decompose(const RankInvariant& rho) {
    std::string why;
    if (!rho.check_generalized(&why)) throw std::invalid_argument("not a generalized rank invariant: " + why);

    SignedCubeSet result(rho.box.n);
    RankInvariant residual = rho;
    auto pairs = ordered_box_pairs(rho.box);
    // The cursor never revisits a pair: subtracting a cube pivoted at (x, y)
    // only touches pairs at or after (x, y) in the scan order.
    for (const auto& [x, y] : pairs) {
        long long c = residual.at(x, y);
        if (c == 0) continue;
        CubeSpec cube(x, y);
        result.add_term(cube, c);
        for_pairs_in_cube(cube, [&](const Point& u, const Point& v) { residual.add(u, v, -c); });
        assert(residual.at(x, y) == 0);
    }
    return result;
}

RankInvariant reconstruct(const SignedCubeSet& X, const GridBox& box) {
    if (X.n != box.n) throw std::invalid_argument("cube set and box dimensions differ");
    RankInvariant table(box);
    for (const auto& [cube, coeff] : X.terms) {
        if (!box.contains(cube.x) || !box.contains(cube.y))
            throw std::invalid_argument("cube outside box: " + format_point(cube.x) + "|" + format_point(cube.y));
        for_pairs_in_cube(cube, [&](const Point& u, const Point& v) { table.add(u, v, coeff); });
    }
    return table;
}

}  // namespace mpinv
