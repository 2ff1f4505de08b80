#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpinv {

using Point = std::vector<int>;

inline bool leq(const Point& u, const Point& v) {
    if (u.size() != v.size()) return false;
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] > v[i]) return false;
    return true;
}

inline bool lex_less(const Point& u, const Point& v) {
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

std::string format_point(const Point& p);
Point parse_point(const std::string& s);

// Axis-aligned integer box, the carrier of every finite grid object here.
struct GridBox {
    int n = 0;
    Point lo, hi;

    GridBox() = default;
    GridBox(Point lo_, Point hi_);

    bool contains(const Point& p) const { return p.size() == lo.size() && leq(lo, p) && leq(p, hi); }
    long long point_count() const;
    int extent(int axis) const { return hi[axis] - lo[axis] + 1; }

    // Row-major linear index; lo maps to 0.  Caller must pass an in-box point.
    long long index_of(const Point& p) const;
    Point point_at(long long index) const;
    std::vector<Point> all_points() const;

    // Smallest box containing both.
    static GridBox hull(const GridBox& a, const GridBox& b);

    bool operator==(const GridBox&) const = default;
};

// Opposite corners of an integer cube, x <= y componentwise.  Degenerate
// cubes (x_i == y_i for some i) are allowed.
struct CubeSpec {
    Point x, y;

    CubeSpec() = default;
    CubeSpec(Point x_, Point y_);

    int n() const { return static_cast<int>(x.size()); }
    bool contains(const Point& p) const { return leq(x, p) && leq(p, y); }
    bool degenerate() const;

    Point edge_lengths() const;  // y - x
    Point corner_sums() const;   // y + x

    bool operator==(const CubeSpec&) const = default;
};

// Total order refining "x below implies earlier": x lexicographic ascending,
// ties broken by y lexicographic descending.
std::strong_ordering cube_order_cmp(const CubeSpec& a, const CubeSpec& b);

struct CubeOrderLess {
    bool operator()(const CubeSpec& a, const CubeSpec& b) const {
        return cube_order_cmp(a, b) == std::strong_ordering::less;
    }
};

}  // namespace mpinv
