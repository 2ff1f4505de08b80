#include "mpinv/grid.hpp"

#include <sstream>

namespace mpinv {

std::string format_point(const Point& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

Point parse_point(const std::string& s) {
    Point p;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        size_t pos = 0;
        int v = std::stoi(part, &pos);
        if (pos != part.size()) throw std::invalid_argument("bad grid point: " + s);
        p.push_back(v);
    }
    if (p.empty()) throw std::invalid_argument("bad grid point: " + s);
    return p;
}

GridBox::GridBox(Point lo_, Point hi_) : n(static_cast<int>(lo_.size())), lo(std::move(lo_)), hi(std::move(hi_)) {
    if (n < 1) throw std::invalid_argument("box needs at least one axis");
    if (hi.size() != static_cast<size_t>(n)) throw std::invalid_argument("box corner lengths differ");
    if (!leq(lo, hi)) throw std::invalid_argument("box corners out of order");
}

long long GridBox::point_count() const {
    long long c = 1;
    for (int a = 0; a < n; ++a) c *= extent(a);
    return c;
}

long long GridBox::index_of(const Point& p) const {
    long long idx = 0;
    for (int a = 0; a < n; ++a) idx = idx * extent(a) + (p[a] - lo[a]);
    return idx;
}

Point GridBox::point_at(long long index) const {
    Point p(n);
    for (int a = n - 1; a >= 0; --a) {
        p[a] = lo[a] + static_cast<int>(index % extent(a));
        index /= extent(a);
    }
    return p;
}

std::vector<Point> GridBox::all_points() const {
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(point_count()));
    for (long long i = 0; i < point_count(); ++i) pts.push_back(point_at(i));
    return pts;
}

GridBox GridBox::hull(const GridBox& a, const GridBox& b) {
    if (a.n != b.n) throw std::invalid_argument("box dimensions differ");
    Point lo(a.n), hi(a.n);
    for (int i = 0; i < a.n; ++i) {
        lo[i] = std::min(a.lo[i], b.lo[i]);
        hi[i] = std::max(a.hi[i], b.hi[i]);
    }
    return GridBox(std::move(lo), std::move(hi));
}

CubeSpec::CubeSpec(Point x_, Point y_) : x(std::move(x_)), y(std::move(y_)) {
    if (x.empty() || x.size() != y.size()) throw std::invalid_argument("cube corner lengths differ");
    if (!leq(x, y)) throw std::invalid_argument("cube corners out of order");
}

bool CubeSpec::degenerate() const {
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] == y[i]) return true;
    return false;
}

Point CubeSpec::edge_lengths() const {
    Point e(x.size());
    for (size_t i = 0; i < x.size(); ++i) e[i] = y[i] - x[i];
    return e;
}

Point CubeSpec::corner_sums() const {
    Point s(x.size());
    for (size_t i = 0; i < x.size(); ++i) s[i] = y[i] + x[i];
    return s;
}

std::strong_ordering cube_order_cmp(const CubeSpec& a, const CubeSpec& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return b.y <=> a.y;  // y descending on ties
}

}  // namespace mpinv
