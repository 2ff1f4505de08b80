#include "mpinv/persistence_module.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mpinv {

PersistenceModule::PersistenceModule(GridBox b) : box(std::move(b)) {
    dims.assign(static_cast<size_t>(box.point_count()), 0);
    maps.assign(static_cast<size_t>(box.n), {});
    for (int a = 0; a < box.n; ++a) maps[a].assign(dims.size(), IntMatrix());
}

int PersistenceModule::dim_at(const Point& v) const {
    if (!box.contains(v)) return 0;
    return dims[static_cast<size_t>(box.index_of(v))];
}

bool PersistenceModule::has_edge(const Point& v, int axis) const {
    if (!box.contains(v)) return false;
    return v[axis] + 1 <= box.hi[axis];
}

const IntMatrix& PersistenceModule::edge_map(const Point& v, int axis) const {
    return maps[axis][static_cast<size_t>(box.index_of(v))];
}

PersistenceModule PersistenceModule::from_cubes(int n, const std::vector<std::pair<CubeSpec, int>>& cubes) {
    if (cubes.empty()) throw std::invalid_argument("empty module not representable");
    Point lo, hi;
    for (const auto& [cube, mult] : cubes) {
        if (cube.n() != n) throw std::invalid_argument("cube dimension mismatch");
        if (mult <= 0) throw std::invalid_argument("cube multiplicity must be positive");
        if (lo.empty()) {
            lo = cube.x;
            hi = cube.y;
        } else {
            for (int i = 0; i < n; ++i) {
                lo[i] = std::min(lo[i], cube.x[i]);
                hi[i] = std::max(hi[i], cube.y[i]);
            }
        }
    }
    PersistenceModule m{GridBox(lo, hi)};
    auto pts = m.box.all_points();
    for (size_t pi = 0; pi < pts.size(); ++pi) {
        int d = 0;
        for (const auto& [cube, mult] : cubes)
            if (cube.contains(pts[pi])) d += mult;
        m.dims[pi] = d;
    }
    // One identity block per cube containing both endpoints of the edge;
    // block offsets follow the cube list order.
    for (int a = 0; a < n; ++a) {
        for (size_t pi = 0; pi < pts.size(); ++pi) {
            const Point& v = pts[pi];
            if (!m.has_edge(v, a)) continue;
            Point w = v;
            ++w[a];
            IntMatrix f(m.dim_at(w), m.dim_at(v));
            int row_off = 0, col_off = 0;
            for (const auto& [cube, mult] : cubes) {
                bool src = cube.contains(v), dst = cube.contains(w);
                if (src && dst)
                    for (int t = 0; t < mult; ++t) f.at(row_off + t, col_off + t) = 1;
                if (src) col_off += mult;
                if (dst) row_off += mult;
            }
            m.maps[a][pi] = std::move(f);
        }
    }
    return m;
}

ValidationReport PersistenceModule::validate() const {
    ValidationReport report;
    auto pts = box.all_points();
    for (size_t pi = 0; pi < pts.size(); ++pi) {
        const Point& v = pts[pi];
        for (int a = 0; a < box.n; ++a) {
            if (!has_edge(v, a)) continue;
            Point w = v;
            ++w[a];
            const IntMatrix& f = maps[a][pi];
            if (f.rows() != dim_at(w) || f.cols() != dim_at(v)) {
                report.violations.push_back({Violation::Kind::shape_mismatch, v, a, -1,
                                             "expected " + std::to_string(dim_at(w)) + "x" +
                                                 std::to_string(dim_at(v)) + ", stored " +
                                                 std::to_string(f.rows()) + "x" + std::to_string(f.cols())});
            }
        }
    }
    if (!report.ok()) return report;  // commutativity needs consistent shapes
    for (size_t pi = 0; pi < pts.size(); ++pi) {
        const Point& v = pts[pi];
        for (int a = 0; a < box.n; ++a) {
            if (!has_edge(v, a)) continue;
            Point va = v;
            ++va[a];
            for (int b = a + 1; b < box.n; ++b) {
                if (!has_edge(v, b) || !has_edge(va, b)) continue;
                Point vb = v;
                ++vb[b];
                IntMatrix left = maps[b][static_cast<size_t>(box.index_of(va))] * maps[a][pi];
                IntMatrix right = maps[a][static_cast<size_t>(box.index_of(vb))] * maps[b][pi];
                if (!(left == right))
                    report.violations.push_back(
                        {Violation::Kind::commutativity, v, a, b, "square at " + format_point(v)});
            }
        }
    }
    return report;
}

IntMatrix PersistenceModule::composite_map(const Point& u, const Point& v, const std::vector<int>& axis_order) const {
    IntMatrix acc = IntMatrix::identity(dim_at(u));
    Point p = u;
    for (int a : axis_order) {
        while (p[a] < v[a]) {
            acc = maps[a][static_cast<size_t>(box.index_of(p))] * acc;
            ++p[a];
        }
    }
    return acc;
}

void PersistenceModule::require_valid() const {
    if (!validate().ok()) throw std::invalid_argument("invalid module");
}

long long PersistenceModule::rank_unchecked(const Point& u, const Point& v) const {
    if (u.size() != static_cast<size_t>(box.n) || v.size() != static_cast<size_t>(box.n)) return 0;
    if (!leq(u, v)) return 0;
    if (!box.contains(u) || !box.contains(v)) return 0;  // zero space at an end
    std::vector<int> order(box.n);
    std::iota(order.begin(), order.end(), 0);
    return composite_map(u, v, order).rank();
}

long long PersistenceModule::rank_between(const Point& u, const Point& v) const {
    require_valid();
    return rank_unchecked(u, v);
}

long long PersistenceModule::rank_between_real(const std::vector<double>& u, const std::vector<double>& v) const {
    if (u.size() != v.size()) return 0;
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] > v[i]) return 0;
    Point fu(u.size()), cv(v.size());
    for (size_t i = 0; i < u.size(); ++i) {
        fu[i] = static_cast<int>(std::floor(u[i]));
        cv[i] = static_cast<int>(std::ceil(v[i]));
    }
    return rank_between(fu, cv);
}

RankInvariant PersistenceModule::rank_table() const {
    require_valid();
    RankInvariant table(box);
    auto pts = box.all_points();
    // For each source u, grow composites point by point: the predecessor
    // along the first axis where v exceeds u is already computed because
    // points are visited in row-major order.
    for (size_t ui = 0; ui < pts.size(); ++ui) {
        const Point& u = pts[ui];
        std::vector<IntMatrix> comp(pts.size());
        for (size_t vi = ui; vi < pts.size(); ++vi) {
            const Point& v = pts[vi];
            if (!leq(u, v)) continue;
            if (vi == ui) {
                comp[vi] = IntMatrix::identity(dim_at(u));
            } else {
                int step = -1;
                for (int a = 0; a < box.n; ++a)
                    if (v[a] > u[a]) {
                        step = a;
                        break;
                    }
                Point prev = v;
                --prev[step];
                long long prev_i = box.index_of(prev);
                comp[vi] = maps[step][static_cast<size_t>(prev_i)] * comp[static_cast<size_t>(prev_i)];
            }
            table.set(u, v, comp[vi].rank());
        }
    }
    return table;
}

PersistenceModule direct_sum(const PersistenceModule& a, const PersistenceModule& b) {
    if (a.n() != b.n()) throw std::invalid_argument("direct sum needs equal parameter counts");
    PersistenceModule m{GridBox::hull(a.box, b.box)};
    auto pts = m.box.all_points();
    for (size_t pi = 0; pi < pts.size(); ++pi) m.dims[pi] = a.dim_at(pts[pi]) + b.dim_at(pts[pi]);
    auto part = [](const PersistenceModule& s, const Point& v, int axis, const Point& w) {
        // The summand's edge map, extended by zero outside its box.
        if (s.box.contains(v) && s.box.contains(w)) return s.edge_map(v, axis);
        return IntMatrix(s.dim_at(w), s.dim_at(v));
    };
    for (int axis = 0; axis < m.n(); ++axis)
        for (size_t pi = 0; pi < pts.size(); ++pi) {
            const Point& v = pts[pi];
            if (!m.has_edge(v, axis)) continue;
            Point w = v;
            ++w[axis];
            m.maps[axis][pi] = IntMatrix::block_diag(part(a, v, axis, w), part(b, v, axis, w));
        }
    return m;
}

}  // namespace mpinv
