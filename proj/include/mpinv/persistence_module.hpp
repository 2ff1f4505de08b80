#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpinv/grid.hpp"
#include "mpinv/int_matrix.hpp"
#include "mpinv/rank_invariant.hpp"

namespace mpinv {

struct Violation {
    enum class Kind { shape_mismatch, commutativity };
    Kind kind;
    Point at;
    int axis_a = -1, axis_b = -1;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Finite persistence module on an integer grid: a dimension per grid point
// and one integer matrix per grid edge.  The module is zero outside the box.
// Treat instances as immutable once built.
class PersistenceModule {
public:
    GridBox box;
    std::vector<int> dims;                     // by box point index
    std::vector<std::vector<IntMatrix>> maps;  // maps[axis][index_of(v)] : M_v -> M_{v+e_axis}

    PersistenceModule() = default;
    explicit PersistenceModule(GridBox b);

    static PersistenceModule zero(GridBox b) { return PersistenceModule(std::move(b)); }
    static PersistenceModule from_cubes(int n, const std::vector<std::pair<CubeSpec, int>>& cubes);

    int n() const { return box.n; }
    int dim_at(const Point& v) const;  // 0 outside the box
    bool has_edge(const Point& v, int axis) const;
    const IntMatrix& edge_map(const Point& v, int axis) const;

    ValidationReport validate() const;

    // Composite map M_u -> M_v along the monotone path that exhausts axes in
    // the given order.  Requires u <= v, both in the box.
    IntMatrix composite_map(const Point& u, const Point& v, const std::vector<int>& axis_order) const;

    // dim im(M_u -> M_v); 0 when u is not below v or either end lies outside
    // the box.  Throws std::invalid_argument for modules failing validate().
    long long rank_between(const Point& u, const Point& v) const;
    long long rank_between_real(const std::vector<double>& u, const std::vector<double>& v) const;

    RankInvariant rank_table() const;

    friend PersistenceModule direct_sum(const PersistenceModule& a, const PersistenceModule& b);

private:
    void require_valid() const;
    long long rank_unchecked(const Point& u, const Point& v) const;
};

PersistenceModule direct_sum(const PersistenceModule& a, const PersistenceModule& b);

}  // namespace mpinv
