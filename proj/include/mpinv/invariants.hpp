#pragma once

#include <vector>

#include "mpinv/grid.hpp"
#include "mpinv/persistence_module.hpp"
#include "mpinv/rank_invariant.hpp"
#include "mpinv/rational.hpp"
#include "mpinv/signed_cube_set.hpp"

namespace mpinv {

// Exponent pair (a, b) selecting one invariant; every a_i is at least 1.
// Axes with a_i == 1 contribute interval factors, axes with a_i > 1
// triangle factors.
struct InvariantIndex {
    std::vector<int> a, b;

    InvariantIndex() = default;
    InvariantIndex(std::vector<int> a_, std::vector<int> b_);

    int n() const { return static_cast<int>(a.size()); }
    int degree() const;
    std::vector<int> interval_axes() const;  // a_i == 1
    std::vector<int> triangle_axes() const;  // a_i > 1

    bool operator==(const InvariantIndex&) const = default;
    auto operator<=>(const InvariantIndex&) const = default;
};

// All indices of the exact degree, lexicographic on (a, b); empty when
// degree < n.
std::vector<InvariantIndex> indices_of_degree(int n, int degree);
// Degrees n..max_degree, graded then lexicographic.
std::vector<InvariantIndex> indices_up_to_degree(int n, int max_degree);

// One-axis moment of an interval [x, y]: the b-weighted length for a == 1,
// the (a, b)-weighted triangle content for a >= 2.  Zero when x == y.
Rational moment_interval_1d(int a, int b, long long x, long long y);

// Product of one-axis moments over the cube's coordinates.
Rational moment_cube(const InvariantIndex& idx, const CubeSpec& cube);
Rational moment_signed(const InvariantIndex& idx, const SignedCubeSet& X);
// Moment of a module, evaluated through its signed cube decomposition.
Rational moment_module(const InvariantIndex& idx, const PersistenceModule& m);

// Same moment by direct piecewise-polynomial integration of the rank
// function: the integrand is constant on unit cells (triangle-split on the
// diagonal), so the integral is a finite exact sum.  Independent of the
// closed forms above.
Rational moment_by_integration(const InvariantIndex& idx, const RankInvariant& rho);

// Power sum over summands of edge_lengths^a * corner_sums^b.
Rational power_sum_signed(const InvariantIndex& idx, const SignedCubeSet& X);
Rational power_sum_module(const InvariantIndex& idx, const PersistenceModule& m);

// Expansion of the degree-homogeneous moment family in the power-sum basis.
// Indices are ordered so that the matrix is lower triangular: sum(a)
// descending, then lexicographic.  from_power_sums is the inverse.
struct BasisChange {
    int n = 0, degree = 0;
    std::vector<InvariantIndex> indices;
    std::vector<std::vector<Rational>> to_power_sums;    // moment = T * power_sum
    std::vector<std::vector<Rational>> from_power_sums;  // T^-1
    int index_position(const InvariantIndex& idx) const;
};
BasisChange moment_power_sum_basis(int n, int degree);

// One-axis expansion of the moment closed form as a polynomial in
// (edge length, corner sum); terms are (edge exponent, corner exponent,
// coefficient).  Shared by the basis change and its tests.
std::vector<std::tuple<int, int, Rational>> moment_expansion_1d(int a, int b);

enum class Family { moment, power_sum };

struct FeatureEntry {
    InvariantIndex idx;
    Family family;
    Rational value;
    enum class Source { closed_form, integration } source = Source::closed_form;
};

struct FeatureVector {
    int n = 0;
    std::vector<FeatureEntry> entries;
};

// All invariants of the module with degree <= max_degree; the decomposition
// is computed once and reused.
FeatureVector feature_vector(const PersistenceModule& m, int max_degree, Family family);

}  // namespace mpinv
