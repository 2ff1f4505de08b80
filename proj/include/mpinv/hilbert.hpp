#pragma once

#include <vector>

#include "mpinv/rational.hpp"

namespace mpinv {

struct HilbertCoeffs {
    int n = 0;
    std::vector<BigInt> coeffs;  // index = degree
};

// Coefficients of prod_{d >= 0} (1 - t^{n+d})^{-binom(d+2n-1, 2n-1)}
// truncated at max_degree.
HilbertCoeffs hilbert_product_coeffs(int n, int max_degree);

// Number of generator indices (a, b) with a in N_+^n, b in N^n and total
// degree d: zero below degree n, binom(d+n-1, 2n-1) from there on.
BigInt count_generators(int n, int d);
// The same count by direct enumeration of (a, b).
BigInt count_generators_brute(int n, int d);

// Dimension of the degree-d slice of the free algebra on those generators:
// multisets of generators with degrees summing to d, counted recursively.
BigInt free_algebra_dim(int n, int d);

// Multisets as above but with at most max_rows elements; stabilizes to
// free_algebra_dim once max_rows >= d.
BigInt bounded_multiset_dim(int n, int d, int max_rows);

// exponents[i][j] = (a_ij, b_ij).  True iff every row with a nonzero entry
// has all of its a-exponents positive.
bool admissible_monomial(int n, int m, const std::vector<std::vector<std::pair<int, int>>>& exponents);

// binom(x+k, x) == sum_{k'=0..k} binom(x+k'-1, x-1), evaluated exactly.
bool hockey_stick_identity_holds(int x, int k);

}  // namespace mpinv
