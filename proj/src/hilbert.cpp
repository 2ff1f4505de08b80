#include "mpinv/hilbert.hpp"

#include <stdexcept>

namespace mpinv {

HilbertCoeffs hilbert_product_coeffs(int n, int max_degree) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::vector<BigInt> coeffs(static_cast<size_t>(max_degree) + 1);
    coeffs[0] = 1;
    for (int d = 0; n + d <= max_degree; ++d) {
        int step = n + d;
        BigInt e = binomial(d + 2LL * n - 1, 2LL * n - 1);
        // Multiply by (1 - t^step)^{-e} = sum_j binom(e-1+j, j) t^{step*j}.
        std::vector<BigInt> next(coeffs.size());
        for (int j = 0; step * j <= max_degree; ++j) {
            BigInt c = binomial(e.get_si() - 1 + j, j);
            for (size_t k = 0; k + static_cast<size_t>(step) * j < coeffs.size(); ++k)
                next[k + static_cast<size_t>(step) * j] += c * coeffs[k];
        }
        coeffs = std::move(next);
    }
    return {n, std::move(coeffs)};
}

BigInt count_generators(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("need n >= 1 and d >= 0");
    if (d < n) return BigInt(0);
    return binomial(d + n - 1LL, 2LL * n - 1);
}

namespace {

// Count vectors of given length with entries >= floor summing to total.
BigInt count_vectors(int length, int total, int floor) {
    if (length == 0) return BigInt(total == 0 ? 1 : 0);
    if (total < floor * length) return BigInt(0);
    BigInt c(0);
    for (int v = floor; v <= total; ++v) c += count_vectors(length - 1, total - v, floor);
    return c;
}

// Multisets of generators with total degree `remaining`, drawing from
// degrees <= max_part, with at most `slots` elements (slots < 0: unbounded).
BigInt multiset_count(int n, int remaining, int max_part, int slots, bool brute_generator_count) {
    if (remaining == 0) return BigInt(1);
    if (max_part < n || slots == 0) return BigInt(0);
    BigInt total = multiset_count(n, remaining, max_part - 1, slots, brute_generator_count);
    BigInt g = brute_generator_count ? count_generators_brute(n, max_part) : count_generators(n, max_part);
    for (int m = 1; m * max_part <= remaining && (slots < 0 || m <= slots); ++m) {
        // m copies drawn with repetition from g generator types
        BigInt ways = binomial(g.get_si() + m - 1, m);
        total += ways * multiset_count(n, remaining - m * max_part, max_part - 1,
                                       slots < 0 ? -1 : slots - m, brute_generator_count);
    }
    return total;
}

}  // namespace

BigInt count_generators_brute(int n, int d) {
    BigInt c(0);
    for (int asum = n; asum <= d; ++asum) c += count_vectors(n, asum, 1) * count_vectors(n, d - asum, 0);
    return c;
}

BigInt free_algebra_dim(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("need n >= 1 and d >= 0");
    return multiset_count(n, d, d, -1, /*brute_generator_count=*/true);
}

BigInt bounded_multiset_dim(int n, int d, int max_rows) {
    if (n < 1 || d < 0 || max_rows < 0) throw std::invalid_argument("bad arguments");
    return multiset_count(n, d, d, max_rows, /*brute_generator_count=*/true);
}

bool admissible_monomial(int n, int m, const std::vector<std::vector<std::pair<int, int>>>& exponents) {
    if (static_cast<int>(exponents.size()) != m) throw std::invalid_argument("row count mismatch");
    for (const auto& row : exponents) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("column count mismatch");
        bool nonzero = false;
        for (const auto& [a, b] : row) {
            if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
            if (a > 0 || b > 0) nonzero = true;
        }
        if (!nonzero) continue;
        for (const auto& [a, b] : row)
            if (a == 0) return false;
    }
    return true;
}

bool hockey_stick_identity_holds(int x, int k) {
    if (x < 1 || k < 0) throw std::invalid_argument("need x >= 1 and k >= 0");
    BigInt lhs = binomial(x + k, x);
    BigInt rhs(0);
    for (int kp = 0; kp <= k; ++kp) rhs += binomial(x + kp - 1, x - 1);
    return lhs == rhs;
}

}  // namespace mpinv
