#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mpinv/persistence_module.hpp"
#include "mpinv/signed_cube_set.hpp"

namespace mpinv {

// Deterministic sampler.  mt19937_64 output is pinned by the standard;
// draws avoid std:: distributions, whose mappings are implementation
// defined, so streams are identical across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    uint64_t next() { return eng_(); }
    // Inclusive range.
    int uniform(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1)); }
    long long uniform_ll(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

private:
    std::mt19937_64 eng_;
};

// `count` cubes with coordinates in [coord_lo, coord_hi]; nondegenerate
// forces y >= x + 1 componentwise.
std::vector<std::pair<CubeSpec, int>> random_cube_list(Rng& rng, int n, int coord_lo, int coord_hi, int count,
                                                       int max_mult, bool nondegenerate);

SignedCubeSet random_signed_cube_set(Rng& rng, int n, int coord_lo, int coord_hi, int max_terms, int max_abs_coeff);

// Cube-sum module with the identity blocks replaced by nonzero per-axis
// layer scalars and every fiber conjugated by a random unimodular matrix.
// Commutativity and the whole rank table are preserved by construction.
PersistenceModule general_random_module(Rng& rng, int n, const std::vector<std::pair<CubeSpec, int>>& cubes);

}  // namespace mpinv
