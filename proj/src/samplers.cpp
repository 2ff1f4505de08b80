#include "mpinv/samplers.hpp"

#include <stdexcept>

namespace mpinv {

std::vector<std::pair<CubeSpec, int>> random_cube_list(Rng& rng, int n, int coord_lo, int coord_hi, int count,
                                                       int max_mult, bool nondegenerate) {
    if (count < 1) throw std::invalid_argument("need at least one cube");
    if (coord_hi < coord_lo) throw std::invalid_argument("empty coordinate range");
    if (nondegenerate && coord_hi - coord_lo < 1) throw std::invalid_argument("range too small for nondegenerate cubes");
    std::vector<std::pair<CubeSpec, int>> cubes;
    for (int c = 0; c < count; ++c) {
        Point x(n), y(n);
        for (int i = 0; i < n; ++i) {
            if (nondegenerate) {
                x[i] = rng.uniform(coord_lo, coord_hi - 1);
                y[i] = rng.uniform(x[i] + 1, coord_hi);
            } else {
                x[i] = rng.uniform(coord_lo, coord_hi);
                y[i] = rng.uniform(x[i], coord_hi);
            }
        }
        cubes.emplace_back(CubeSpec(x, y), max_mult > 1 ? rng.uniform(1, max_mult) : 1);
    }
    return cubes;
}

SignedCubeSet random_signed_cube_set(Rng& rng, int n, int coord_lo, int coord_hi, int max_terms, int max_abs_coeff) {
    SignedCubeSet X(n);
    int terms = rng.uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        Point x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[i] = rng.uniform(coord_lo, coord_hi);
            y[i] = rng.uniform(x[i], coord_hi);
        }
        long long coeff = rng.uniform(1, max_abs_coeff);
        if (rng.chance(0.5)) coeff = -coeff;
        X.add_term(CubeSpec(x, y), coeff);
    }
    return X;
}

namespace {

struct Unimodular {
    IntMatrix u, u_inv;
};

Unimodular random_unimodular(Rng& rng, int dim) {
    Unimodular m{IntMatrix::identity(dim), IntMatrix::identity(dim)};
    if (dim < 2) return m;
    int ops = rng.uniform(1, 2 * dim);
    for (int t = 0; t < ops; ++t) {
        int i = rng.uniform(0, dim - 1);
        int j = rng.uniform(0, dim - 1);
        if (i == j) continue;
        int c = rng.uniform(-2, 2);
        if (c == 0) continue;
        // u <- E u with E = I + c e_ij; u_inv <- u_inv E^{-1}
        for (int k = 0; k < dim; ++k) m.u.at(i, k) += BigInt(c) * m.u.at(j, k);
        for (int k = 0; k < dim; ++k) m.u_inv.at(k, j) -= BigInt(c) * m.u_inv.at(k, i);
    }
    return m;
}

}  // namespace

PersistenceModule general_random_module(Rng& rng, int n, const std::vector<std::pair<CubeSpec, int>>& cubes) {
    PersistenceModule base = PersistenceModule::from_cubes(n, cubes);
    const GridBox& box = base.box;

    // Per cube, axis and layer: a nonzero scalar replacing the identity step.
    // Structure maps then depend on each axis' own coordinate only, so all
    // grid squares commute.
    std::vector<std::vector<std::vector<int>>> scalars(cubes.size());
    for (size_t c = 0; c < cubes.size(); ++c) {
        scalars[c].resize(static_cast<size_t>(n));
        for (int a = 0; a < n; ++a) {
            scalars[c][a].resize(static_cast<size_t>(box.extent(a)));
            for (auto& s : scalars[c][a]) s = rng.chance(0.3) ? 2 : 1;
        }
    }

    PersistenceModule m{box};
    m.dims = base.dims;
    auto pts = box.all_points();
    for (int a = 0; a < n; ++a)
        for (size_t pi = 0; pi < pts.size(); ++pi) {
            const Point& v = pts[pi];
            if (!m.has_edge(v, a)) continue;
            Point w = v;
            ++w[a];
            IntMatrix f(m.dim_at(w), m.dim_at(v));
            int row_off = 0, col_off = 0;
            for (size_t c = 0; c < cubes.size(); ++c) {
                const auto& [cube, mult] = cubes[c];
                bool src = cube.contains(v), dst = cube.contains(w);
                if (src && dst) {
                    int s = scalars[c][a][static_cast<size_t>(v[a] - box.lo[a])];
                    for (int t = 0; t < mult; ++t) f.at(row_off + t, col_off + t) = s;
                }
                if (src) col_off += mult;
                if (dst) row_off += mult;
            }
            m.maps[a][pi] = std::move(f);
        }

    // Conjugate every fiber by a random unimodular basis change; ranks and
    // commutativity are untouched.
    std::vector<Unimodular> bases(pts.size());
    for (size_t pi = 0; pi < pts.size(); ++pi) bases[pi] = random_unimodular(rng, m.dims[pi]);
    for (int a = 0; a < n; ++a)
        for (size_t pi = 0; pi < pts.size(); ++pi) {
            const Point& v = pts[pi];
            if (!m.has_edge(v, a)) continue;
            Point w = v;
            ++w[a];
            size_t wi = static_cast<size_t>(box.index_of(w));
            m.maps[a][pi] = bases[wi].u * m.maps[a][pi] * bases[pi].u_inv;
        }
    return m;
}

}  // namespace mpinv
