#include "mpinv/invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace mpinv {

InvariantIndex::InvariantIndex(std::vector<int> a_, std::vector<int> b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.empty() || a.size() != b.size()) throw std::invalid_argument("index exponent lengths differ");
    for (int ai : a)
        if (ai < 1) throw std::invalid_argument("index outside N_+");
    for (int bi : b)
        if (bi < 0) throw std::invalid_argument("negative corner exponent");
}

int InvariantIndex::degree() const {
    int d = 0;
    for (int ai : a) d += ai;
    for (int bi : b) d += bi;
    return d;
}

std::vector<int> InvariantIndex::interval_axes() const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
        if (a[i] == 1) out.push_back(i);
    return out;
}

std::vector<int> InvariantIndex::triangle_axes() const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
        if (a[i] > 1) out.push_back(i);
    return out;
}

namespace {

// All length-n vectors with entries >= floor summing to total.
void compositions(int n, int total, int floor, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 1) {
        if (total >= floor) {
            cur.push_back(total);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int v = floor; v <= total - floor * (n - 1); ++v) {
        cur.push_back(v);
        compositions(n - 1, total - v, floor, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int n, int total, int floor) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (total >= floor * n) compositions(n, total, floor, cur, out);
    return out;
}

}  // namespace

std::vector<InvariantIndex> indices_of_degree(int n, int degree) {
    std::vector<InvariantIndex> out;
    for (int asum = n; asum <= degree; ++asum)
        for (const auto& a : compositions(n, asum, 1))
            for (const auto& b : compositions(n, degree - asum, 0)) out.emplace_back(a, b);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<InvariantIndex> indices_up_to_degree(int n, int max_degree) {
    std::vector<InvariantIndex> out;
    for (int d = n; d <= max_degree; ++d) {
        auto layer = indices_of_degree(n, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

Rational moment_interval_1d(int a, int b, long long x, long long y) {
    if (a < 1) throw std::invalid_argument("index outside N_+");
    if (b < 0) throw std::invalid_argument("negative corner exponent");
    if (x > y) throw std::invalid_argument("interval endpoints out of order");
    if (x == y) return Rational(0);
    if (a == 1) {
        Rational num(int_pow(y, b + 1) - int_pow(x, b + 1));
        Rational r = num / Rational(b + 1);
        r.canonicalize();
        return r;
    }
    // Odd-i terms only; even terms cancel in the antiderivative difference.
    Rational sum(0);
    BigInt eta = big_int(y - x), xi = big_int(y + x);
    for (int i = 1; i <= b + 1; i += 2) {
        Rational coeff(factorial(a - 2) * factorial(b), factorial(a - 1 + i) * factorial(b + 1 - i));
        coeff.canonicalize();
        sum += coeff * Rational(int_pow(eta, a - 1 + i) * int_pow(xi, b + 1 - i));
    }
    sum.canonicalize();
    return sum;
}

Rational moment_cube(const InvariantIndex& idx, const CubeSpec& cube) {
    if (idx.n() != cube.n()) throw std::invalid_argument("index and cube dimensions differ");
    Rational prod(1);
    for (int i = 0; i < idx.n(); ++i) {
        prod *= moment_interval_1d(idx.a[i], idx.b[i], cube.x[i], cube.y[i]);
        if (prod == 0) return Rational(0);
    }
    prod.canonicalize();
    return prod;
}

Rational moment_signed(const InvariantIndex& idx, const SignedCubeSet& X) {
    Rational sum(0);
    for (const auto& [cube, coeff] : X.terms) sum += Rational(big_int(coeff)) * moment_cube(idx, cube);
    sum.canonicalize();
    return sum;
}

Rational moment_module(const InvariantIndex& idx, const PersistenceModule& m) {
    return moment_signed(idx, decompose(m.rank_table()));
}

Rational power_sum_signed(const InvariantIndex& idx, const SignedCubeSet& X) {
    if (X.n > 0 && idx.n() != X.n) throw std::invalid_argument("index and cube set dimensions differ");
    BigInt sum(0);
    for (const auto& [cube, coeff] : X.terms) {
        BigInt term = big_int(coeff);
        for (int i = 0; i < idx.n(); ++i) {
            term *= int_pow(static_cast<long long>(cube.y[i]) - cube.x[i], idx.a[i]);
            if (term == 0) break;
            term *= int_pow(static_cast<long long>(cube.y[i]) + cube.x[i], idx.b[i]);
        }
        sum += term;
    }
    return Rational(sum);
}

Rational power_sum_module(const InvariantIndex& idx, const PersistenceModule& m) {
    return power_sum_signed(idx, decompose(m.rank_table()));
}

namespace {

// Exact integral of z^e over (c, c+1).
Rational unit_monomial_integral(long long c, int e) {
    Rational r(int_pow(c + 1, e + 1) - int_pow(c, e + 1), BigInt(e + 1));
    r.canonicalize();
    return r;
}

// (z' - z)^p (z' + z)^q expanded into z^alpha z'^beta monomials.
std::vector<std::tuple<int, int, BigInt>> bilinear_expansion(int p, int q) {
    std::vector<std::tuple<int, int, BigInt>> terms;
    for (int s = 0; s <= p; ++s)
        for (int t = 0; t <= q; ++t) {
            BigInt coeff = binomial(p, s) * binomial(q, t);
            if ((p - s) % 2 != 0) coeff = -coeff;
            terms.emplace_back((p - s) + (q - t), s + t, coeff);
        }
    return terms;
}

// Integral of (z'-z)^p (z'+z)^q over the full cell (c,c+1) x (d,d+1).
Rational square_cell_integral(long long c, long long d, int p, int q) {
    Rational sum(0);
    for (const auto& [ze, we, coeff] : bilinear_expansion(p, q))
        sum += Rational(coeff) * unit_monomial_integral(c, ze) * unit_monomial_integral(d, we);
    sum.canonicalize();
    return sum;
}

// Same integrand over the half cell { (z, z') in (c,c+1)^2 : z' >= z }.
Rational triangle_cell_integral(long long c, int p, int q) {
    Rational sum(0);
    for (const auto& [ze, we, coeff] : bilinear_expansion(p, q)) {
        // inner: int_z^{c+1} z'^we dz' = ((c+1)^{we+1} - z^{we+1}) / (we+1)
        Rational upper = Rational(int_pow(c + 1, we + 1)) * unit_monomial_integral(c, ze);
        Rational lower = unit_monomial_integral(c, ze + we + 1);
        sum += Rational(coeff) * (upper - lower) / Rational(we + 1);
    }
    sum.canonicalize();
    return sum;
}

struct Cell {
    Rational weight;
    int probe_u, probe_v;  // arguments fed to the rank function on this cell
};

}  // namespace

Rational moment_by_integration(const InvariantIndex& idx, const RankInvariant& rho) {
    const int n = rho.box.n;
    if (idx.n() != n) throw std::invalid_argument("index and table dimensions differ");

    // Per-axis cells on which the rank function is constant.
    std::vector<std::vector<Cell>> cells(n);
    for (int i = 0; i < n; ++i) {
        long long lo = rho.box.lo[i], hi = rho.box.hi[i];
        if (idx.a[i] == 1) {
            for (long long c = lo; c < hi; ++c)
                cells[i].push_back({unit_monomial_integral(c, idx.b[i]), static_cast<int>(c), static_cast<int>(c) + 1});
        } else {
            for (long long c = lo; c < hi; ++c)
                for (long long d = c; d < hi; ++d) {
                    Rational w = (d == c) ? triangle_cell_integral(c, idx.a[i] - 2, idx.b[i])
                                          : square_cell_integral(c, d, idx.a[i] - 2, idx.b[i]);
                    cells[i].push_back({std::move(w), static_cast<int>(c), static_cast<int>(d) + 1});
                }
        }
        if (cells[i].empty()) return Rational(0);
    }

    Rational total(0);
    std::vector<size_t> pick(n, 0);
    Point u(n), v(n);
    while (true) {
        Rational w(1);
        for (int i = 0; i < n; ++i) {
            const Cell& cell = cells[i][pick[i]];
            w *= cell.weight;
            u[i] = cell.probe_u;
            v[i] = cell.probe_v;
        }
        long long r = rho.at(u, v);
        if (r != 0) total += w * Rational(big_int(r));
        int axis = n - 1;
        while (axis >= 0 && ++pick[axis] == cells[axis].size()) pick[axis--] = 0;
        if (axis < 0) break;
    }
    total.canonicalize();
    return total;
}

std::vector<std::tuple<int, int, Rational>> moment_expansion_1d(int a, int b) {
    std::vector<std::tuple<int, int, Rational>> terms;
    if (a == 1) {
        // (y^{b+1} - x^{b+1})/(b+1) rewritten in (edge, corner) coordinates.
        Rational denom(BigInt(b + 1) * int_pow(2, b));
        for (int i = 1; i <= b + 1; i += 2) {
            Rational coeff = Rational(binomial(b + 1, i)) / denom;
            coeff.canonicalize();
            terms.emplace_back(i, b + 1 - i, coeff);
        }
    } else {
        for (int i = 1; i <= b + 1; i += 2) {
            Rational coeff(factorial(a - 2) * factorial(b), factorial(a - 1 + i) * factorial(b + 1 - i));
            coeff.canonicalize();
            terms.emplace_back(a - 1 + i, b + 1 - i, coeff);
        }
    }
    return terms;
}

int BasisChange::index_position(const InvariantIndex& idx) const {
    for (size_t i = 0; i < indices.size(); ++i)
        if (indices[i] == idx) return static_cast<int>(i);
    return -1;
}

BasisChange moment_power_sum_basis(int n, int degree) {
    BasisChange bc;
    bc.n = n;
    bc.degree = degree;
    bc.indices = indices_of_degree(n, degree);
    // Lower-triangular order: larger edge-exponent totals first.
    std::stable_sort(bc.indices.begin(), bc.indices.end(), [](const InvariantIndex& l, const InvariantIndex& r) {
        int ls = 0, rs = 0;
        for (int v : l.a) ls += v;
        for (int v : r.a) rs += v;
        return ls > rs;
    });
    const size_t k = bc.indices.size();
    bc.to_power_sums.assign(k, std::vector<Rational>(k, Rational(0)));

    for (size_t row = 0; row < k; ++row) {
        const InvariantIndex& idx = bc.indices[row];
        // Cartesian product of the per-axis expansions.
        std::vector<std::vector<std::tuple<int, int, Rational>>> per_axis(n);
        for (int i = 0; i < n; ++i) per_axis[i] = moment_expansion_1d(idx.a[i], idx.b[i]);
        std::vector<size_t> pick(n, 0);
        while (true) {
            Rational coeff(1);
            std::vector<int> alpha(n), beta(n);
            for (int i = 0; i < n; ++i) {
                const auto& [e, c, w] = per_axis[i][pick[i]];
                alpha[i] = e;
                beta[i] = c;
                coeff *= w;
            }
            int col = bc.index_position(InvariantIndex(alpha, beta));
            if (col < 0) throw std::logic_error("expansion left the degree layer");
            bc.to_power_sums[row][static_cast<size_t>(col)] += coeff;
            int axis = n - 1;
            while (axis >= 0 && ++pick[axis] == per_axis[axis].size()) pick[axis--] = 0;
            if (axis < 0) break;
        }
    }

    // Invert by forward substitution; diagonal entries are nonzero.
    bc.from_power_sums.assign(k, std::vector<Rational>(k, Rational(0)));
    for (size_t col = 0; col < k; ++col) {
        for (size_t row = col; row < k; ++row) {
            Rational rhs = (row == col) ? Rational(1) : Rational(0);
            for (size_t t = col; t < row; ++t) rhs -= bc.to_power_sums[row][t] * bc.from_power_sums[t][col];
            Rational v = rhs / bc.to_power_sums[row][row];
            v.canonicalize();
            bc.from_power_sums[row][col] = v;
        }
    }
    return bc;
}

FeatureVector feature_vector(const PersistenceModule& m, int max_degree, Family family) {
    if (max_degree < m.n()) throw std::invalid_argument("max degree below parameter count");
    SignedCubeSet X = decompose(m.rank_table());
    FeatureVector fv;
    fv.n = m.n();
    for (const auto& idx : indices_up_to_degree(m.n(), max_degree)) {
        Rational v = family == Family::moment ? moment_signed(idx, X) : power_sum_signed(idx, X);
        fv.entries.push_back({idx, family, std::move(v), FeatureEntry::Source::closed_form});
    }
    return fv;
}

}  // namespace mpinv
