#include "mpinv/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace mpinv {

namespace {

long long checked_pow(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<long long>::max() / base) throw std::overflow_error("limit exponent overflow");
        r *= base;
    }
    return r;
}

}  // namespace

Rational summand_func_value(const SummandFunc& f, const CubeSpec& cube) {
    switch (f.kind) {
        case SummandFunc::Kind::volume: {
            BigInt v(1);
            for (int i = 0; i < cube.n(); ++i) v *= BigInt(cube.y[i] - cube.x[i]);
            return Rational(v);
        }
        case SummandFunc::Kind::edge_length:
            return Rational(cube.y[f.axis] - cube.x[f.axis]);
        case SummandFunc::Kind::corner_sum:
            return Rational(static_cast<long>(cube.y[f.axis]) + cube.x[f.axis]);
    }
    throw std::logic_error("unreachable");
}

void RecoverySchedule::validate() const {
    if (k_values.empty()) throw std::invalid_argument("schedule needs at least one k");
    for (size_t i = 0; i < k_values.size(); ++i) {
        if (k_values[i] < 2) throw std::invalid_argument("schedule k values must be at least 2");
        if (i && k_values[i] <= k_values[i - 1]) throw std::invalid_argument("schedule must be strictly increasing");
    }
    if (precision_bits < 64) throw std::invalid_argument("precision too small");
    if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
}

RecoverySchedule RecoverySchedule::doubling(long long k_max, long precision_bits, double tolerance) {
    RecoverySchedule s;
    s.k_values.clear();
    for (long long k = 4; k < k_max; k *= 2) s.k_values.push_back(k);
    if (s.k_values.empty() || s.k_values.back() != k_max) s.k_values.push_back(k_max);
    s.precision_bits = precision_bits;
    s.tolerance = tolerance;
    s.validate();
    return s;
}

PowerSumOracle::PowerSumOracle(const SignedCubeSet& hidden, std::vector<SummandFunc> funcs, long precision_bits)
    : funcs_(std::move(funcs)), prec_(precision_bits) {
    if (funcs_.empty()) throw std::invalid_argument("oracle needs at least one function");
    if (prec_ < 64) throw std::invalid_argument("precision too small");
    for (const auto& [cube, coeff] : hidden.terms) {
        if (coeff < 0) throw std::invalid_argument("signed sets unsupported");
        ExactSummand s;
        s.weight = coeff;
        for (const auto& f : funcs_) {
            Rational v = summand_func_value(f, cube);
            if (v <= 0) throw std::invalid_argument("recovery requires positive summand data");
            s.values.push_back(std::move(v));
        }
        summands_.push_back(std::move(s));
    }
}

long long PowerSumOracle::total_weight() const {
    long long w = 0;
    for (const auto& s : summands_) w += s.weight;
    return w;
}

LogValue PowerSumOracle::eval(const std::vector<long long>& exponents) const {
    return eval_excluding(exponents, {});
}

LogValue PowerSumOracle::eval_excluding(const std::vector<long long>& exponents,
                                        const std::vector<ExactSummand>& excluded) const {
    if (exponents.size() != funcs_.size()) throw std::invalid_argument("exponent tuple length mismatch");

    // Merge hidden and excluded summands by exact value vector so that a
    // correctly recovered summand cancels symbolically, not numerically.
    std::map<std::vector<Rational>, long long> grouped;
    for (const auto& s : summands_) grouped[s.values] += s.weight;
    for (const auto& e : excluded) {
        if (e.values.size() != funcs_.size()) throw std::invalid_argument("excluded summand arity mismatch");
        for (const auto& v : e.values)
            if (v <= 0) throw std::domain_error("excluded summand values must be positive");
        grouped[e.values] -= e.weight;
    }

    struct Term {
        long long weight;
        BigFloat log_mag;
    };
    std::vector<Term> terms;
    for (const auto& [values, weight] : grouped) {
        if (weight == 0) continue;
        BigFloat l = BigFloat::from_si(0, prec_);
        for (size_t t = 0; t < values.size(); ++t) {
            if (exponents[t] == 0) continue;
            l += BigFloat::log_of(values[t], prec_).mul_si(static_cast<long>(exponents[t]));
        }
        terms.push_back({weight, std::move(l)});
    }
    if (terms.empty()) return {0, BigFloat(prec_)};

    const BigFloat* lmax = &terms[0].log_mag;
    for (const auto& t : terms)
        if (*lmax < t.log_mag) lmax = &t.log_mag;
    BigFloat acc = BigFloat::from_si(0, prec_);
    for (const auto& t : terms) acc += (t.log_mag - *lmax).exp().mul_si(static_cast<long>(t.weight));
    if (acc.is_zero()) return {0, BigFloat(prec_)};
    return {acc.sign(), *lmax + acc.log_abs()};
}

LogValue power_sum_eval(const SignedCubeSet& X, const std::vector<SummandFunc>& funcs,
                        const std::vector<long long>& exponents, long precision_bits) {
    return PowerSumOracle(X, funcs, precision_bits).eval(exponents);
}

std::pair<double, bool> limit_extrapolate(const std::vector<std::pair<long long, double>>& estimates,
                                          double tolerance) {
    if (estimates.empty()) return {std::numeric_limits<double>::quiet_NaN(), false};
    double last = estimates.back().second;
    if (estimates.size() < 2) return {last, false};
    double prev = estimates[estimates.size() - 2].second;
    if (!std::isfinite(last) || !std::isfinite(prev)) return {last, false};
    double gap = std::abs(last - prev) / std::max(std::abs(last), 1e-300);
    return {last, gap < tolerance};
}

namespace {

constexpr double kRoundWindow = 0.45;

// Exact stand-in for a recovered value: the nearest integer when plausibly
// integral, otherwise the double itself (exactly representable as a
// rational).
Rational exact_candidate(double v) {
    double r = std::llround(v);
    if (r >= 1 && std::abs(v - r) < kRoundWindow) return Rational(static_cast<long>(r));
    Rational q;
    mpq_set_d(q.get_mpq_t(), v);
    q.canonicalize();
    return q;
}

// All oracle answers needed for one summand: the numerator sums for every
// stage and schedule step.  These depend only on the exclusions, so the
// tie-weight refinement below never re-queries.
struct RowQueries {
    std::vector<std::vector<LogValue>> num;  // [stage][k index]
    bool dead = false;                       // residual vanished
};

RowQueries query_row(const PowerSumOracle& oracle, const std::vector<PowerSumOracle::ExactSummand>& exclusions,
                     const RecoverySchedule& schedule) {
    const int F = oracle.func_count();
    RowQueries q;
    q.num.resize(static_cast<size_t>(F));
    for (int j = 0; j < F && !q.dead; ++j) {
        for (long long k : schedule.k_values) {
            std::vector<long long> exps(F, 0);
            for (int t = 0; t <= j; ++t) exps[t] = checked_pow(k, j + 1 - t);
            LogValue num = oracle.eval_excluding(exps, exclusions);
            if (num.sign <= 0) {
                q.dead = true;
                break;
            }
            q.num[static_cast<size_t>(j)].push_back(std::move(num));
        }
    }
    return q;
}

// Estimates from the cached numerators.  tie_weights[j] is the combined
// multiplicity of the remaining summands agreeing with this one on the
// first j+1 functions; dividing out its k-th root unbiases the stage.
RecoveredRow solve_row(const RowQueries& q, const RecoverySchedule& schedule, long prec,
                       const std::vector<long long>& tie_weights) {
    const int F = static_cast<int>(q.num.size());
    RecoveredRow row;
    row.values.assign(F, std::numeric_limits<double>::quiet_NaN());
    row.converged.assign(F, false);
    row.rounded.assign(F, Rational(0));
    for (int j = 0; j < F; ++j) {
        BigFloat log_w = BigFloat::log_of(Rational(static_cast<long>(tie_weights[static_cast<size_t>(j)])), prec);
        std::vector<std::pair<long long, double>> estimates;
        for (size_t ki = 0; ki < schedule.k_values.size(); ++ki) {
            long long k = schedule.k_values[ki];
            BigFloat denom_log = BigFloat::from_si(0, prec);
            for (int t = 0; t < j; ++t)
                denom_log += BigFloat::log_of(row.rounded[t], prec)
                                 .mul_si(static_cast<long>(checked_pow(k, j + 1 - t)));
            BigFloat est_log =
                (q.num[static_cast<size_t>(j)][ki].log_abs - denom_log - log_w).div_si(static_cast<long>(k));
            estimates.emplace_back(k, est_log.exp().to_double());
        }
        auto [value, conv] = limit_extrapolate(estimates, schedule.tolerance);
        row.values[j] = value;
        row.converged[j] = conv && value > 0;
        if (!(value > 0)) return row;  // downstream stages are meaningless
        row.rounded[j] = exact_candidate(value);
    }
    return row;
}

// Residual mass at stage j's deepest exponents, divided by the rounded
// values: the number of remaining summands tying through stage j.
std::vector<long long> tie_weights_for(const RowQueries& q, const RecoveredRow& row,
                                       const RecoverySchedule& schedule, long prec) {
    const int F = static_cast<int>(q.num.size());
    const long long k = schedule.k_values.back();
    const size_t ki = schedule.k_values.size() - 1;
    std::vector<long long> weights(static_cast<size_t>(F), 1);
    for (int j = 0; j < F; ++j) {
        if (!(row.rounded[j] > 0)) return weights;
        BigFloat denom_log = BigFloat::from_si(0, prec);
        for (int t = 0; t <= j; ++t)
            denom_log +=
                BigFloat::log_of(row.rounded[t], prec).mul_si(static_cast<long>(checked_pow(k, j + 1 - t)));
        double w = (q.num[static_cast<size_t>(j)][ki].log_abs - denom_log).exp().to_double();
        weights[static_cast<size_t>(j)] = std::isfinite(w) ? std::max(0LL, std::llround(w)) : 0;
    }
    return weights;
}

}  // namespace

std::vector<RecoveredRow> recover_leading_values(const PowerSumOracle& oracle, int summand_count,
                                                 const RecoverySchedule& schedule) {
    schedule.validate();
    const int F = oracle.func_count();
    const long prec = oracle.precision_bits();
    std::vector<RecoveredRow> rows;
    std::vector<PowerSumOracle::ExactSummand> exclusions;

    for (int i = 0; i < summand_count; ++i) {
        RowQueries q = query_row(oracle, exclusions, schedule);
        if (q.dead) {
            RecoveredRow row;
            row.values.assign(F, std::numeric_limits<double>::quiet_NaN());
            row.converged.assign(F, false);
            row.rounded.assign(F, Rational(0));
            row.exhausted = true;
            rows.push_back(std::move(row));
            continue;
        }
        std::vector<long long> hints(static_cast<size_t>(F), 1);
        RecoveredRow row = solve_row(q, schedule, prec, hints);
        std::vector<long long> ties = tie_weights_for(q, row, schedule, prec);
        if (ties != hints) {
            // Prefix ties bias every affected stage by ties[j]^(1/k); divide
            // them out and settle the roundings once more.
            for (auto& t : ties) t = std::max(t, 1LL);
            RecoveredRow refined = solve_row(q, schedule, prec, ties);
            std::vector<long long> confirm = tie_weights_for(q, refined, schedule, prec);
            if (confirm.back() >= 1) {
                row = std::move(refined);
                ties = std::move(confirm);
            }
        }
        long long w = ties.back();  // full-vector ties are the multiplicity
        if (w < 1) {
            // Residual does not match the rounded values; keep the estimates
            // but mark them unusable for exclusion.
            row.weight = 0;
            std::fill(row.converged.begin(), row.converged.end(), false);
            rows.push_back(std::move(row));
            continue;
        }
        row.weight = w;
        exclusions.push_back({row.rounded, w});
        rows.push_back(std::move(row));
    }
    return rows;
}

PowerSumOracle make_cube_oracle(const SignedCubeSet& hidden, long precision_bits) {
    std::vector<SummandFunc> funcs;
    funcs.push_back({SummandFunc::Kind::volume, -1});
    for (int i = 0; i < hidden.n; ++i) funcs.push_back({SummandFunc::Kind::edge_length, i});
    for (int i = 0; i < hidden.n; ++i) funcs.push_back({SummandFunc::Kind::corner_sum, i});
    return PowerSumOracle(hidden, std::move(funcs), precision_bits);
}

RecoveryResult recover_cubes(const PowerSumOracle& oracle, const RecoverySchedule& schedule) {
    const auto& funcs = oracle.funcs();
    const int F = oracle.func_count();
    if (F < 3 || F % 2 == 0 || funcs[0].kind != SummandFunc::Kind::volume)
        throw std::invalid_argument("oracle is not in cube layout");
    const int n = (F - 1) / 2;
    for (int i = 0; i < n; ++i)
        if (funcs[1 + i].kind != SummandFunc::Kind::edge_length ||
            funcs[1 + n + i].kind != SummandFunc::Kind::corner_sum)
            throw std::invalid_argument("oracle is not in cube layout");

    RecoveryResult result;
    result.complete = true;
    long long remaining = oracle.total_weight();
    auto rows = recover_leading_values(oracle, static_cast<int>(remaining), schedule);
    for (const auto& row : rows) {
        if (row.exhausted) break;
        RecoveredCube rc;
        rc.weight = row.weight;
        rc.volume = row.values[0];
        rc.converged = std::all_of(row.converged.begin(), row.converged.end(), [](bool b) { return b; });
        rc.edge_lengths.assign(row.values.begin() + 1, row.values.begin() + 1 + n);
        rc.corner_sums.assign(row.values.begin() + 1 + n, row.values.end());
        Point x(n), y(n);
        bool exact = true, finite = true;
        for (int i = 0; i < n; ++i) {
            double xi = (rc.corner_sums[i] - rc.edge_lengths[i]) / 2.0;
            double yi = (rc.corner_sums[i] + rc.edge_lengths[i]) / 2.0;
            if (!std::isfinite(xi) || !std::isfinite(yi)) {
                finite = false;
                break;
            }
            x[i] = static_cast<int>(std::llround(xi));
            y[i] = static_cast<int>(std::llround(yi));
            if (std::abs(xi - x[i]) >= 0.5 || std::abs(yi - y[i]) >= 0.5) exact = false;
        }
        if (finite && leq(x, y)) {
            rc.cube = CubeSpec(x, y);
            rc.has_cube = true;
            rc.exact = exact;
        }
        if (!rc.has_cube || !rc.exact || !rc.converged || row.weight < 1) result.complete = false;
        remaining -= row.weight;
        result.cubes.push_back(std::move(rc));
        if (remaining <= 0) break;
    }
    if (remaining > 0) result.complete = false;
    return result;
}

}  // namespace mpinv
