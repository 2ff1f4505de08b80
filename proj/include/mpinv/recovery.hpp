#pragma once

#include <utility>
#include <vector>

#include "mpinv/big_float.hpp"
#include "mpinv/grid.hpp"
#include "mpinv/rational.hpp"
#include "mpinv/signed_cube_set.hpp"

namespace mpinv {

// Per-summand functions exposed by the oracle.
struct SummandFunc {
    enum class Kind { volume, edge_length, corner_sum };
    Kind kind = Kind::volume;
    int axis = -1;  // for edge_length / corner_sum
};

Rational summand_func_value(const SummandFunc& f, const CubeSpec& cube);

// Nonzero real in log form: sign and log of magnitude.  sign == 0 means the
// value is exactly zero (log_abs is then meaningless).
struct LogValue {
    int sign = 0;
    BigFloat log_abs;
};

struct RecoverySchedule {
    std::vector<long long> k_values{4, 8, 16, 32, 64};
    long precision_bits = 512;
    double tolerance = 1e-6;

    void validate() const;
    static RecoverySchedule doubling(long long k_max, long precision_bits = 512, double tolerance = 1e-6);
};

// View of a hidden positive cube multiset through weighted power sums
// sum_i w_i * prod_j f_j(cube_i)^{e_j}, answered in log form at a fixed
// working precision.  The exclusion variant subtracts caller-supplied
// summands before taking logs, cancelling exactly on equal value vectors, so
// the residual survives any precision gap.
class PowerSumOracle {
public:
    struct ExactSummand {
        std::vector<Rational> values;  // all strictly positive
        long long weight = 1;
    };

    PowerSumOracle(const SignedCubeSet& hidden, std::vector<SummandFunc> funcs, long precision_bits);

    int func_count() const { return static_cast<int>(funcs_.size()); }
    const std::vector<SummandFunc>& funcs() const { return funcs_; }
    long precision_bits() const { return prec_; }
    long long total_weight() const;

    LogValue eval(const std::vector<long long>& exponents) const;
    LogValue eval_excluding(const std::vector<long long>& exponents,
                            const std::vector<ExactSummand>& excluded) const;

private:
    std::vector<ExactSummand> summands_;
    std::vector<SummandFunc> funcs_;
    long prec_;
};

// One-shot weighted power sum of X in log form; X must have positive
// coefficients and positive function values.
LogValue power_sum_eval(const SignedCubeSet& X, const std::vector<SummandFunc>& funcs,
                        const std::vector<long long>& exponents, long precision_bits);

// Last value of the sequence plus a flag for the relative gap between the
// final two estimates.
std::pair<double, bool> limit_extrapolate(const std::vector<std::pair<long long, double>>& estimates,
                                          double tolerance);

struct RecoveredRow {
    std::vector<double> values;       // last estimate per function
    std::vector<bool> converged;      // per function
    std::vector<Rational> rounded;    // values used for exclusion
    long long weight = 0;             // recovered multiplicity
    bool exhausted = false;           // nothing left to recover
};

// Recovers the function-value vectors of the hidden summands in decreasing
// lexicographic order, one nested-exponent limit per entry.  Produces
// summand_count rows; rows past the hidden content come back exhausted.
std::vector<RecoveredRow> recover_leading_values(const PowerSumOracle& oracle, int summand_count,
                                                 const RecoverySchedule& schedule);

struct RecoveredCube {
    CubeSpec cube;  // meaningful iff has_cube
    bool has_cube = false;
    bool exact = false;      // every coordinate rounded by less than 0.5
    bool converged = false;  // every stage converged
    long long weight = 0;
    double volume = 0;  // raw estimate, before rounding
    std::vector<double> edge_lengths, corner_sums;
};

struct RecoveryResult {
    std::vector<RecoveredCube> cubes;
    bool complete = false;  // all weight accounted for, exact and converged
};

// Oracle over (volume, edge lengths, corner sums), the layout recover_cubes
// expects.  Requires strictly positive coordinates and no degenerate cubes.
PowerSumOracle make_cube_oracle(const SignedCubeSet& hidden, long precision_bits);

RecoveryResult recover_cubes(const PowerSumOracle& oracle, const RecoverySchedule& schedule);

}  // namespace mpinv
