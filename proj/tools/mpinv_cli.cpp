#include <CLI11.hpp>

#include <cstdint>
#include <iostream>

#include "mpinv/hilbert.hpp"
#include "mpinv/invariants.hpp"
#include "mpinv/io.hpp"
#include "mpinv/recovery.hpp"
#include "mpinv/samplers.hpp"

using namespace mpinv;

namespace {

int run_validate(const std::string& path) {
    PersistenceModule m = io::load_module(path);
    ValidationReport report = m.validate();
    if (report.ok()) {
        std::cout << "ok: module on box " << format_point(m.box.lo) << ".." << format_point(m.box.hi) << "\n";
        return 0;
    }
    for (const auto& v : report.violations) {
        const char* kind = v.kind == Violation::Kind::shape_mismatch ? "shape mismatch" : "commutativity failure";
        std::cout << kind << " at " << format_point(v.at);
        if (v.axis_b >= 0)
            std::cout << " axes (" << v.axis_a << "," << v.axis_b << ")";
        else if (v.axis_a >= 0)
            std::cout << " axis " << v.axis_a;
        std::cout << ": " << v.detail << "\n";
    }
    return 3;
}

int run_rank_table(const std::string& path, const std::string& out) {
    PersistenceModule m = io::load_module(path);
    io::save_json(out, io::rank_table_to_json(m.rank_table()));
    return 0;
}

int run_decompose(const std::string& path, const std::string& out, bool reduce_degenerate) {
    PersistenceModule m = io::load_module(path);
    SignedCubeSet X = decompose(m.rank_table());
    if (reduce_degenerate) X = X.without_degenerate();
    io::save_json(out, io::cube_set_to_json(X, &m.box));
    return 0;
}

int run_features(const std::string& path, const std::string& family, int max_degree, const std::string& out) {
    PersistenceModule m = io::load_module(path);
    std::vector<FeatureVector> families;
    if (family == "F" || family == "both") families.push_back(feature_vector(m, max_degree, Family::moment));
    if (family == "p" || family == "both") families.push_back(feature_vector(m, max_degree, Family::power_sum));
    if (families.empty()) throw io::SemanticError("family must be F, p or both");
    io::save_json(out, io::feature_vector_to_json(families, max_degree));
    return 0;
}

int run_recover(const std::string& path, long long kmax, long precision_bits, bool shift_positive,
                const std::string& out) {
    SignedCubeSet X = io::load_cube_set(path);
    if (!X.all_positive()) throw io::SemanticError("signed sets unsupported");
    int shift = 0;
    if (shift_positive) {
        int min_coord = 0;
        bool first = true;
        for (const auto& [cube, coeff] : X.terms)
            for (int i = 0; i < X.n; ++i) {
                min_coord = first ? cube.x[i] : std::min(min_coord, cube.x[i]);
                first = false;
            }
        if (!first && min_coord < 1) shift = 1 - min_coord;
    }
    SignedCubeSet shifted(X.n);
    for (const auto& [cube, coeff] : X.terms) {
        Point x = cube.x, y = cube.y;
        for (int i = 0; i < X.n; ++i) {
            x[i] += shift;
            y[i] += shift;
        }
        shifted.add_term(CubeSpec(x, y), coeff);
    }
    RecoverySchedule schedule = RecoverySchedule::doubling(kmax, precision_bits);
    RecoveryResult result = recover_cubes(make_cube_oracle(shifted, precision_bits), schedule);
    io::save_json(out, io::recovery_to_json(result, schedule, X.n, shift));
    std::cout << (result.complete ? "recovered all summands exactly\n" : "recovery incomplete, see report\n");
    return result.complete ? 0 : 3;
}

int run_check_algebra(int n, int max_degree) {
    bool all_ok = true;
    auto line = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS  " : "FAIL  ") << name << "\n";
        all_ok = all_ok && ok;
    };

    HilbertCoeffs hs = hilbert_product_coeffs(n, max_degree);
    bool dims_match = true;
    for (int d = 0; d <= max_degree; ++d)
        if (free_algebra_dim(n, d) != hs.coeffs[static_cast<size_t>(d)]) dims_match = false;
    line("free algebra dimensions match product coefficients (degrees 0.." + std::to_string(max_degree) + ")",
         dims_match);

    bool gens_match = true;
    for (int d = 0; d <= max_degree; ++d)
        if (count_generators(n, d) != count_generators_brute(n, d)) gens_match = false;
    line("generator counts match enumeration", gens_match);

    bool stab = true;
    for (int d = 0; d <= std::min(max_degree, 6); ++d)
        if (bounded_multiset_dim(n, d, d) != free_algebra_dim(n, d)) stab = false;
    line("bounded multiset counts stabilize at the free dimension", stab);

    bool pascal = true;
    for (int x = 1; x <= 12; ++x)
        for (int k = 0; k <= 12; ++k)
            if (!hockey_stick_identity_holds(x, k)) pascal = false;
    line("hockey stick identity (x, k <= 12)", pascal);

    return all_ok ? 0 : 1;
}

int run_gen_random(int n, int box_extent, int cube_count, bool general, uint64_t seed, const std::string& out) {
    Rng rng(seed);
    auto cubes = random_cube_list(rng, n, 0, box_extent - 1, cube_count, 2, false);
    if (general) {
        PersistenceModule m = general_random_module(rng, n, cubes);
        if (!m.validate().ok()) throw std::logic_error("generated module failed validation");
        io::save_json(out, io::module_to_json_explicit(m));
    } else {
        io::save_json(out, io::module_to_json_cubes(n, cubes));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of multiparameter persistence modules"};
    app.require_subcommand(1);

    std::string in_path, out_path, family = "both";
    int features_degree = 4, check_n = 1, check_degree = 10, gen_n = 2, box_extent = 5, cube_count = 3;
    long long kmax = 64;
    long precision_bits = 512;
    bool reduce_degenerate = false, shift_positive = false, general = false;
    uint64_t seed = 1;

    auto* validate = app.add_subcommand("validate", "check a module file");
    validate->add_option("input", in_path)->required();

    auto* rank_table = app.add_subcommand("rank-table", "tabulate the rank function");
    rank_table->add_option("input", in_path)->required();
    rank_table->add_option("output", out_path)->required();

    auto* decomp = app.add_subcommand("decompose", "signed cube decomposition of the rank table");
    decomp->add_option("input", in_path)->required();
    decomp->add_option("output", out_path)->required();
    decomp->add_flag("--reduce-degenerate", reduce_degenerate, "drop zero-volume cubes (lossy)");

    auto* features = app.add_subcommand("features", "evaluate invariant families");
    features->add_option("input", in_path)->required();
    features->add_option("output", out_path)->required();
    features->add_option("--family", family, "F, p or both")->default_str("both");
    features->add_option("--max-degree", features_degree);

    auto* recover = app.add_subcommand("recover", "recover cubes from power sums");
    recover->add_option("input", in_path)->required();
    recover->add_option("output", out_path)->required();
    recover->add_option("--kmax", kmax);
    recover->add_option("--precision-bits", precision_bits);
    recover->add_flag("--shift-positive", shift_positive, "shift coordinates to be positive, unshift outputs");

    auto* check = app.add_subcommand("check-algebra", "verify graded counting identities");
    check->add_option("--n", check_n);
    check->add_option("--max-degree", check_degree);

    auto* gen = app.add_subcommand("gen-random", "emit a deterministic random module file");
    gen->add_option("--n", gen_n)->check(CLI::PositiveNumber);
    gen->add_option("--box", box_extent, "grid points per axis")->check(CLI::PositiveNumber);
    gen->add_option("--cubes", cube_count)->check(CLI::PositiveNumber);
    gen->add_flag("--general", general, "explicit dims+maps with perturbed matrices");
    gen->add_option("--seed", seed);
    gen->add_option("output", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return run_validate(in_path);
        if (*rank_table) return run_rank_table(in_path, out_path);
        if (*decomp) return run_decompose(in_path, out_path, reduce_degenerate);
        if (*features) return run_features(in_path, family, features_degree, out_path);
        if (*recover) return run_recover(in_path, kmax, precision_bits, shift_positive, out_path);
        if (*check) return run_check_algebra(check_n, check_degree);
        if (*gen) return run_gen_random(gen_n, box_extent, cube_count, general, seed, out_path);
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const io::SemanticError& e) {
        std::cerr << "semantic error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "semantic error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
