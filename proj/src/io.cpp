#include "mpinv/io.hpp"

#include <fstream>

namespace mpinv::io {

using nlohmann::json;

namespace {

Point point_from_json(const json& j, int n, const char* what) {
    if (!j.is_array()) throw SemanticError(std::string(what) + " must be an integer array");
    Point p;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw SemanticError(std::string(what) + " must be an integer array");
        p.push_back(e.get<int>());
    }
    if (n > 0 && static_cast<int>(p.size()) != n)
        throw SemanticError(std::string(what) + " has wrong length, expected " + std::to_string(n));
    return p;
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) throw SemanticError(std::string("missing integer field ") + key);
    return j[key].get<int>();
}

// Missing fields and wrong value types surface as semantic errors, not as
// raw json exceptions.
template <typename Fn>
auto checked(Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw SemanticError(e.what());
    }
}

}  // namespace

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void save_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

GridBox box_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lo") || !j.contains("hi")) throw SemanticError("box needs lo and hi");
    Point lo = point_from_json(j["lo"], 0, "box.lo");
    Point hi = point_from_json(j["hi"], static_cast<int>(lo.size()), "box.hi");
    if (!leq(lo, hi)) throw SemanticError("box corners out of order");
    return GridBox(lo, hi);
}

json box_to_json(const GridBox& box) { return json{{"lo", box.lo}, {"hi", box.hi}}; }

namespace {

PersistenceModule module_from_json_unchecked(const json& j) {
    if (!j.is_object()) throw SemanticError("module file must be a JSON object");
    int n = int_field(j, "n");
    if (n < 1) throw SemanticError("n must be positive");
    bool has_cubes = j.contains("cubes");
    bool has_explicit = j.contains("dims") || j.contains("maps");
    if (has_cubes == has_explicit) throw SemanticError("module file needs exactly one of cubes or dims+maps");

    if (has_cubes) {
        std::vector<std::pair<CubeSpec, int>> cubes;
        for (const auto& c : j["cubes"]) {
            Point x = point_from_json(c.at("x"), n, "cube.x");
            Point y = point_from_json(c.at("y"), n, "cube.y");
            if (!leq(x, y)) throw SemanticError("cube corners out of order");
            int mult = c.contains("mult") ? int_field(c, "mult") : 1;
            if (mult < 1) throw SemanticError("cube multiplicity must be positive");
            cubes.emplace_back(CubeSpec(x, y), mult);
        }
        if (cubes.empty()) throw SemanticError("empty module not representable");
        PersistenceModule m = PersistenceModule::from_cubes(n, cubes);
        if (j.contains("box")) {
            GridBox declared = box_from_json(j["box"]);
            if (declared.n != n) throw SemanticError("box dimension mismatch");
            if (!declared.contains(m.box.lo) || !declared.contains(m.box.hi))
                throw SemanticError("cubes escape the declared box");
            m = direct_sum(m, PersistenceModule::zero(declared));  // pad to the declared box
        }
        return m;
    }

    if (!j.contains("dims") || !j.contains("maps")) throw SemanticError("module file needs both dims and maps");
    if (!j.contains("box")) throw SemanticError("explicit module needs a box");
    GridBox box = box_from_json(j["box"]);
    if (box.n != n) throw SemanticError("box dimension mismatch");
    PersistenceModule m{box};
    for (const auto& d : j["dims"]) {
        Point v = point_from_json(d.at("v"), n, "dims.v");
        if (!box.contains(v)) throw SemanticError("dims entry outside box at " + format_point(v));
        int dim = int_field(d, "dim");
        if (dim < 0) throw SemanticError("negative dimension at " + format_point(v));
        m.dims[static_cast<size_t>(box.index_of(v))] = dim;
    }
    // Unlisted edges default to the zero map of the shape implied by dims.
    auto pts = box.all_points();
    for (int a = 0; a < n; ++a)
        for (size_t pi = 0; pi < pts.size(); ++pi) {
            if (!m.has_edge(pts[pi], a)) continue;
            Point w = pts[pi];
            ++w[a];
            m.maps[a][pi] = IntMatrix(m.dim_at(w), m.dim_at(pts[pi]));
        }
    for (const auto& e : j["maps"]) {
        Point v = point_from_json(e.at("v"), n, "maps.v");
        int axis = int_field(e, "axis");
        if (axis < 0 || axis >= n) throw SemanticError("map axis out of range at " + format_point(v));
        if (!box.contains(v) || !m.has_edge(v, axis))
            throw SemanticError("map edge outside box at " + format_point(v));
        int rows = int_field(e, "rows"), cols = int_field(e, "cols");
        if (rows < 0 || cols < 0 || rows > 1 << 20 || cols > 1 << 20) throw SemanticError("bad matrix shape");
        const auto& entries = e.at("entries");
        if (!entries.is_array() ||
            static_cast<long long>(entries.size()) != static_cast<long long>(rows) * cols)
            throw SemanticError("matrix entries do not match declared shape at " + format_point(v));
        IntMatrix f(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int c = 0; c < cols; ++c) {
                const auto& x = entries[static_cast<size_t>(i) * cols + c];
                if (!x.is_number_integer()) throw SemanticError("matrix entries must be integers");
                f.at(i, c) = big_int(x.get<long long>());
            }
        m.maps[axis][static_cast<size_t>(box.index_of(v))] = std::move(f);
    }
    return m;
}

}  // namespace

PersistenceModule module_from_json(const json& j) {
    return checked([&] { return module_from_json_unchecked(j); });
}

json module_to_json_cubes(int n, const std::vector<std::pair<CubeSpec, int>>& cubes) {
    json arr = json::array();
    for (const auto& [cube, mult] : cubes) arr.push_back({{"x", cube.x}, {"y", cube.y}, {"mult", mult}});
    return json{{"n", n}, {"cubes", arr}};
}

json module_to_json_explicit(const PersistenceModule& m) {
    json dims = json::array();
    auto pts = m.box.all_points();
    for (size_t pi = 0; pi < pts.size(); ++pi)
        if (m.dims[pi] != 0) dims.push_back({{"v", pts[pi]}, {"dim", m.dims[pi]}});
    json maps = json::array();
    for (int a = 0; a < m.n(); ++a)
        for (size_t pi = 0; pi < pts.size(); ++pi) {
            if (!m.has_edge(pts[pi], a)) continue;
            const IntMatrix& f = m.maps[a][pi];
            if (f.rows() == 0 || f.cols() == 0) continue;
            json entries = json::array();
            bool all_zero = true;
            for (int i = 0; i < f.rows(); ++i)
                for (int c = 0; c < f.cols(); ++c) {
                    const BigInt& x = f.at(i, c);
                    if (x != 0) all_zero = false;
                    entries.push_back(x.get_si());
                }
            if (all_zero) continue;
            maps.push_back({{"v", pts[pi]}, {"axis", a}, {"rows", f.rows()}, {"cols", f.cols()}, {"entries", entries}});
        }
    return json{{"n", m.n()}, {"box", box_to_json(m.box)}, {"dims", dims}, {"maps", maps}};
}

SignedCubeSet cube_set_from_json(const json& j) {
    return checked([&] {
        if (!j.is_object()) throw SemanticError("cube set file must be a JSON object");
        int n = int_field(j, "n");
        if (n < 1) throw SemanticError("n must be positive");
        SignedCubeSet X(n);
        if (!j.contains("terms") || !j["terms"].is_array()) throw SemanticError("cube set needs a terms array");
        for (const auto& t : j["terms"]) {
            Point x = point_from_json(t.at("x"), n, "term.x");
            Point y = point_from_json(t.at("y"), n, "term.y");
            if (!leq(x, y)) throw SemanticError("cube corners out of order");
            long long coeff = t.contains("coeff") ? t["coeff"].get<long long>() : 1;
            X.add_term(CubeSpec(x, y), coeff);
        }
        return X;
    });
}

json cube_set_to_json(const SignedCubeSet& X, const GridBox* box) {
    json terms = json::array();
    for (const auto& [cube, coeff] : X.terms) terms.push_back({{"x", cube.x}, {"y", cube.y}, {"coeff", coeff}});
    json out{{"n", X.n}, {"terms", terms}};
    if (box) out["box"] = box_to_json(*box);
    return out;
}

json rank_table_to_json(const RankInvariant& table) {
    json values = json::object();
    for (const auto& [key, val] : table.values)
        if (val != 0) values[format_point(key.first) + "|" + format_point(key.second)] = val;
    return json{{"n", table.box.n}, {"box", box_to_json(table.box)}, {"values", values}};
}

RankInvariant rank_table_from_json(const json& j) {
    return checked([&] {
        if (!j.is_object()) throw SemanticError("rank table file must be a JSON object");
        GridBox box = box_from_json(j.at("box"));
        RankInvariant table(box);
        for (const auto& [key, val] : j.at("values").items()) {
            auto bar = key.find('|');
            if (bar == std::string::npos) throw SemanticError("bad pair key " + key);
            Point u = parse_point(key.substr(0, bar));
            Point v = parse_point(key.substr(bar + 1));
            if (!val.is_number_integer()) throw SemanticError("rank values must be integers");
            table.set(u, v, val.get<long long>());
        }
        return table;
    });
}

json feature_vector_to_json(const std::vector<FeatureVector>& families, int max_degree) {
    json rows = json::array();
    int n = 0;
    for (const auto& fv : families) {
        n = fv.n;
        for (const auto& e : fv.entries) {
            rows.push_back({{"a", e.idx.a},
                            {"b", e.idx.b},
                            {"family", e.family == Family::moment ? "F" : "p"},
                            {"value", to_fraction_string(e.value)},
                            {"approx", e.value.get_d()}});
        }
    }
    return json{{"n", n}, {"max_degree", max_degree}, {"rows", rows}};
}

json recovery_to_json(const RecoveryResult& result, const RecoverySchedule& schedule, int n, int shift) {
    json cubes = json::array();
    for (const auto& rc : result.cubes) {
        json item{{"weight", rc.weight},
                  {"converged", rc.converged},
                  {"exact", rc.exact},
                  {"volume", rc.volume},
                  {"edge_lengths", rc.edge_lengths},
                  {"corner_sums", rc.corner_sums}};
        if (rc.has_cube) {
            Point x = rc.cube.x, y = rc.cube.y;
            for (int i = 0; i < n; ++i) {
                x[i] -= shift;
                y[i] -= shift;
            }
            item["x"] = x;
            item["y"] = y;
        }
        // corner sums were computed on shifted data
        if (shift != 0) item["shift_applied"] = shift;
        cubes.push_back(std::move(item));
    }
    return json{{"n", n},
                {"k_values", schedule.k_values},
                {"precision_bits", schedule.precision_bits},
                {"tolerance", schedule.tolerance},
                {"complete", result.complete},
                {"recovered", cubes}};
}

PersistenceModule load_module(const std::filesystem::path& path) { return module_from_json(load_json(path)); }

SignedCubeSet load_cube_set(const std::filesystem::path& path) { return cube_set_from_json(load_json(path)); }

}  // namespace mpinv::io
