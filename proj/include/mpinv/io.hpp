#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mpinv/invariants.hpp"
#include "mpinv/persistence_module.hpp"
#include "mpinv/rank_invariant.hpp"
#include "mpinv/recovery.hpp"
#include "mpinv/signed_cube_set.hpp"

namespace mpinv::io {

// Unreadable or syntactically malformed input (CLI exit 2).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Well-formed input violating a semantic invariant (CLI exit 3).
struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const nlohmann::json& j);

// Module files carry either "cubes" or "dims"+"maps", never both.
PersistenceModule module_from_json(const nlohmann::json& j);
nlohmann::json module_to_json_cubes(int n, const std::vector<std::pair<CubeSpec, int>>& cubes);
nlohmann::json module_to_json_explicit(const PersistenceModule& m);

SignedCubeSet cube_set_from_json(const nlohmann::json& j);
nlohmann::json cube_set_to_json(const SignedCubeSet& X, const GridBox* box = nullptr);
GridBox box_from_json(const nlohmann::json& j);
nlohmann::json box_to_json(const GridBox& box);

nlohmann::json rank_table_to_json(const RankInvariant& table);
RankInvariant rank_table_from_json(const nlohmann::json& j);

nlohmann::json feature_vector_to_json(const std::vector<FeatureVector>& families, int max_degree);

nlohmann::json recovery_to_json(const RecoveryResult& result, const RecoverySchedule& schedule, int n, int shift);

PersistenceModule load_module(const std::filesystem::path& path);
SignedCubeSet load_cube_set(const std::filesystem::path& path);

}  // namespace mpinv::io
