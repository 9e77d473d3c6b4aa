#pragma once

#include <string>

#include <json.hpp>

#include "centrekit/bundle.hpp"
#include "centrekit/repr.hpp"
#include "centrekit/verify.hpp"

namespace centrekit {

/// Cayley file format: first line "n", then n rows of n whitespace-separated
/// element indices; 0 is the identity.
FiniteGroup read_cayley_file(const std::string& path);
std::string cayley_to_text(const FiniteGroup& g);

/// Permutation-generator format: a JSON array of arrays, each inner array the
/// image list of {0..m-1}.
FiniteGroup read_permutation_file(const std::string& path, int cap = 1024);

/// Resolve a group source: builtin name (cyclic:n, dihedral:n, symmetric:n,
/// quaternion, product:cyclic:a,b or aliases like s3, d4, q8, c5) or a path
/// to a Cayley / permutation file.
FiniteGroup resolve_group_source(const std::string& source, int cap = 1024);

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json bundle_to_json(const EquivariantBundle& v);
EquivariantBundle bundle_from_json(const nlohmann::json& j, GroupPtr fallback_group = nullptr);
EquivariantBundle read_bundle_file(const std::string& path, GroupPtr fallback_group = nullptr);
void write_bundle_file(const std::string& path, const EquivariantBundle& v,
                       const std::vector<int>* grading = nullptr);

nlohmann::json morphism_to_json(const BundleMorphism& f);
BundleMorphism morphism_from_json(const nlohmann::json& j);

nlohmann::json character_table_to_json(const CharacterTable& table);
std::string character_table_to_text(const CharacterTable& table, double eps = 1e-8);

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_text(const std::vector<CheckReport>& reports);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace centrekit
