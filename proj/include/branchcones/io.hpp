#pragma once

// Plain-text H-representation export and JSON forms of results.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "branchcones/bz.hpp"
#include "branchcones/cones.hpp"
#include "branchcones/oracle.hpp"

namespace branchcones {

/// "<rows> <dim+1>" then "0 a_1 ... a_d" per row; an equality becomes two rows.
void write_ine(const ConeH& cone, std::ostream& os);
nlohmann::json cone_sidecar(const ConeH& cone);
/// Writes `path` and the sidecar at `path` with extension ".json"; returns the sidecar path.
std::filesystem::path export_cone(const ConeH& cone, const std::filesystem::path& path);

nlohmann::json to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);
/// Integer when it fits in 64 bits, decimal string otherwise.
nlohmann::json to_json(const BigInt& n);

nlohmann::json template_descriptor(const BZTemplate& t);
nlohmann::json to_json(const BZTemplate& t, const BZFilling& f);
nlohmann::json to_json(const Tree& tree);
nlohmann::json to_json(const Tree& tree, const BZTemplate& t, const Quilt& q);

}  // namespace branchcones
