#pragma once

/* JSON input/output.  Parsing is strict about shape: unknown fields, wrong
 * types, malformed entries and duplicate table keys are ParseError (exit 2);
 * semantic range and realizability problems are left to validate (exit 1). */

#include <string>

#include "json.hpp"

#include "families.hpp"
#include "swspin.hpp"

namespace spinsw {

struct InputDocument {
    enum class Kind { Manifold, Family, Pair } kind = Kind::Manifold;
    ManifoldData manifold;  // also the first element of a pair
    FamilyData family;
    ManifoldData second;    // second element of a pair
};

ManifoldData manifold_from_json(const nlohmann::json& j);
FamilyData family_from_json(const nlohmann::json& j);

/* Dispatches on the "kind" field. */
InputDocument parse_document(const nlohmann::json& j);
InputDocument parse_file(const std::string& path);
ManifoldData parse_manifold_file(const std::string& path);
FamilyData parse_family_file(const std::string& path);

/* Emission; output re-parses to the same data. */
nlohmann::ordered_json manifold_to_json(const ManifoldData& md);
std::string manifold_to_text(const ManifoldData& md);  // pretty, newline-terminated

}  // namespace spinsw
