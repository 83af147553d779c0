#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotslice/form.hpp"
#include "knotslice/numeric.hpp"
#include "knotslice/seifert.hpp"

namespace knotslice {

// Key order is part of the output contract (byte-identical reruns), so all
// emitted JSON uses the insertion-ordered variant.
using ordered_json = nlohmann::ordered_json;

/// One entry of a knot table. Records that fail Seifert validation keep
/// their parse error instead of a matrix, so batch runs can report them
/// inline and continue.
struct KnotRecord {
  std::string name;
  std::optional<SeifertMatrix> matrix;
  std::string error;
  ordered_json metadata;  // echoed verbatim
};

/// Integers in JSON: plain integer literals, or decimal strings for values
/// beyond what a JSON number can carry exactly.
Int json_to_int(const nlohmann::json& v);
ordered_json int_to_json(const Int& v);

Int parse_decimal(const std::string& text);

IntMatrix parse_int_matrix(const nlohmann::json& rows);

/// Knot file: JSON array of {"name", "seifert_matrix", "metadata"?}.
std::vector<KnotRecord> load_knot_table(const std::string& path);
std::vector<KnotRecord> parse_knot_table(const nlohmann::json& doc);

/// Manifold descriptor: a preset name ("CP2", "CP2bar", "S2xS2", "K3", "E8"),
/// or JSON {"preset": name} | {"matrix": [[..]], "ks": 0|1} |
/// {"sum": [descriptor, ...]}.
IntersectionForm parse_manifold(const std::string& text);
IntersectionForm parse_manifold_json(const nlohmann::json& v);

/// Comma-separated class vector, each coordinate a decimal integer.
HomologyClass parse_class(const std::string& text);

}  // namespace knotslice
