#include "knotslice/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "knotslice/errors.hpp"

namespace knotslice {

Int parse_decimal(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("empty integer literal");
  for (std::size_t k = i; k < text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw ParseError("not a decimal integer: '" + text + "'");
  // GMP rejects an explicit leading '+'
  return text[0] == '+' ? Int(text.substr(1)) : Int(text);
}

Int json_to_int(const nlohmann::json& v) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
  if (v.is_string()) return parse_decimal(v.get<std::string>());
  throw ParseError("expected an integer (number or decimal string), got: " + v.dump());
}

ordered_json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return ordered_json(static_cast<long long>(v));
  return ordered_json(v.str());
}

IntMatrix parse_int_matrix(const nlohmann::json& rows) {
  if (!rows.is_array()) throw ParseError("matrix must be an array of rows");
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw ParseError("matrix must be square");
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = json_to_int(row[static_cast<std::size_t>(j)]);
  }
  return m;
}

std::vector<KnotRecord> parse_knot_table(const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError("knot table must be a JSON array");
  std::vector<KnotRecord> records;
  records.reserve(doc.size());
  for (const auto& entry : doc) {
    KnotRecord rec;
    if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string()) {
      rec.name = "<unnamed>";
      rec.error = "record must be an object with a string 'name'";
      records.push_back(std::move(rec));
      continue;
    }
    rec.name = entry["name"].get<std::string>();
    if (entry.contains("metadata")) rec.metadata = entry["metadata"];
    try {
      if (!entry.contains("seifert_matrix"))
        throw ParseError("missing 'seifert_matrix'");
      rec.matrix = SeifertMatrix(parse_int_matrix(entry["seifert_matrix"]));
    } catch (const Error& e) {
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<KnotRecord> load_knot_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open knot file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("knot file " + path + ": " + e.what());
  }
  return parse_knot_table(doc);
}

IntersectionForm parse_manifold_json(const nlohmann::json& v) {
  if (v.is_string()) {
    const auto preset = presets::by_name(v.get<std::string>());
    if (!preset) throw ParseError("unknown manifold preset: " + v.get<std::string>());
    return *preset;
  }
  if (!v.is_object()) throw ParseError("manifold descriptor must be an object or preset name");
  if (v.contains("preset")) return parse_manifold_json(v["preset"]);
  if (v.contains("sum")) {
    if (!v["sum"].is_array()) throw ParseError("'sum' must be an array of descriptors");
    IntersectionForm acc;
    for (const auto& part : v["sum"]) acc = connected_sum(acc, parse_manifold_json(part));
    return acc;
  }
  if (v.contains("matrix")) {
    int ks = 0;
    if (v.contains("ks")) {
      const Int bit = json_to_int(v["ks"]);
      if (bit != 0 && bit != 1) throw ParseError("'ks' must be 0 or 1");
      ks = static_cast<int>(bit);
    }
    return IntersectionForm(parse_int_matrix(v["matrix"]), ks);
  }
  throw ParseError("manifold descriptor needs 'preset', 'matrix' or 'sum'");
}

IntersectionForm parse_manifold(const std::string& text) {
  const auto preset = presets::by_name(text);
  if (preset) return *preset;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw ParseError("manifold is neither a known preset nor valid JSON: " + text);
  }
  return parse_manifold_json(doc);
}

HomologyClass parse_class(const std::string& text) {
  std::vector<Int> coords;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty class coordinate in: " + text);
    const auto last = item.find_last_not_of(" \t");
    coords.push_back(parse_decimal(item.substr(first, last - first + 1)));
  }
  if (coords.empty()) throw ParseError("class vector must not be empty");
  HomologyClass x(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) x(static_cast<Eigen::Index>(i)) = coords[i];
  return x;
}

}  // namespace knotslice
