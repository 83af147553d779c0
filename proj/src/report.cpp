#include "knotslice/report.hpp"

#include <sstream>
#include <utility>

#include "knotslice/errors.hpp"
#include "knotslice/version.hpp"

namespace knotslice {

namespace {

ordered_json condition_json(const ConditionRecord& c) {
  ordered_json j;
  j["id"] = c.id;
  j["required"] = c.required;
  j["actual"] = c.actual;
  j["margin"] = int_to_json(c.margin);
  j["passed"] = c.passed;
  j["necessary"] = c.necessary;
  return j;
}

ordered_json optional_int_table(const std::vector<std::optional<Int>>& table) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : table) {
    if (v.has_value())
      arr.push_back(int_to_json(*v));
    else
      arr.push_back(nullptr);
  }
  return arr;
}

ordered_json engine_stamp() {
  ordered_json j;
  j["name"] = kEngineName;
  j["version"] = kEngineVersion;
  return j;
}

std::string scalar_to_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

// for the per-angle tables, where null marks a root of the Alexander polynomial
std::string cell_to_text(const ordered_json& v) {
  return v.is_null() ? "singular" : scalar_to_text(v);
}

}  // namespace

ordered_json conditions_json(const SliceVerdict& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : v.reasons) arr.push_back(condition_json(c));
  return arr;
}

ordered_json verdict_json(const SliceVerdict& v) {
  ordered_json j;
  j["verdict"] = to_string(v.answer);
  j["conditions"] = conditions_json(v);
  return j;
}

ordered_json stabilizing_json(const StabilizingResult& r) {
  ordered_json j;
  j["finite"] = r.finite;
  if (!r.finite)
    j["value"] = "infinite";
  else
    j["value"] = r.value.has_value() ? int_to_json(*r.value) : ordered_json(nullptr);
  j["lower_bound"] = int_to_json(r.lower_bound);
  j["exactness"] = r.exactness == Exactness::Exact ? "exact" : "lower-bound-only";
  j["simple_equals_plain"] = r.simple_equals_plain;
  return j;
}

ordered_json genus_bound_json(const GenusBound& g) {
  ordered_json j;
  j["bound"] = int_to_json(g.bound);
  j["scope"] = g.scope == GenusBoundScope::AllSurfaces ? "all-surfaces" : "simple-surfaces";
  return j;
}

ordered_json analysis_json(const QueryAnalysis& a, const IntLaurent& alexander,
                           const Int& determinant) {
  ordered_json j;
  j["alexander"] = to_string(alexander);
  j["determinant"] = int_to_json(determinant);
  j["arf"] = a.arf;
  j["d"] = a.d;
  j["self_intersection"] = int_to_json(a.x_dot_x);
  j["characteristic"] = a.characteristic;
  if (a.arf_congruence_sum.has_value())
    j["arf_congruence_sum"] = int_to_json(*a.arf_congruence_sum);
  j["signature"] = a.form_signature;
  j["b2"] = int_to_json(a.b2);
  j["ks"] = a.ks;
  j["h1_order"] = int_to_json(a.h1_order);
  ordered_json lt = ordered_json::array();
  for (const auto& v : a.lt_table) lt.push_back(v.has_value() ? ordered_json(*v) : nullptr);
  j["levine_tristram"] = std::move(lt);
  j["sigma_j"] = optional_int_table(a.sigma_j_table);
  j["max_signature_bound"] = int_to_json(a.max_abs_sigma_j);
  return j;
}

ordered_json query_report(const std::string& command, const QueryEcho& echo,
                          const SliceQuery& query, const QueryAnalysis& analysis,
                          ordered_json result) {
  ordered_json j;
  j["engine"] = engine_stamp();
  j["command"] = command;
  ordered_json q;
  q["manifold"] = echo.manifold;
  q["class"] = echo.class_spec;
  q["knot"] = echo.knot;
  j["query"] = std::move(q);
  j["invariants"] =
      analysis_json(analysis, alexander_polynomial(query.knot), knot_determinant(query.knot));
  j["result"] = std::move(result);
  j["precision_bits_used"] = analysis.bits_used;
  return j;
}

ordered_json invariants_report(const std::string& knot_echo, const SeifertMatrix& v, long d,
                               unsigned max_bits) {
  if (d < 1) throw Error("cover degree must be >= 1");
  if (d > kMaxCoverDegree)
    throw Error("cover degree exceeds the supported bound " + std::to_string(kMaxCoverDegree));
  ordered_json j;
  j["engine"] = engine_stamp();
  j["command"] = "invariants";
  ordered_json q;
  q["knot"] = knot_echo;
  q["d"] = d;
  j["query"] = std::move(q);

  const IntLaurent delta = alexander_polynomial(v);
  unsigned bits_used = 0;
  ordered_json lt = ordered_json::array();
  for (long k = 0; k < d; ++k) {
    if (k == 0) {
      lt.push_back(0);
    } else if (alexander_vanishes_at(delta, RootOfUnityAngle(k, d))) {
      lt.push_back(nullptr);
    } else {
      const CertifiedSignature cs =
          hermitian_signature_at_unit_root(v.entries(), k, d, max_bits);
      lt.push_back(cs.value);
      bits_used = std::max(bits_used, cs.bits_used);
    }
  }
  ordered_json inv;
  inv["alexander"] = to_string(delta);
  inv["determinant"] = int_to_json(knot_determinant(v));
  inv["arf"] = arf_invariant(v);
  inv["d"] = d;
  inv["h1_order"] = int_to_json(branched_cover_homology_order(v, d));
  inv["levine_tristram"] = std::move(lt);
  j["invariants"] = std::move(inv);
  j["precision_bits_used"] = bits_used;
  return j;
}

std::string render_table(const ordered_json& report) {
  std::ostringstream out;
  out << report["engine"]["name"].get<std::string>() << " "
      << report["engine"]["version"].get<std::string>()
      << "  command: " << report["command"].get<std::string>() << "\n";

  if (report.contains("query")) {
    out << "query:\n";
    for (const auto& [key, value] : report["query"].items())
      out << "  " << key << ": " << scalar_to_text(value) << "\n";
  }

  if (report.contains("invariants")) {
    const auto& inv = report["invariants"];
    out << "invariants:\n";
    for (const auto& [key, value] : inv.items()) {
      if (key == "levine_tristram" || key == "sigma_j") continue;
      out << "  " << key << ": " << scalar_to_text(value) << "\n";
    }
    if (inv.contains("levine_tristram")) {
      const bool with_sigma_j = inv.contains("sigma_j");
      out << (with_sigma_j ? "  j | sigma_K | sigma_j\n" : "  j | sigma_K\n");
      const auto& lt = inv["levine_tristram"];
      for (std::size_t k = 0; k < lt.size(); ++k) {
        out << "  " << k << " | " << cell_to_text(lt[k]);
        if (with_sigma_j) out << " | " << cell_to_text(inv["sigma_j"][k]);
        out << "\n";
      }
    }
  }

  if (report.contains("result")) {
    const auto& res = report["result"];
    out << "result:\n";
    for (const auto& [key, value] : res.items()) {
      if (key == "conditions") continue;
      out << "  " << key << ": " << scalar_to_text(value) << "\n";
    }
    if (res.contains("conditions")) {
      for (const auto& c : res["conditions"]) {
        out << "  [" << (c["passed"].get<bool>() ? "pass" : "fail") << "] "
            << c["id"].get<std::string>() << ": required " << scalar_to_text(c["required"])
            << "; actual " << scalar_to_text(c["actual"])
            << "; margin " << scalar_to_text(c["margin"])
            << (c["necessary"].get<bool>() ? "; necessary" : "") << "\n";
      }
    }
  }

  out << "precision_bits_used: " << report["precision_bits_used"].dump() << "\n";
  return out.str();
}

}  // namespace knotslice
