#pragma once

#include <optional>
#include <string>

#include "knotslice/io.hpp"
#include "knotslice/slice.hpp"

namespace knotslice {

/// Verbatim echo of how a query was posed; lands unmodified in the report so
/// identical invocations produce identical bytes.
struct QueryEcho {
  std::string manifold;
  std::string class_spec;
  std::string knot;
};

ordered_json conditions_json(const SliceVerdict& v);
ordered_json verdict_json(const SliceVerdict& v);
ordered_json stabilizing_json(const StabilizingResult& r);
ordered_json genus_bound_json(const GenusBound& g);
ordered_json analysis_json(const QueryAnalysis& a, const IntLaurent& alexander,
                           const Int& determinant);

/// Full single-query report: engine stamp, query echo, every intermediate
/// invariant, the command-specific result, and the precision actually used.
ordered_json query_report(const std::string& command, const QueryEcho& echo,
                          const SliceQuery& query, const QueryAnalysis& analysis,
                          ordered_json result);

/// Report for the invariants command (knot + cover degree, no manifold).
ordered_json invariants_report(const std::string& knot_echo, const SeifertMatrix& v, long d,
                               unsigned max_bits);

/// Plain-text rendering of a report, for --format table.
std::string render_table(const ordered_json& report);

}  // namespace knotslice
