#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotslice/io.hpp"
#include "knotslice/report.hpp"
#include "knotslice/slice.hpp"

namespace knotslice::cli {

/// Resolve a knot argument: inline JSON matrix (starts with '['), or a name
/// looked up in the loaded table.
SeifertMatrix resolve_knot(const std::string& spec, const std::vector<KnotRecord>& table);

/// Batch sweep: every valid knot crossed with every class, knots outermost,
/// in input order. Invalid knot records yield a single error line; per-pair
/// failures yield an error line and the stream continues. Pairs are
/// evaluated by a bounded worker pool; the output order never depends on
/// scheduling.
std::vector<std::string> run_batch(const std::vector<KnotRecord>& knots,
                                   const IntersectionForm& manifold,
                                   const std::vector<std::string>& class_specs,
                                   unsigned max_bits, unsigned jobs, bool as_table);

/// Full command-line entry point. Exit codes: for the decide commands,
/// 0 = yes, 1 = no, 2 = inconclusive; 0 = success elsewhere; 3 = engine
/// error; anything above comes from argument parsing.
int run(int argc, const char* const* argv);

}  // namespace knotslice::cli
