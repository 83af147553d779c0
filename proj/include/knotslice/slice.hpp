#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotslice/certified_signature.hpp"
#include "knotslice/form.hpp"
#include "knotslice/numeric.hpp"
#include "knotslice/seifert.hpp"

namespace knotslice {

// Divisibilities above this are rejected: the j-indexed signature tables and
// the branched-cover order are exact per-j computations, linear in d.
inline constexpr long kMaxCoverDegree = 2000;

enum class Verdict { Yes, No, Inconclusive };
const char* to_string(Verdict v);

/// One checked condition inside a verdict. `necessary` marks conditions
/// whose failure alone forces a No (as opposed to hypotheses that merely
/// block a Yes).
struct ConditionRecord {
  std::string id;
  std::string required;
  std::string actual;
  Int margin;  // >= 0 iff passed; slack for numeric conditions
  bool passed = false;
  bool necessary = false;
};

struct SliceVerdict {
  Verdict answer = Verdict::Inconclusive;
  std::vector<ConditionRecord> reasons;
};

enum class Exactness { Exact, LowerBoundOnly };

struct StabilizingResult {
  bool finite = false;
  std::optional<Int> value;  // present iff finite and exactly computable
  Int lower_bound = 0;
  Exactness exactness = Exactness::LowerBoundOnly;
  // When the divisibility is a prime power, the plain and simple stabilizing
  // numbers agree; otherwise only the simple one is computed exactly.
  bool simple_equals_plain = false;
};

enum class GenusBoundScope { SimpleSurfaces, AllSurfaces };

struct GenusBound {
  Int bound = 0;
  GenusBoundScope scope = GenusBoundScope::SimpleSurfaces;
};

struct EngineOptions {
  unsigned max_bits = kDefaultMaxBits;
};

/// The data of one sliceness question: a 4-manifold form, a nonzero relative
/// homology class in its basis, and the knot.
struct SliceQuery {
  IntersectionForm form;
  HomologyClass x;
  SeifertMatrix knot;

  SliceQuery(IntersectionForm form_, HomologyClass x_, SeifertMatrix knot_);
};

/// Everything the decision rules consume, computed once: per-j signature
/// tables (j = 0..d-1 with d the divisibility of x), the branched-cover
/// homology order, and the characteristic-case congruence.
struct QueryAnalysis {
  long d = 1;
  Int x_dot_x;
  bool characteristic = false;
  int form_signature = 0;
  Int b2;
  int ks = 0;
  int arf = 0;
  Int h1_order;                              // 0 encodes infinite homology
  std::vector<std::optional<int>> lt_table;  // sigma_K at exp(2 pi i j / d); nullopt = singular
  std::vector<std::optional<Int>> sigma_j_table;
  Int max_abs_sigma_j;  // over the computable j
  bool has_singular = false;
  std::optional<Int> arf_congruence_sum;  // Arf + ks + (sigma - x.x)/8, characteristic only
  unsigned bits_used = 0;
};

QueryAnalysis analyze(const SliceQuery& q, const EngineOptions& opts = {});

/// Signature of the d-fold branched cover restricted to the j-th eigenspace:
/// sigma(N) - (2j(d-j)/d^2) x.x + sigma_K(exp(2 pi i j / d)). d is always the
/// divisibility of x, which makes the middle term an exact integer.
Int sigma_j_invariant(const SliceQuery& q, long j, const EngineOptions& opts = {});

/// max over j = 0..d-1 of |sigma_j|; throws SingularAtRoot if any j is at a
/// root of the Alexander polynomial.
Int max_signature_bound(const SliceQuery& q, const EngineOptions& opts = {});

/// The characteristic-case congruence Arf(K) + ks(N) + (sigma(N) - x.x)/8 = 0
/// mod 2. Throws NotCharacteristic for ordinary x and NotDivisibleBy8 when
/// sigma - x.x is not a multiple of 8 (inconsistent inputs).
bool arf_condition(const SliceQuery& q);

/// Stable sliceness: Yes iff x is ordinary, or characteristic with the
/// congruence satisfied. Unconditional, never Inconclusive.
SliceVerdict decide_stably_slice(const QueryAnalysis& a);
SliceVerdict decide_stably_slice(const SliceQuery& q, const EngineOptions& opts = {});

/// Simple-disc verdict. No when a necessary condition fails (the congruence
/// for characteristic x, or b2 < max |sigma_j| over the computable j); Yes
/// when both conditions hold and the branched cover has trivial H_1;
/// Inconclusive when the conditions hold but the H_1 hypothesis fails.
SliceVerdict decide_simple_slice(const QueryAnalysis& a);
SliceVerdict decide_simple_slice(const SliceQuery& q, const EngineOptions& opts = {});

/// Genus-g stable representability: Yes for every g >= 1; g = 0 is stable
/// sliceness.
SliceVerdict stable_genus_representable(const QueryAnalysis& a, long genus);
SliceVerdict stable_genus_representable(const SliceQuery& q, long genus,
                                        const EngineOptions& opts = {});

/// Minimal number of S^2 x S^2 stabilizations after which a simple disc in
/// the class exists: max(0, ceil((max_j |sigma_j| - b2)/2)), exact when the
/// branched-cover homology is trivial, otherwise a lower bound.
StabilizingResult stabilizing_number(const QueryAnalysis& a);
StabilizingResult stabilizing_number(const SliceQuery& q, const EngineOptions& opts = {});

/// Lower bound for the genus of a simple surface in the class; valid for all
/// surfaces when d is a prime power.
GenusBound genus_lower_bound(const QueryAnalysis& a);
GenusBound genus_lower_bound(const SliceQuery& q, const EngineOptions& opts = {});

}  // namespace knotslice
