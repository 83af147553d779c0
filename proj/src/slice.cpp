#include "knotslice/slice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "knotslice/errors.hpp"

namespace knotslice {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

SliceQuery::SliceQuery(IntersectionForm form_, HomologyClass x_, SeifertMatrix knot_)
    : form(std::move(form_)), x(std::move(x_)), knot(std::move(knot_)) {
  if (x.size() != form.rank())
    throw DimensionMismatch("class length does not match the form rank");
  if (divisibility(x) == 0) throw Error("the class x must be nonzero");
}

namespace {

std::string to_str(const Int& v) { return v.str(); }

// ceil(a/2) clamped at 0.
Int half_up_clamped(const Int& a) {
  if (a <= 0) return 0;
  return (a + 1) / 2;
}

Int eigenspace_signature_term(const Int& x_dot_x, long j, long d) {
  // (2j(d-j)/d^2) x.x; exact because d^2 | x.x when d = divisibility(x).
  const Int d2 = Int(d) * Int(d);
  Int q, r;
  boost::multiprecision::divide_qr(x_dot_x, d2, q, r);
  if (r != 0) throw Error("internal: x.x not divisible by d^2");
  return Int(2) * j * (d - j) * q;
}

Int congruence_sum(int arf, int ks, int form_signature, const Int& x_dot_x) {
  const Int diff = Int(form_signature) - x_dot_x;
  Int q, r;
  boost::multiprecision::divide_qr(diff, Int(8), q, r);
  if (r != 0)
    throw NotDivisibleBy8("sigma(N) - x.x = " + to_str(diff) +
                          " is not divisible by 8; inputs are inconsistent");
  return Int(arf) + ks + q;
}

long divisibility_as_degree(const HomologyClass& x) {
  const Int d = divisibility(x);
  if (d > kMaxCoverDegree)
    throw Error("divisibility " + to_str(d) + " exceeds the supported cover degree " +
                std::to_string(kMaxCoverDegree));
  return static_cast<long>(d);
}

ConditionRecord arf_record(const Int& sum) {
  ConditionRecord r;
  r.id = "arf_congruence";
  r.required = "Arf(K) + ks(N) + (sigma(N) - x.x)/8 = 0 mod 2";
  r.actual = to_str(sum);
  r.passed = is_even(sum);
  r.margin = r.passed ? 0 : -1;
  r.necessary = true;
  return r;
}

ConditionRecord ordinary_record() {
  ConditionRecord r;
  r.id = "class_type";
  r.required = "none (x ordinary, no congruence constraint)";
  r.actual = "ordinary";
  r.passed = true;
  r.margin = 0;
  r.necessary = false;
  return r;
}

ConditionRecord signature_record(const QueryAnalysis& a) {
  ConditionRecord r;
  r.id = "signature_bound";
  r.required = "b2(N) = " + to_str(a.b2) + " >= max_j |sigma_j|";
  std::ostringstream actual;
  actual << "max = " << a.max_abs_sigma_j;
  if (a.has_singular) actual << " over the computable j (some j singular)";
  r.actual = actual.str();
  r.margin = a.b2 - a.max_abs_sigma_j;
  r.passed = r.margin >= 0;
  r.necessary = true;
  return r;
}

ConditionRecord h1_record(const QueryAnalysis& a) {
  ConditionRecord r;
  r.id = "branched_cover_homology";
  r.required = "H_1(Sigma_d(K)) = 0 (order 1)";
  r.actual = a.h1_order == 0 ? std::string("infinite") : "order " + to_str(a.h1_order);
  r.passed = a.h1_order == 1;
  r.margin = r.passed ? 0 : -1;
  r.necessary = false;  // hypothesis of the iff, not an obstruction
  return r;
}

}  // namespace

QueryAnalysis analyze(const SliceQuery& q, const EngineOptions& opts) {
  QueryAnalysis a;
  a.d = divisibility_as_degree(q.x);
  a.x_dot_x = self_intersection(q.form, q.x);
  a.characteristic = is_characteristic(q.form, q.x);
  a.form_signature = q.form.signature();
  a.b2 = Int(q.form.rank());
  a.ks = q.form.ks();

  const IntLaurent delta = alexander_polynomial(q.knot);
  const Int at_minus_one = delta.eval_at_minus_one();
  if (is_even(at_minus_one))
    throw InvalidSeifertMatrix("delta(-1) is even; not a knot Seifert matrix");
  const Int residue = ((at_minus_one % 8) + 8) % 8;
  a.arf = (residue == 1 || residue == 7) ? 0 : 1;

  a.h1_order = branched_cover_homology_order(q.knot, a.d);

  a.lt_table.resize(static_cast<std::size_t>(a.d));
  a.sigma_j_table.resize(static_cast<std::size_t>(a.d));
  a.max_abs_sigma_j = 0;
  for (long j = 0; j < a.d; ++j) {
    std::optional<int> lt;
    if (j == 0) {
      lt = 0;
    } else if (!alexander_vanishes_at(delta, RootOfUnityAngle(j, a.d))) {
      const CertifiedSignature cs =
          hermitian_signature_at_unit_root(q.knot.entries(), j, a.d, opts.max_bits);
      lt = cs.value;
      a.bits_used = std::max(a.bits_used, cs.bits_used);
    }
    a.lt_table[static_cast<std::size_t>(j)] = lt;
    if (!lt.has_value()) {
      a.has_singular = true;
      continue;
    }
    const Int value =
        Int(a.form_signature) - eigenspace_signature_term(a.x_dot_x, j, a.d) + *lt;
    a.sigma_j_table[static_cast<std::size_t>(j)] = value;
    a.max_abs_sigma_j = std::max(a.max_abs_sigma_j, abs(value));
  }

  if (a.characteristic)
    a.arf_congruence_sum = congruence_sum(a.arf, a.ks, a.form_signature, a.x_dot_x);
  return a;
}

Int sigma_j_invariant(const SliceQuery& q, long j, const EngineOptions& opts) {
  const long d = divisibility_as_degree(q.x);
  if (j < 0 || j >= d) throw Error("sigma_j index must satisfy 0 <= j < d");
  const int lt = levine_tristram_signature(q.knot, RootOfUnityAngle(j, d), opts.max_bits);
  return Int(q.form.signature()) -
         eigenspace_signature_term(self_intersection(q.form, q.x), j, d) + lt;
}

Int max_signature_bound(const SliceQuery& q, const EngineOptions& opts) {
  const QueryAnalysis a = analyze(q, opts);
  if (a.has_singular)
    throw SingularAtRoot("some sigma_j lies at a root of the Alexander polynomial");
  return a.max_abs_sigma_j;
}

bool arf_condition(const SliceQuery& q) {
  if (!is_characteristic(q.form, q.x))
    throw NotCharacteristic("the congruence applies to characteristic classes only");
  return is_even(congruence_sum(arf_invariant(q.knot), q.form.ks(), q.form.signature(),
                                self_intersection(q.form, q.x)));
}

SliceVerdict decide_stably_slice(const QueryAnalysis& a) {
  SliceVerdict v;
  if (!a.characteristic) {
    v.reasons.push_back(ordinary_record());
    v.answer = Verdict::Yes;
    return v;
  }
  const ConditionRecord arf = arf_record(*a.arf_congruence_sum);
  v.answer = arf.passed ? Verdict::Yes : Verdict::No;
  v.reasons.push_back(arf);
  return v;
}

SliceVerdict decide_stably_slice(const SliceQuery& q, const EngineOptions& opts) {
  return decide_stably_slice(analyze(q, opts));
}

SliceVerdict decide_simple_slice(const QueryAnalysis& a) {
  SliceVerdict v;
  bool necessary_failed = false;
  if (a.characteristic) {
    const ConditionRecord arf = arf_record(*a.arf_congruence_sum);
    necessary_failed |= !arf.passed;
    v.reasons.push_back(arf);
  } else {
    v.reasons.push_back(ordinary_record());
  }
  const ConditionRecord sig = signature_record(a);
  necessary_failed |= !sig.passed;
  v.reasons.push_back(sig);
  const ConditionRecord h1 = h1_record(a);
  v.reasons.push_back(h1);

  if (necessary_failed)
    v.answer = Verdict::No;
  else if (h1.passed)  // order 1 also rules out singular j
    v.answer = Verdict::Yes;
  else
    v.answer = Verdict::Inconclusive;
  return v;
}

SliceVerdict decide_simple_slice(const SliceQuery& q, const EngineOptions& opts) {
  return decide_simple_slice(analyze(q, opts));
}

SliceVerdict stable_genus_representable(const QueryAnalysis& a, long genus) {
  if (genus < 0) throw Error("genus must be >= 0");
  if (genus == 0) return decide_stably_slice(a);
  SliceVerdict v;
  ConditionRecord r;
  r.id = "positive_genus";
  r.required = "g >= 1";
  r.actual = "g = " + std::to_string(genus);
  r.passed = true;
  r.margin = Int(genus - 1);
  r.necessary = false;
  v.reasons.push_back(std::move(r));
  v.answer = Verdict::Yes;  // every class is stably representable in positive genus
  return v;
}

SliceVerdict stable_genus_representable(const SliceQuery& q, long genus,
                                        const EngineOptions& opts) {
  if (genus > 0) return stable_genus_representable(QueryAnalysis{}, genus);
  return stable_genus_representable(analyze(q, opts), genus);
}

StabilizingResult stabilizing_number(const QueryAnalysis& a) {
  StabilizingResult r;
  r.simple_equals_plain = is_prime_power(Int(a.d));
  r.lower_bound = half_up_clamped(a.max_abs_sigma_j - a.b2);
  r.finite = decide_stably_slice(a).answer == Verdict::Yes;
  if (r.finite && a.h1_order == 1) {
    r.value = r.lower_bound;
    r.exactness = Exactness::Exact;
  } else {
    r.exactness = Exactness::LowerBoundOnly;
  }
  return r;
}

StabilizingResult stabilizing_number(const SliceQuery& q, const EngineOptions& opts) {
  return stabilizing_number(analyze(q, opts));
}

GenusBound genus_lower_bound(const QueryAnalysis& a) {
  GenusBound g;
  g.bound = half_up_clamped(a.max_abs_sigma_j - a.b2);
  g.scope = is_prime_power(Int(a.d)) ? GenusBoundScope::AllSurfaces
                                     : GenusBoundScope::SimpleSurfaces;
  return g;
}

GenusBound genus_lower_bound(const SliceQuery& q, const EngineOptions& opts) {
  return genus_lower_bound(analyze(q, opts));
}

}  // namespace knotslice
