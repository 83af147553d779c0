#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotslice/numeric.hpp"

namespace knotslice {

/// Intersection form of a compact, oriented, simply-connected 4-manifold
/// with boundary S^3: a symmetric unimodular integer matrix plus the
/// Kirby-Siebenmann bit. The S^3 boundary identifies H_2(N) with
/// H_2(N, boundary), so one vector type serves both.
class IntersectionForm {
 public:
  IntersectionForm() : q_(0, 0), ks_(0) {}
  IntersectionForm(IntMatrix q, int ks);

  Eigen::Index rank() const { return q_.rows(); }  // b_2
  const IntMatrix& matrix() const { return q_; }
  int ks() const { return ks_; }

  /// Exact signature by rational congruence diagonalization.
  int signature() const;

  /// All diagonal entries even (the spin/even condition on the form).
  bool is_even() const;

  friend bool operator==(const IntersectionForm& a, const IntersectionForm& b) {
    return a.ks_ == b.ks_ && a.q_.rows() == b.q_.rows() && a.q_ == b.q_;
  }

 private:
  IntMatrix q_;
  int ks_;
};

using HomologyClass = IntVector;

/// x is characteristic iff x.a = a.a mod 2 for every a; by bilinearity the
/// basis vectors suffice: (Qx)_i = Q_ii mod 2 for all i.
bool is_characteristic(const IntersectionForm& form, const HomologyClass& x);

/// gcd of the coordinates; 0 iff x = 0. This is the divisibility of x in
/// the free group H_2(N, boundary).
Int divisibility(const HomologyClass& x);

/// x^T Q x.
Int self_intersection(const IntersectionForm& form, const HomologyClass& x);

/// Block sum of the forms; Kirby-Siebenmann bits add mod 2.
IntersectionForm connected_sum(const IntersectionForm& a, const IntersectionForm& b);

/// Sum with k hyperbolic blocks (k copies of S^2 x S^2); ks unchanged.
IntersectionForm stabilized(const IntersectionForm& a, long k);

/// The class x ++ 0 in the k-fold stabilization.
HomologyClass stabilized_class(const HomologyClass& x, long k);

/// A primitive ordinary class when one exists: e_1 for an even form of
/// positive rank (primitive classes of even forms are always ordinary);
/// otherwise the first ordinary one of e_1, e_2, e_1 + e_2 when the rank is
/// at least 2 (at least one of the three always is). Empty for rank <= 1
/// odd forms and the empty form.
std::optional<HomologyClass> find_primitive_ordinary_class(const IntersectionForm& form);

namespace presets {

IntersectionForm cp2();          // [1], ks 0
IntersectionForm cp2_bar();      // [-1], ks 0
IntersectionForm s2xs2();        // hyperbolic, ks 0
IntersectionForm k3();           // 2 E8(-1) + 3 hyperbolic, ks 0
IntersectionForm e8_manifold();  // E8, ks 1

const std::vector<std::string>& names();
std::optional<IntersectionForm> by_name(const std::string& name);

}  // namespace presets

}  // namespace knotslice
