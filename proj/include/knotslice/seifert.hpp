#pragma once

#include "knotslice/certified_signature.hpp"
#include "knotslice/numeric.hpp"
#include "knotslice/polynomial.hpp"

namespace knotslice {

/// Seifert matrix of a knot: square integer V with det(V - V^T) = 1 (so the
/// size is even; 0x0 is the unknot). All knot invariants derive from it.
class SeifertMatrix {
 public:
  SeifertMatrix() : v_(0, 0) {}
  explicit SeifertMatrix(IntMatrix v);

  static SeifertMatrix unknot() { return SeifertMatrix(); }

  Eigen::Index size() const { return v_.rows(); }
  const IntMatrix& entries() const { return v_; }

  /// Mirror image: -V^T. Signatures negate, Arf and determinant survive.
  SeifertMatrix mirrored() const { return SeifertMatrix(IntMatrix(-v_.transpose())); }

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) {
    return a.v_.rows() == b.v_.rows() && a.v_ == b.v_;
  }

 private:
  IntMatrix v_;
};

/// Evaluation angle exp(2*pi*i*j/d). Stored verbatim, not gcd-reduced: the
/// slice formulas index j over 0..d-1 as given.
struct RootOfUnityAngle {
  long j = 0;
  long d = 1;
  RootOfUnityAngle(long j_, long d_);
};

/// Alexander polynomial det(V - t V^T), normalized by t^(-n/2) so that
/// delta(t) = delta(1/t) and delta(1) = 1.
IntLaurent alexander_polynomial(const SeifertMatrix& v);

/// |det(V + V^T)| = |delta(-1)|.
Int knot_determinant(const SeifertMatrix& v);

/// Arf invariant: 0 iff delta(-1) = +-1 mod 8, else 1. delta(-1) is odd for
/// every knot; an even value means the Seifert matrix was invalid.
int arf_invariant(const SeifertMatrix& v);

/// True iff the Alexander polynomial vanishes at exp(2*pi*i*j/d), decided
/// exactly: the minimal polynomial of the root (a cyclotomic polynomial)
/// either divides the ordinary part of delta or does not.
bool alexander_vanishes_at(const SeifertMatrix& v, RootOfUnityAngle w);
bool alexander_vanishes_at(const IntLaurent& delta, RootOfUnityAngle w);

/// Levine-Tristram signature at exp(2*pi*i*j/d): signature of
/// (1-w)V + (1-conj w)V^T. j = 0 gives 0. Throws SingularAtRoot when the
/// Alexander polynomial vanishes at the angle (value there is
/// convention-dependent); otherwise the result is certified.
CertifiedSignature levine_tristram_signature_certified(const SeifertMatrix& v, RootOfUnityAngle w,
                                                       unsigned max_bits = kDefaultMaxBits);
int levine_tristram_signature(const SeifertMatrix& v, RootOfUnityAngle w,
                              unsigned max_bits = kDefaultMaxBits);

/// Order of H_1 of the d-fold cyclic branched cover, computed exactly as
/// |Res(delta_ordinary, 1 + t + ... + t^(d-1))|. Returns 0 when some
/// delta(root of unity) vanishes (infinite homology), 1 when the homology
/// is trivial.
Int branched_cover_homology_order(const SeifertMatrix& v, long d);

}  // namespace knotslice
