#include "knotslice/seifert.hpp"

#include <cassert>
#include <numeric>
#include <utility>
#include <vector>

#include "knotslice/errors.hpp"
#include "knotslice/exact_linalg.hpp"

namespace knotslice {

SeifertMatrix::SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
  if (v_.rows() != v_.cols()) throw InvalidSeifertMatrix("Seifert matrix must be square");
  if (v_.rows() % 2 != 0) throw InvalidSeifertMatrix("Seifert matrix must have even size");
  if (v_.rows() > 0 && determinant(IntMatrix(v_ - v_.transpose())) != 1)
    throw InvalidSeifertMatrix("V - V^T must be unimodular (det 1)");
}

RootOfUnityAngle::RootOfUnityAngle(long j_, long d_) : j(j_), d(d_) {
  if (d < 1) throw Error("root-of-unity denominator must be >= 1");
  if (j < 0 || j >= d) throw Error("root-of-unity numerator must satisfy 0 <= j < d");
}

IntLaurent alexander_polynomial(const SeifertMatrix& v) {
  const Eigen::Index n = v.size();
  if (n == 0) return IntLaurent(Int(1));
  // det(V - t V^T) over Z[t] by fraction-free elimination, then shift by
  // t^(-n/2): the result is automatically symmetric with value 1 at t = 1.
  std::vector<std::vector<IntPolynomial>> a(
      static_cast<std::size_t>(n), std::vector<IntPolynomial>(static_cast<std::size_t>(n)));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          IntPolynomial{v.entries()(i, j), -v.entries()(j, i)};
  IntPolynomial det = fraction_free_determinant<IntPolynomial>(
      std::move(a),
      [](IntPolynomial num, const IntPolynomial& den) { return exact_div(num, den); });
  IntLaurent delta = IntLaurent::from_ordinary(det, -n / 2);
  assert(delta.is_symmetric());
  assert(delta.eval_at_one() == 1);
  return delta;
}

Int knot_determinant(const SeifertMatrix& v) {
  if (v.size() == 0) return 1;
  return abs(determinant(IntMatrix(v.entries() + v.entries().transpose())));
}

int arf_invariant(const SeifertMatrix& v) {
  const Int at_minus_one = alexander_polynomial(v).eval_at_minus_one();
  if (is_even(at_minus_one))
    throw InvalidSeifertMatrix("delta(-1) is even; not a knot Seifert matrix");
  const Int residue = ((at_minus_one % 8) + 8) % 8;
  return (residue == 1 || residue == 7) ? 0 : 1;
}

namespace {

// Euler phi by trial factorization; m is small here.
long euler_phi(long m) {
  long phi = 1;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    long pk = 1;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    phi *= pk - pk / p;
  }
  if (m > 1) phi *= m - 1;
  return phi;
}

}  // namespace

bool alexander_vanishes_at(const IntLaurent& delta, RootOfUnityAngle w) {
  if (delta.is_zero()) throw InvalidSeifertMatrix("zero Alexander polynomial");
  if (w.j == 0) return false;  // delta(1) = 1
  const long m = w.d / std::gcd(w.j, w.d);  // the angle is a primitive m-th root
  auto [ordinary, shift] = delta.to_ordinary();
  (void)shift;
  // The minimal polynomial has degree phi(m); it cannot divide anything shorter.
  if (euler_phi(m) > ordinary.degree()) return false;
  return divides(cyclotomic<Int>(m), ordinary);
}

bool alexander_vanishes_at(const SeifertMatrix& v, RootOfUnityAngle w) {
  return alexander_vanishes_at(alexander_polynomial(v), w);
}

CertifiedSignature levine_tristram_signature_certified(const SeifertMatrix& v, RootOfUnityAngle w,
                                                       unsigned max_bits) {
  if (w.j == 0) return {0, 0};
  if (alexander_vanishes_at(v, w))
    throw SingularAtRoot("Levine-Tristram signature requested at a root of the Alexander "
                         "polynomial (j=" +
                         std::to_string(w.j) + ", d=" + std::to_string(w.d) + ")");
  return hermitian_signature_at_unit_root(v.entries(), w.j, w.d, max_bits);
}

int levine_tristram_signature(const SeifertMatrix& v, RootOfUnityAngle w, unsigned max_bits) {
  return levine_tristram_signature_certified(v, w, max_bits).value;
}

Int branched_cover_homology_order(const SeifertMatrix& v, long d) {
  if (d < 1) throw Error("branched cover degree must be >= 1");
  if (d == 1) return 1;
  auto [ordinary, shift] = alexander_polynomial(v).to_ordinary();
  (void)shift;
  // The monomial shift only contributes a unit at roots of unity.
  return abs(resultant(ordinary, all_ones_polynomial<Int>(d)));
}

}  // namespace knotslice
