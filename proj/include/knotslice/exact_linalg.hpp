#pragma once

#include <utility>
#include <vector>

#include "knotslice/errors.hpp"
#include "knotslice/numeric.hpp"

namespace knotslice {

/// Fraction-free (Bareiss) determinant over an integral domain.
///
/// Works on a row-major grid so the entry type does not need Eigen scalar
/// traits; polynomial entries are the intended use besides plain integers.
/// The divisions are by the previous pivot and are exact by construction,
/// `exact_div(a, b)` must implement that exact division.
template <class Ring, class ExactDiv>
Ring fraction_free_determinant(std::vector<std::vector<Ring>> a, ExactDiv exact_div) {
  const std::size_t n = a.size();
  if (n == 0) return Ring(1);
  for (const auto& row : a)
    if (row.size() != n) throw DimensionMismatch("determinant of a non-square matrix");

  Ring prev_pivot(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == Ring(0)) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == Ring(0)) ++swap_row;
      if (swap_row == n) return Ring(0);
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Ring num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = exact_div(std::move(num), prev_pivot);
      }
      a[i][k] = Ring(0);
    }
    prev_pivot = a[k][k];
  }
  Ring det = a[n - 1][n - 1];
  return negate ? Ring(-det) : det;
}

/// Exact determinant of an integer matrix.
inline Int determinant(const IntMatrix& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(Eigen::Index(i), Eigen::Index(j));
  return fraction_free_determinant<Int>(std::move(a), [](Int num, const Int& den) -> Int {
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw InexactDivision("fraction-free elimination produced a remainder");
    return q;
  });
}

inline bool is_unimodular(const IntMatrix& m) { return abs(determinant(m)) == 1; }

/// Signature of a nonsingular symmetric matrix by congruence diagonalization
/// over the rationals.
///
/// Symmetric pivoting: prefer a nonzero diagonal entry; when the trailing
/// diagonal is entirely zero, fold a nonzero off-diagonal pair onto the
/// diagonal (row/column addition, a rank-2 block step) and pivot on the
/// resulting 2*a_ij. Sylvester's law of inertia makes the sign count exact.
template <class Scalar>
int signature_by_congruence(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> q) {
  const Eigen::Index n = q.rows();
  if (q.cols() != n) throw DimensionMismatch("signature of a non-square matrix");
  int positive = 0, negative = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (q(i, i) != Scalar(0)) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      // Trailing diagonal vanished; a nonsingular block still has some
      // off-diagonal entry to fold in.
      Eigen::Index r = -1, c = -1;
      for (Eigen::Index i = k; i < n && r < 0; ++i)
        for (Eigen::Index j = i + 1; j < n && r < 0; ++j)
          if (q(i, j) != Scalar(0)) {
            r = i;
            c = j;
          }
      if (r < 0) throw InvalidIntersectionForm("singular symmetric matrix has no signature here");
      q.row(r) += q.row(c);
      q.col(r) += q.col(c);
      pivot = r;
    }
    if (pivot != k) {
      q.row(k).swap(q.row(pivot));
      q.col(k).swap(q.col(pivot));
    }
    const Scalar d = q(k, k);
    (d > Scalar(0) ? positive : negative) += 1;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (q(i, k) == Scalar(0)) continue;
      const Scalar f = q(i, k) / d;
      q.row(i) -= f * q.row(k);
      q.col(i) -= f * q.col(k);
    }
  }
  return positive - negative;
}

/// Exact signature of a nonsingular symmetric integer matrix.
inline int signature(const IntMatrix& m) {
  RationalMatrix q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return signature_by_congruence<Rational>(std::move(q));
}

}  // namespace knotslice
