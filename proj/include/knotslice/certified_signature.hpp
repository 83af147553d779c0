#pragma once

#include "knotslice/numeric.hpp"

namespace knotslice {

struct CertifiedSignature {
  int value = 0;
  unsigned bits_used = 0;
};

inline constexpr unsigned kDefaultMaxBits = 4096;

/// Signature of the Hermitian matrix (1-w)V + (1-conj(w))V^T at
/// w = exp(2*pi*i*j/d), 0 < j < d.
///
/// The Hermitian matrix is realified to a symmetric matrix of twice the
/// size (eigenvalues doubled in multiplicity), an approximate eigenbasis is
/// computed by Jacobi sweeps, and the basis is applied to the *interval*
/// enclosure of the matrix as a congruence. When every Gershgorin disc of
/// the rotated interval matrix has a definite sign, the inertia is certified
/// (congruence preserves it). Precision doubles from 64 bits up to max_bits.
///
/// The caller must rule out det = 0 beforehand (exact vanishing test of the
/// Alexander polynomial at w); a singular matrix makes every precision fail,
/// ending in PrecisionExceeded.
CertifiedSignature hermitian_signature_at_unit_root(const IntMatrix& v, long j, long d,
                                                    unsigned max_bits = kDefaultMaxBits);

}  // namespace knotslice
