#include "knotslice/certified_signature.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "knotslice/errors.hpp"

namespace knotslice {
namespace {

// Minimal RAII mpfr scalar. Everything below works at one fixed precision,
// chosen per refinement round.
class Fp {
 public:
  explicit Fp(mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_zero(x_, 1);
  }
  Fp(const Fp& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  Fp(Fp&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
  }
  Fp& operator=(const Fp& o) {
    if (this != &o) mpfr_set(x_, o.x_, MPFR_RNDN);
    return *this;
  }
  Fp& operator=(Fp&& o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
  }
  ~Fp() { mpfr_clear(x_); }

  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }

 private:
  mpfr_t x_;
};

// Closed interval [lo, hi] with outward rounding.
struct Iv {
  Fp lo, hi;
  explicit Iv(mpfr_prec_t prec) : lo(prec), hi(prec) {}
};

Iv iv_from_int(const Int& v, mpfr_prec_t prec) {
  Iv r(prec);
  mpfr_set_z(r.lo.get(), v.backend().data(), MPFR_RNDD);
  mpfr_set_z(r.hi.get(), v.backend().data(), MPFR_RNDU);
  return r;
}

Iv iv_add(const Iv& a, const Iv& b, mpfr_prec_t prec) {
  Iv r(prec);
  mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
  return r;
}

Iv iv_sub(const Iv& a, const Iv& b, mpfr_prec_t prec) {
  Iv r(prec);
  mpfr_sub(r.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
  mpfr_sub(r.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
  return r;
}

Iv iv_neg(const Iv& a, mpfr_prec_t prec) {
  Iv r(prec);
  mpfr_neg(r.lo.get(), a.hi.get(), MPFR_RNDD);
  mpfr_neg(r.hi.get(), a.lo.get(), MPFR_RNDU);
  return r;
}

Iv iv_mul(const Iv& a, const Iv& b, mpfr_prec_t prec) {
  Iv r(prec);
  Fp c(prec);
  bool first = true;
  auto consider = [&](mpfr_srcptr u, mpfr_srcptr v) {
    mpfr_mul(c.get(), u, v, MPFR_RNDD);
    if (first || mpfr_cmp(c.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), c.get(), MPFR_RNDD);
    mpfr_mul(c.get(), u, v, MPFR_RNDU);
    if (first || mpfr_cmp(c.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), c.get(), MPFR_RNDU);
    first = false;
  };
  consider(a.lo.get(), b.lo.get());
  consider(a.lo.get(), b.hi.get());
  consider(a.hi.get(), b.lo.get());
  consider(a.hi.get(), b.hi.get());
  return r;
}

// mul by an exact point value.
Iv iv_mul_point(const Iv& a, mpfr_srcptr p, mpfr_prec_t prec) {
  Iv r(prec);
  if (mpfr_sgn(p) >= 0) {
    mpfr_mul(r.lo.get(), a.lo.get(), p, MPFR_RNDD);
    mpfr_mul(r.hi.get(), a.hi.get(), p, MPFR_RNDU);
  } else {
    mpfr_mul(r.lo.get(), a.hi.get(), p, MPFR_RNDD);
    mpfr_mul(r.hi.get(), a.lo.get(), p, MPFR_RNDU);
  }
  return r;
}

// Upper bound for |x| over the interval.
void iv_mag(Fp& out, const Iv& a) {
  mpfr_abs(out.get(), a.lo.get(), MPFR_RNDU);
  Fp t(mpfr_get_prec(out.get()));
  mpfr_abs(t.get(), a.hi.get(), MPFR_RNDU);
  if (mpfr_cmp(t.get(), out.get()) > 0) mpfr_swap(out.get(), t.get());
}

using IvMatrix = std::vector<std::vector<Iv>>;
using FpMatrix = std::vector<std::vector<Fp>>;

// Interval enclosures of cos/sin of 2*pi*j/d. The angle is in (0, 2*pi), so
// interior extrema of cos/sin can only occur at pi, pi/2 and 3*pi/2; those
// correspond to exactly representable angles (2j = d, 4j = d, 4j = 3d) and
// are returned as exact points. Everything else is monotone across the tiny
// enclosure of the angle once the working precision exceeds ~log2(8d), so
// the endpoint hull is a correct enclosure.
void unit_root_parts(long j, long d, mpfr_prec_t prec, Iv& cos_out, Iv& sin_out) {
  if (2 * j == d) {
    mpfr_set_si(cos_out.lo.get(), -1, MPFR_RNDD);
    mpfr_set_si(cos_out.hi.get(), -1, MPFR_RNDU);
    mpfr_set_zero(sin_out.lo.get(), 1);
    mpfr_set_zero(sin_out.hi.get(), 1);
    return;
  }
  if (4 * j == d || 4 * j == 3 * d) {
    const int s = (4 * j == d) ? 1 : -1;
    mpfr_set_zero(cos_out.lo.get(), 1);
    mpfr_set_zero(cos_out.hi.get(), 1);
    mpfr_set_si(sin_out.lo.get(), s, MPFR_RNDD);
    mpfr_set_si(sin_out.hi.get(), s, MPFR_RNDU);
    return;
  }
  Iv theta(prec);
  mpfr_const_pi(theta.lo.get(), MPFR_RNDD);
  mpfr_mul_si(theta.lo.get(), theta.lo.get(), 2 * j, MPFR_RNDD);
  mpfr_div_si(theta.lo.get(), theta.lo.get(), d, MPFR_RNDD);
  mpfr_const_pi(theta.hi.get(), MPFR_RNDU);
  mpfr_mul_si(theta.hi.get(), theta.hi.get(), 2 * j, MPFR_RNDU);
  mpfr_div_si(theta.hi.get(), theta.hi.get(), d, MPFR_RNDU);

  Fp a(prec), b(prec);
  mpfr_cos(a.get(), theta.lo.get(), MPFR_RNDD);
  mpfr_cos(b.get(), theta.hi.get(), MPFR_RNDD);
  mpfr_min(cos_out.lo.get(), a.get(), b.get(), MPFR_RNDD);
  mpfr_cos(a.get(), theta.lo.get(), MPFR_RNDU);
  mpfr_cos(b.get(), theta.hi.get(), MPFR_RNDU);
  mpfr_max(cos_out.hi.get(), a.get(), b.get(), MPFR_RNDU);

  mpfr_sin(a.get(), theta.lo.get(), MPFR_RNDD);
  mpfr_sin(b.get(), theta.hi.get(), MPFR_RNDD);
  mpfr_min(sin_out.lo.get(), a.get(), b.get(), MPFR_RNDD);
  mpfr_sin(a.get(), theta.lo.get(), MPFR_RNDU);
  mpfr_sin(b.get(), theta.hi.get(), MPFR_RNDU);
  mpfr_max(sin_out.hi.get(), a.get(), b.get(), MPFR_RNDU);
}

// Cyclic Jacobi sweeps on the midpoint matrix; returns the accumulated
// rotation. Only used to produce a congruence that nearly diagonalizes, so
// convergence quality affects certification speed, not correctness.
FpMatrix jacobi_eigenbasis(FpMatrix a, mpfr_prec_t prec) {
  const std::size_t n = a.size();
  FpMatrix u(n, std::vector<Fp>(n, Fp(prec)));
  for (std::size_t i = 0; i < n; ++i) mpfr_set_si(u[i][i].get(), 1, MPFR_RNDN);
  if (n < 2) return u;

  Fp scale(prec);
  for (const auto& row : a)
    for (const auto& e : row) {
      Fp t(prec);
      mpfr_abs(t.get(), e.get(), MPFR_RNDN);
      if (mpfr_cmp(t.get(), scale.get()) > 0) mpfr_swap(scale.get(), t.get());
    }
  if (mpfr_zero_p(scale.get())) return u;
  Fp stop(prec);
  mpfr_mul_2si(stop.get(), scale.get(), -static_cast<long>(prec) + 4, MPFR_RNDN);

  Fp theta(prec), t(prec), c(prec), s(prec), tmp(prec), tmp2(prec);
  for (int sweep = 0; sweep < 64; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        mpfr_abs(tmp.get(), a[p][q].get(), MPFR_RNDN);
        if (mpfr_cmp(tmp.get(), stop.get()) <= 0) continue;
        rotated = true;
        // tan of the annihilating rotation: sign(theta) / (|theta| + sqrt(theta^2+1))
        mpfr_sub(theta.get(), a[q][q].get(), a[p][p].get(), MPFR_RNDN);
        mpfr_div(theta.get(), theta.get(), a[p][q].get(), MPFR_RNDN);
        mpfr_div_2si(theta.get(), theta.get(), 1, MPFR_RNDN);
        mpfr_sqr(tmp.get(), theta.get(), MPFR_RNDN);
        mpfr_add_si(tmp.get(), tmp.get(), 1, MPFR_RNDN);
        mpfr_sqrt(tmp.get(), tmp.get(), MPFR_RNDN);
        mpfr_abs(tmp2.get(), theta.get(), MPFR_RNDN);
        mpfr_add(tmp.get(), tmp.get(), tmp2.get(), MPFR_RNDN);
        mpfr_si_div(t.get(), mpfr_sgn(theta.get()) >= 0 ? 1 : -1, tmp.get(), MPFR_RNDN);
        mpfr_sqr(tmp.get(), t.get(), MPFR_RNDN);
        mpfr_add_si(tmp.get(), tmp.get(), 1, MPFR_RNDN);
        mpfr_sqrt(tmp.get(), tmp.get(), MPFR_RNDN);
        mpfr_si_div(c.get(), 1, tmp.get(), MPFR_RNDN);
        mpfr_mul(s.get(), t.get(), c.get(), MPFR_RNDN);

        auto rotate_pair = [&](Fp& xp, Fp& xq) {
          // (xp, xq) <- (c*xp - s*xq, s*xp + c*xq)
          mpfr_mul(tmp.get(), c.get(), xp.get(), MPFR_RNDN);
          mpfr_mul(tmp2.get(), s.get(), xq.get(), MPFR_RNDN);
          mpfr_sub(tmp.get(), tmp.get(), tmp2.get(), MPFR_RNDN);
          mpfr_mul(tmp2.get(), s.get(), xp.get(), MPFR_RNDN);
          mpfr_swap(xp.get(), tmp.get());
          mpfr_mul(tmp.get(), c.get(), xq.get(), MPFR_RNDN);
          mpfr_add(tmp.get(), tmp.get(), tmp2.get(), MPFR_RNDN);
          mpfr_swap(xq.get(), tmp.get());
        };
        for (std::size_t k = 0; k < n; ++k) rotate_pair(a[k][p], a[k][q]);
        for (std::size_t k = 0; k < n; ++k) rotate_pair(a[p][k], a[q][k]);
        for (std::size_t k = 0; k < n; ++k) rotate_pair(u[k][p], u[k][q]);
      }
    }
    if (!rotated) break;
  }
  return u;
}

}  // namespace

CertifiedSignature hermitian_signature_at_unit_root(const IntMatrix& v, long j, long d,
                                                    unsigned max_bits) {
  if (d < 1 || j <= 0 || j >= d)
    throw Error("hermitian_signature_at_unit_root needs 0 < j < d");
  const std::size_t n = static_cast<std::size_t>(v.rows());
  if (n == 0) return {0, 0};
  const std::size_t m = 2 * n;

  const IntMatrix sym = v + v.transpose();
  const IntMatrix skew = v.transpose() - v;

  unsigned bits = std::min(64u, max_bits);
  for (;;) {
    const auto prec = static_cast<mpfr_prec_t>(bits);
    Iv cos_iv(prec), sin_iv(prec);
    unit_root_parts(j, d, prec, cos_iv, sin_iv);
    Iv one(prec);
    mpfr_set_si(one.lo.get(), 1, MPFR_RNDD);
    mpfr_set_si(one.hi.get(), 1, MPFR_RNDU);
    const Iv one_minus_cos = iv_sub(one, cos_iv, prec);

    // Realification of (1-w)V + (1-conj w)V^T = (1-cos)(V+V^T) + i sin (V^T-V):
    // [[A, -B], [B, A]] is symmetric with doubled spectrum.
    IvMatrix h(m, std::vector<Iv>(m, Iv(prec)));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Iv a = iv_mul(one_minus_cos, iv_from_int(sym(Eigen::Index(r), Eigen::Index(c)), prec), prec);
        Iv b = iv_mul(sin_iv, iv_from_int(skew(Eigen::Index(r), Eigen::Index(c)), prec), prec);
        h[r][c] = a;
        h[n + r][n + c] = std::move(a);
        h[r][n + c] = iv_neg(b, prec);
        h[n + r][c] = std::move(b);
      }
    }

    FpMatrix mid(m, std::vector<Fp>(m, Fp(prec)));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        mpfr_add(mid[r][c].get(), h[r][c].lo.get(), h[r][c].hi.get(), MPFR_RNDN);
        mpfr_div_2si(mid[r][c].get(), mid[r][c].get(), 1, MPFR_RNDN);
      }
    const FpMatrix u = jacobi_eigenbasis(std::move(mid), prec);

    // g = u^T h u in interval arithmetic; a congruence, so inertia carries over.
    IvMatrix hu(m, std::vector<Iv>(m, Iv(prec)));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        Iv acc(prec);
        for (std::size_t k = 0; k < m; ++k)
          acc = iv_add(acc, iv_mul_point(h[r][k], u[k][c].get(), prec), prec);
        hu[r][c] = std::move(acc);
      }
    IvMatrix g(m, std::vector<Iv>(m, Iv(prec)));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        Iv acc(prec);
        for (std::size_t k = 0; k < m; ++k)
          acc = iv_add(acc, iv_mul_point(hu[k][c], u[k][r].get(), prec), prec);
        g[r][c] = std::move(acc);
      }

    // Gershgorin row discs; every disc must have a definite sign.
    int positive = 0, negative = 0;
    bool certified = true;
    Fp radius(prec), mag(prec);
    for (std::size_t r = 0; r < m && certified; ++r) {
      mpfr_set_zero(radius.get(), 1);
      for (std::size_t c = 0; c < m; ++c) {
        if (c == r) continue;
        iv_mag(mag, g[r][c]);
        mpfr_add(radius.get(), radius.get(), mag.get(), MPFR_RNDU);
      }
      Fp lo(prec), hi(prec);
      mpfr_sub(lo.get(), g[r][r].lo.get(), radius.get(), MPFR_RNDD);
      mpfr_add(hi.get(), g[r][r].hi.get(), radius.get(), MPFR_RNDU);
      if (mpfr_sgn(lo.get()) > 0)
        ++positive;
      else if (mpfr_sgn(hi.get()) < 0)
        ++negative;
      else
        certified = false;
    }

    if (certified) {
      const int diff = positive - negative;
      if (diff % 2 != 0)
        throw Error("internal: realified spectrum must have even sign counts");
      return {diff / 2, bits};
    }
    if (bits >= max_bits)
      throw PrecisionExceeded("eigenvalue signs not separable within " +
                              std::to_string(max_bits) + " bits");
    bits = std::min(bits * 2, max_bits);
  }
}

}  // namespace knotslice
