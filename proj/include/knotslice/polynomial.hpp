#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "knotslice/errors.hpp"
#include "knotslice/exact_linalg.hpp"
#include "knotslice/numeric.hpp"

namespace knotslice {

template <class S>
S exact_scalar_div(const S& a, const S& b) {
  S q = a / b;
  if (q * b != a) throw InexactDivision("inexact coefficient division");
  return q;
}

/// Dense univariate polynomial, constant term first. The zero polynomial is
/// the empty coefficient list; otherwise the leading coefficient is nonzero.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Scalar constant) {  // NOLINT: implicit by design, mirrors the ring embedding
    coeffs_.push_back(std::move(constant));
    trim();
  }
  Polynomial(std::initializer_list<Scalar> constant_first) : coeffs_(constant_first) { trim(); }

  static Polynomial from_coefficients(std::vector<Scalar> constant_first) {
    Polynomial p;
    p.coeffs_ = std::move(constant_first);
    p.trim();
    return p;
  }

  static Polynomial monomial(std::size_t degree, Scalar coefficient = Scalar(1)) {
    Polynomial p;
    if (coefficient == Scalar(0)) return p;
    p.coeffs_.assign(degree + 1, Scalar(0));
    p.coeffs_.back() = std::move(coefficient);
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  Scalar coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Scalar(0);
  }
  const Scalar& leading() const {
    if (is_zero()) throw ZeroPolynomial("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
      r.coeffs_[i] = a.coefficient(i) + b.coefficient(i);
    r.trim();
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }
  std::vector<Scalar> coeffs_;
};

/// Long division over the coefficient ring; every intermediate coefficient
/// division must be exact (always the case when divisor | dividend, or when
/// the divisor is monic). Returns {quotient, remainder}.
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& p,
                                                         const Polynomial<Scalar>& d) {
  if (d.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  std::vector<Scalar> rem(p.coefficients());
  const long dd = d.degree();
  long rd = p.degree();
  if (rd < dd) return {Polynomial<Scalar>(), p};
  std::vector<Scalar> quot(static_cast<std::size_t>(rd - dd + 1), Scalar(0));
  while (rd >= dd) {
    Scalar f = exact_scalar_div(rem[static_cast<std::size_t>(rd)], d.leading());
    quot[static_cast<std::size_t>(rd - dd)] = f;
    for (long k = 0; k <= dd; ++k)
      rem[static_cast<std::size_t>(rd - dd + k)] -= f * d.coefficient(static_cast<std::size_t>(k));
    while (rd >= 0 && rem[static_cast<std::size_t>(rd)] == Scalar(0)) --rd;
  }
  rem.resize(static_cast<std::size_t>(rd + 1));
  return {Polynomial<Scalar>::from_coefficients(std::move(quot)),
          Polynomial<Scalar>::from_coefficients(std::move(rem))};
}

template <class Scalar>
Polynomial<Scalar> exact_div(const Polynomial<Scalar>& p, const Polynomial<Scalar>& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) throw InexactDivision("polynomial division left a remainder");
  return q;
}

/// True iff d divides p over the coefficient ring (d nonzero).
template <class Scalar>
bool divides(const Polynomial<Scalar>& d, const Polynomial<Scalar>& p) {
  if (d.is_zero()) throw ZeroPolynomial("divisibility by the zero polynomial");
  if (p.is_zero()) return true;
  try {
    auto [q, r] = divmod(p, d);
    (void)q;
    return r.is_zero();
  } catch (const InexactDivision&) {
    return false;
  }
}

template <class Scalar>
Scalar scalar_pow(Scalar base, long e) {
  Scalar r(1);
  for (; e > 0; --e) r *= base;
  return r;
}

/// Pseudo-remainder: lc(d)^(deg p - deg d + 1) * p reduced mod d. Stays in
/// the coefficient ring, no divisions.
template <class Scalar>
Polynomial<Scalar> pseudo_remainder(const Polynomial<Scalar>& p, const Polynomial<Scalar>& d) {
  if (d.is_zero()) throw ZeroPolynomial("pseudo-remainder by the zero polynomial");
  std::vector<Scalar> rem(p.coefficients());
  const long dd = d.degree();
  long rd = p.degree();
  const Scalar& lead = d.leading();
  long pending = rd >= dd ? rd - dd + 1 : 0;  // total lc multipliers owed
  while (rd >= dd) {
    const Scalar top = rem[static_cast<std::size_t>(rd)];
    for (auto& c : rem) c *= lead;
    --pending;
    for (long k = 0; k <= dd; ++k)
      rem[static_cast<std::size_t>(rd - dd + k)] -= top * d.coefficient(static_cast<std::size_t>(k));
    while (rd >= 0 && rem[static_cast<std::size_t>(rd)] == Scalar(0)) --rd;
  }
  rem.resize(static_cast<std::size_t>(rd + 1));
  if (rd >= 0 && pending > 0) {
    const Scalar f = scalar_pow(lead, pending);
    for (auto& c : rem) c *= f;
  }
  return Polynomial<Scalar>::from_coefficients(std::move(rem));
}

/// Resultant of two nonzero polynomials via a pseudo-remainder sequence.
/// Each step applies the identity
///   Res(A, B) = (-1)^(dA dB) lc(B)^(dA - dR) Res(B, R),   R = A mod B,
/// rewritten for the pseudo-remainder lc(B)^(delta+1) A mod B, and the
/// sequence itself is reduced by the subresultant factors g h^delta purely
/// to keep coefficients small; the rescalings are accumulated exactly and
/// divided out at the end. The sign matches the determinant of the standard
/// Sylvester matrix (pinned in the tests against an independent
/// Sylvester-determinant oracle).
template <class Scalar>
Scalar resultant(Polynomial<Scalar> p, Polynomial<Scalar> q) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomial("resultant of the zero polynomial");
  if (p.degree() == 0) return scalar_pow(p.leading(), q.degree());
  if (q.degree() == 0) return scalar_pow(q.leading(), p.degree());
  bool negative = false;
  if (p.degree() < q.degree()) {
    if ((p.degree() & 1) && (q.degree() & 1)) negative = !negative;
    std::swap(p, q);
  }
  Scalar numerator(1), denominator(1);
  Scalar g(1), h(1);
  for (;;) {
    const long da = p.degree(), db = q.degree(), delta = da - db;
    if ((da & 1) && (db & 1)) negative = !negative;
    Polynomial<Scalar> r = pseudo_remainder(p, q);
    if (r.is_zero()) return Scalar(0);
    // prem scales A by lc(B)^(delta+1), so Res(B, prem) carries an extra
    // lc(B)^((delta+1) db) relative to Res(B, A mod B).
    numerator *= scalar_pow(q.leading(), da - r.degree());
    denominator *= scalar_pow(q.leading(), (delta + 1) * db);
    const Scalar divisor = g * scalar_pow(h, delta);
    std::vector<Scalar> reduced(r.coefficients());
    for (auto& c : reduced) c = exact_scalar_div(c, divisor);
    numerator *= scalar_pow(divisor, db);
    p = std::move(q);
    q = Polynomial<Scalar>::from_coefficients(std::move(reduced));
    if (q.degree() == 0) {
      numerator *= scalar_pow(q.leading(), p.degree());
      break;
    }
    g = p.leading();
    h = (delta == 0) ? h : exact_scalar_div(scalar_pow(g, delta), scalar_pow(h, delta - 1));
  }
  const Scalar res = exact_scalar_div(numerator, denominator);
  return negative ? Scalar(-res) : res;
}

/// 1 + t + ... + t^{d-1} = (t^d - 1)/(t - 1); its roots are the nontrivial
/// d-th roots of unity. d = 1 gives the constant 1.
template <class Scalar = Int>
Polynomial<Scalar> all_ones_polynomial(long d) {
  if (d < 1) throw Error("all_ones_polynomial requires d >= 1");
  return Polynomial<Scalar>::from_coefficients(
      std::vector<Scalar>(static_cast<std::size_t>(d), Scalar(1)));
}

/// The m-th cyclotomic polynomial, by exact division of t^m - 1 by the
/// cyclotomic polynomials of the proper divisors of m.
template <class Scalar = Int>
Polynomial<Scalar> cyclotomic(long m) {
  if (m < 1) throw Error("cyclotomic index must be >= 1");
  std::map<long, Polynomial<Scalar>> phi;
  for (long k = 1; k <= m; ++k) {
    if (m % k != 0) continue;
    auto f = Polynomial<Scalar>::monomial(static_cast<std::size_t>(k)) - Polynomial<Scalar>(Scalar(1));
    for (const auto& [j, phi_j] : phi)
      if (k % j == 0) f = exact_div(f, phi_j);
    phi.emplace(k, std::move(f));
  }
  return phi.at(m);
}

/// Laurent polynomial: finitely many integer exponents, nonzero coefficients
/// only, kept sorted so equality is plain map equality.
template <class Scalar>
class Laurent {
 public:
  Laurent() = default;
  Laurent(Scalar constant) {  // NOLINT: implicit ring embedding
    set(0, std::move(constant));
  }

  static Laurent term(long exponent, Scalar coefficient) {
    Laurent p;
    p.set(exponent, std::move(coefficient));
    return p;
  }

  /// p(t) = t^shift * q(t) for an ordinary polynomial q.
  static Laurent from_ordinary(const Polynomial<Scalar>& q, long shift = 0) {
    Laurent p;
    for (std::size_t k = 0; k < q.coefficients().size(); ++k)
      p.set(static_cast<long>(k) + shift, q.coefficients()[k]);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<long, Scalar>& terms() const { return terms_; }

  Scalar coefficient(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  long min_exponent() const {
    if (is_zero()) throw ZeroPolynomial("zero Laurent polynomial has no support");
    return terms_.begin()->first;
  }
  long max_exponent() const {
    if (is_zero()) throw ZeroPolynomial("zero Laurent polynomial has no support");
    return terms_.rbegin()->first;
  }

  void set(long exponent, Scalar c) {
    if (c == Scalar(0))
      terms_.erase(exponent);
    else
      terms_[exponent] = std::move(c);
  }
  void add_term(long exponent, const Scalar& c) {
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
      if (c != Scalar(0)) terms_.emplace(exponent, c);
      return;
    }
    it->second += c;
    if (it->second == Scalar(0)) terms_.erase(it);
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  /// t |-> 1/t. Alexander polynomials are fixed points of this.
  Laurent reversed() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.set(-e, c);
    return r;
  }

  bool is_symmetric() const { return *this == reversed(); }

  /// Exact value at t = -1 (monomial signs depend only on exponent parity).
  Scalar eval_at_minus_one() const {
    Scalar acc(0);
    for (const auto& [e, c] : terms_) acc += (e % 2 == 0) ? c : -c;
    return acc;
  }

  Scalar eval_at_one() const {
    Scalar acc(0);
    for (const auto& [e, c] : terms_) acc += c;
    return acc;
  }

  /// Factors p(t) = t^shift * q(t) with q ordinary and q(0) != 0 (q = 0 for
  /// the zero polynomial, with shift 0).
  std::pair<Polynomial<Scalar>, long> to_ordinary() const {
    if (is_zero()) return {Polynomial<Scalar>(), 0};
    const long shift = min_exponent();
    std::vector<Scalar> c(static_cast<std::size_t>(max_exponent() - shift + 1), Scalar(0));
    for (const auto& [e, coeff] : terms_) c[static_cast<std::size_t>(e - shift)] = coeff;
    return {Polynomial<Scalar>::from_coefficients(std::move(c)), shift};
  }

 private:
  std::map<long, Scalar> terms_;
};

/// Rendering with ascending exponents: "t^-1 - 1 + t". Deterministic; used by
/// the report writers verbatim.
template <class Scalar>
std::string to_string(const Laurent<Scalar>& p, const char* var = "t") {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Scalar a = c;
    if (first) {
      if (a < Scalar(0)) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < Scalar(0) ? " - " : " + ");
      if (a < Scalar(0)) a = -a;
    }
    first = false;
    const bool unit = (a == Scalar(1));
    if (e == 0) {
      out << a;
    } else {
      if (!unit) out << a << "*";
      out << var;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

template <class Scalar>
std::string to_string(const Polynomial<Scalar>& p, const char* var = "t") {
  return to_string(Laurent<Scalar>::from_ordinary(p), var);
}

using IntPolynomial = Polynomial<Int>;
using IntLaurent = Laurent<Int>;

}  // namespace knotslice
