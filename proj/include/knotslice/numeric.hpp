#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace knotslice {

// Exact scalar types. All core arithmetic is arbitrary precision; floating
// point only ever appears inside the certified interval engine and in tests.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline int sign_of(const Int& v) { return v.sign(); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int abs(const Int& v) { return boost::multiprecision::abs(v); }

inline bool is_even(const Int& v) { return (v & 1) == 0; }

/// True iff n = p^k for a prime p and k >= 1; n = 1 gives false.
bool is_prime_power(const Int& n);

}  // namespace knotslice
