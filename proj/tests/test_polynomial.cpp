#include <doctest.h>

#include <random>

#include "knotslice/errors.hpp"
#include "knotslice/polynomial.hpp"
#include "oracles.hpp"

using namespace knotslice;

namespace {

IntLaurent laurent(std::initializer_list<std::pair<long, int>> terms) {
  IntLaurent p;
  for (const auto& [e, c] : terms) p.add_term(e, Int(c));
  return p;
}

IntPolynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coeff(-5, 5);
  const int d = deg(rng);
  std::vector<Int> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = coeff(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial::from_coefficients(std::move(c));
}

}  // namespace

TEST_CASE("laurent ring operations") {
  const IntLaurent t = IntLaurent::term(1, 1);
  const IntLaurent t_inv = IntLaurent::term(-1, 1);
  const IntLaurent one(Int(1));

  CHECK((t - one) * (t_inv - one) == laurent({{1, -1}, {-1, -1}, {0, 2}}));
  CHECK((t - one) * IntLaurent() == IntLaurent());
  CHECK(laurent({{0, 1}, {1, -1}, {2, 1}}) * (one + t) == laurent({{0, 1}, {3, 1}}));

  CHECK(-(t - one) == laurent({{1, -1}, {0, 1}}));
  CHECK(t + t_inv - t == t_inv);
}

TEST_CASE("laurent to_ordinary and back") {
  const IntLaurent p = laurent({{-1, 1}, {0, -1}, {1, 1}});
  const auto [q, shift] = p.to_ordinary();
  CHECK(q == IntPolynomial{1, -1, 1});
  CHECK(shift == -1);
  CHECK(q.coefficient(0) != 0);

  const auto [zq, zs] = IntLaurent().to_ordinary();
  CHECK(zq.is_zero());
  CHECK(zs == 0);

  const auto [mq, ms] = IntLaurent::term(3, 1).to_ordinary();
  CHECK(mq == IntPolynomial{1});
  CHECK(ms == 3);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    IntLaurent r;
    std::uniform_int_distribution<long> expo(-6, 6);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int k = 0; k < 5; ++k) r.add_term(expo(rng), coeff(rng));
    const auto [ord, s] = r.to_ordinary();
    CHECK(IntLaurent::from_ordinary(ord, s) == r);
  }
}

TEST_CASE("evaluation at -1") {
  CHECK(laurent({{-1, 1}, {0, -1}, {1, 1}}).eval_at_minus_one() == -3);
  CHECK(IntLaurent(Int(1)).eval_at_minus_one() == 1);
  CHECK(laurent({{-2, 1}, {-1, -3}, {0, 5}, {1, -3}, {2, 1}}).eval_at_minus_one() == 13);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    IntLaurent a, b;
    std::uniform_int_distribution<long> expo(-5, 5);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int k = 0; k < 4; ++k) {
      a.add_term(expo(rng), coeff(rng));
      b.add_term(expo(rng), coeff(rng));
    }
    CHECK((a * b).eval_at_minus_one() == a.eval_at_minus_one() * b.eval_at_minus_one());
  }
}

TEST_CASE("resultant: pinned values and sign convention") {
  CHECK(resultant(IntPolynomial{1, -1, 1}, IntPolynomial{1, 1}) == 3);
  CHECK(resultant(IntPolynomial{3, 0, 1, 2}, IntPolynomial{1}) == 1);
  CHECK(resultant(IntPolynomial{-2, 1}, IntPolynomial{-3, 1}) == -1);
  CHECK_THROWS_AS(resultant(IntPolynomial(), IntPolynomial{1, 1}), ZeroPolynomial);
  CHECK_THROWS_AS(resultant(IntPolynomial{1, 1}, IntPolynomial()), ZeroPolynomial);

  // shared root makes the resultant vanish
  const IntPolynomial common{1, 1};
  CHECK(resultant(common * IntPolynomial{1, 0, 1}, common * IntPolynomial{-2, 1}) == 0);
}

TEST_CASE("resultant agrees with the Sylvester determinant oracle") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPolynomial p = random_poly(rng, 6);
    const IntPolynomial q = random_poly(rng, 6);
    CAPTURE(to_string(p));
    CAPTURE(to_string(q));
    CHECK(resultant(p, q) == oracles::sylvester_resultant_oracle(p, q));
  }
}

TEST_CASE("resultant symmetry and multiplicativity") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPolynomial p = random_poly(rng, 6);
    const IntPolynomial q = random_poly(rng, 6);
    const IntPolynomial r = random_poly(rng, 3);
    const Int sign = (p.degree() * q.degree()) % 2 == 0 ? 1 : -1;
    CHECK(resultant(p, q) == sign * resultant(q, p));
    CHECK(resultant(p, q * r) == resultant(p, q) * resultant(p, r));
  }
}

TEST_CASE("all-ones polynomial") {
  CHECK(all_ones_polynomial<Int>(1) == IntPolynomial{1});
  CHECK(all_ones_polynomial<Int>(2) == IntPolynomial{1, 1});
  CHECK(all_ones_polynomial<Int>(3) == IntPolynomial{1, 1, 1});
  CHECK_THROWS_AS(all_ones_polynomial<Int>(0), Error);

  // (t - 1) * ones(d) = t^d - 1
  for (long d = 1; d <= 9; ++d) {
    const auto product = IntPolynomial{-1, 1} * all_ones_polynomial<Int>(d);
    CHECK(product == IntPolynomial::monomial(static_cast<std::size_t>(d)) - IntPolynomial{1});
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic<Int>(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic<Int>(2) == IntPolynomial{1, 1});
  CHECK(cyclotomic<Int>(3) == IntPolynomial{1, 1, 1});
  CHECK(cyclotomic<Int>(6) == IntPolynomial{1, -1, 1});
  CHECK(cyclotomic<Int>(12) == IntPolynomial{1, 0, -1, 0, 1});

  // prod over divisors of 12 reassembles t^12 - 1
  IntPolynomial prod{1};
  for (long k : {1, 2, 3, 4, 6, 12}) prod = prod * cyclotomic<Int>(k);
  CHECK(prod == IntPolynomial::monomial(12) - IntPolynomial{1});
}

TEST_CASE("division and divisibility") {
  const IntPolynomial p{-1, 0, 0, 0, 0, 0, 1};  // t^6 - 1
  CHECK(divides(cyclotomic<Int>(3), p));
  CHECK(divides(cyclotomic<Int>(6), p));
  CHECK_FALSE(divides(cyclotomic<Int>(4), p));
  CHECK_FALSE(divides(IntPolynomial{1, 2}, p));  // 2t + 1 has no integer cofactor
  CHECK_THROWS_AS(divides(IntPolynomial(), p), ZeroPolynomial);
  CHECK_THROWS_AS(exact_div(IntPolynomial{1, 1, 1}, IntPolynomial{1, 1}), InexactDivision);

  const auto [q, r] = divmod(IntPolynomial{5, 0, 3, 1}, IntPolynomial{1, 1});
  CHECK(q * IntPolynomial{1, 1} + r == IntPolynomial{5, 0, 3, 1});
  CHECK(r.degree() < 1);
}

TEST_CASE("polynomial basics") {
  CHECK(IntPolynomial().degree() == -1);
  CHECK(IntPolynomial{0}.is_zero());
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK(IntPolynomial{1, 2, 3}.degree() == 2);
  CHECK(IntPolynomial{4, 0, 2}(Int(3)) == 22);
  CHECK(IntPolynomial::monomial(3) == IntPolynomial{0, 0, 0, 1});
  CHECK(to_string(laurent({{-1, 1}, {0, -1}, {1, 1}})) == "t^-1 - 1 + t");
  CHECK(to_string(laurent({{0, 2}, {2, -3}})) == "2 - 3*t^2");
  CHECK(to_string(IntLaurent()) == "0");
}
