// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pvform/error.hpp"
#include "pvform/quadspace.hpp"

using namespace pvform;

namespace {

QuadraticSpace diagonal(std::vector<std::uint8_t> q) {
  const std::size_t n = q.size();
  return QuadraticSpace(Gf2Matrix::identity(n), std::move(q));
}

QuadraticSpace symplectic(std::uint8_t qa, std::uint8_t qb) {
  Gf2Matrix h(2, 2);
  h.set(0, 1, true);
  h.set(1, 0, true);
  return QuadraticSpace(h, {qa, qb});
}

QuadraticSpace null_line(std::uint8_t q) { return QuadraticSpace(Gf2Matrix(1, 1), {q}); }

Gf2Vector bits(std::initializer_list<int> b) { return Gf2Vector::from_bits(b); }

}  // namespace

TEST_CASE("construction validates shape and parity") {
  CHECK_THROWS_AS(QuadraticSpace(Gf2Matrix::identity(2), {1}), Error);
  CHECK_THROWS_AS(QuadraticSpace(Gf2Matrix::identity(1), {2}), Error);
  Gf2Matrix asym(2, 2);
  asym.set(0, 1, true);
  CHECK_THROWS_AS(QuadraticSpace(asym, {0, 0}), Error);
}

TEST_CASE("q_eval follows the extension rule") {
  CHECK(q_eval(diagonal({1, 1}), bits({0, 0})) == 0);
  CHECK(q_eval(diagonal({1, 1}), bits({1, 1})) == 2);
  CHECK(q_eval(symplectic(0, 0), bits({1, 1})) == 2);
}

TEST_CASE("radical_and_informative") {
  const auto ns = radical_and_informative(symplectic(0, 2));
  CHECK(ns.radical_basis.empty());
  CHECK(ns.informative);
  const auto z = radical_and_informative(null_line(0));
  CHECK(z.radical_basis.size() == 1);
  CHECK(z.informative);
  CHECK_FALSE(radical_and_informative(null_line(2)).informative);
}

TEST_CASE("brown: small spaces") {
  CHECK(brown(QuadraticSpace(Gf2Matrix(0, 0), {})) == BrownValue::of(0));
  CHECK(brown(diagonal({1})) == BrownValue::of(1));
  CHECK(brown(symplectic(2, 2)) == BrownValue::of(4));
  CHECK(brown(diagonal({1, 1})) == BrownValue::of(2));
  CHECK_FALSE(brown(null_line(2)).defined());
  CHECK_THROWS_AS((void)brown(null_line(2)).residue(), Error);
  CHECK(brown(null_line(2)).to_string() == "undefined");
}

TEST_CASE("shift") {
  CHECK(shift(symplectic(0, 0), bits({0, 0})) == symplectic(0, 0));
  const auto s = shift(symplectic(0, 0), bits({1, 0}));
  CHECK(s.q_basis()[0] == 0);
  CHECK(s.q_basis()[1] == 2);
  CHECK(brown(s) == BrownValue::of(0));
  const auto t = shift(diagonal({1}), bits({1}));
  CHECK(t.q_basis()[0] == 3);
  CHECK(brown(t) == BrownValue::of(7));
}

TEST_CASE("direct_sum") {
  const QuadraticSpace empty(Gf2Matrix(0, 0), {});
  CHECK(direct_sum(diagonal({1}), empty) == diagonal({1}));
  CHECK(brown(direct_sum(diagonal({1}), diagonal({1}))) == BrownValue::of(2));
  CHECK(brown(direct_sum(diagonal({1}), diagonal({3}))) == BrownValue::of(0));
}

TEST_CASE("characteristic_elements") {
  CHECK(characteristic_elements(diagonal({1, 1, 1})) == std::vector<Gf2Vector>{bits({1, 1, 1})});
  CHECK(characteristic_elements(symplectic(0, 0)) == std::vector<Gf2Vector>{bits({0, 0})});
  CHECK(characteristic_elements(null_line(0)) == std::vector<Gf2Vector>{bits({0}), bits({1})});
}

TEST_CASE("null_cobordant_witness") {
  const auto a = null_cobordant_witness(symplectic(0, 0));
  REQUIRE(a);
  CHECK(*a == std::vector<Gf2Vector>{bits({1, 0})});
  const auto b = null_cobordant_witness(diagonal({1, 3}));
  REQUIRE(b);
  CHECK(*b == std::vector<Gf2Vector>{bits({1, 1})});
  CHECK_FALSE(null_cobordant_witness(diagonal({1})));
  CHECK_THROWS_AS(null_cobordant_witness(null_line(2)), Error);
}

TEST_CASE("informative_subspace_check") {
  const auto whole = diagonal({1, 3, 1});
  std::vector<Gf2Vector> all{bits({1, 0, 0}), bits({0, 1, 0}), bits({0, 0, 1})};
  const auto c = informative_subspace_check(whole, all);
  CHECK(c.informative);
  CHECK(c.brown == brown(whole));

  const std::vector<Gf2Vector> a{bits({1, 0})};
  const auto s = informative_subspace_check(symplectic(0, 0), a);
  CHECK(s.informative);
  CHECK(s.brown == BrownValue::of(0));

  const std::vector<Gf2Vector> e1{bits({1, 0})};
  CHECK_FALSE(informative_subspace_check(diagonal({1, 1}), e1).informative);
}

TEST_CASE("brown agrees with the brute-force Gauss sum and the decomposition path") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 400; ++t) {
    const auto s = oracle::random_space(rng, rng() % 9);
    const auto b = brown(s);
    const int o = oracle::brown(s);
    CHECK(b.defined() == (o >= 0));
    if (b.defined()) CHECK(b.residue() == o);
    CHECK(brown_by_decomposition(s) == b);
  }
}

TEST_CASE("text form round trip") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto s = oracle::random_space(rng, rng() % 7);
    CHECK(parse_quadratic_space(to_text(s)) == s);
  }
  CHECK(to_text(diagonal({1, 3})) == "dim 2\n10\n01\n1 3\n");
  CHECK_THROWS_AS(parse_quadratic_space("dim 2\n10\n01\n1"), Error);
  CHECK_THROWS_AS(parse_quadratic_space("dim 1\n1\n2\n"), Error);
  CHECK_THROWS_AS(parse_quadratic_space("dim 2\n11\n01\n1 1\n"), Error);
}
