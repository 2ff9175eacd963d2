// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "pvform/error.hpp"
#include "pvform/lattice.hpp"

using namespace pvform;

TEST_CASE("signatures of the named blocks") {
  CHECK(signature(UnimodularLattice::hyperbolic_plane()) == 0);
  CHECK(signature(UnimodularLattice::e8()) == -8);
  CHECK(signature(UnimodularLattice({{1, 0}, {0, -1}})) == 0);
}

TEST_CASE("reduce_mod2") {
  const auto p = reduce_mod2(UnimodularLattice::plus_one());
  CHECK(p.dim() == 1);
  CHECK(p.q_basis()[0] == 1);
  const auto u = reduce_mod2(UnimodularLattice::hyperbolic_plane());
  CHECK(u.dim() == 2);
  CHECK(u.q_basis()[0] == 0);
  CHECK(u.q_basis()[1] == 0);
  CHECK(u.bilinear().get(0, 1));
  const auto e = reduce_mod2(UnimodularLattice::e8());
  CHECK(e.dim() == 8);
  for (auto v : e.q_basis()) CHECK(v % 2 == 0);
  CHECK(brown(e) == BrownValue::of(0));
}

TEST_CASE("brown_signature_check") {
  const auto a = brown_signature_check(direct_sum(UnimodularLattice::e8(), UnimodularLattice::hyperbolic_plane()));
  CHECK(a.signature_mod8 == 0);
  CHECK(a.brown == BrownValue::of(0));
  CHECK(a.equal);
  const auto b = brown_signature_check(parse_lattice("sum:3*+1"));
  CHECK(b.signature_mod8 == 3);
  CHECK(b.brown == BrownValue::of(3));
  CHECK(b.equal);
  const auto c = brown_signature_check(UnimodularLattice::minus_one());
  CHECK(c.signature_mod8 == 7);
  CHECK(c.brown == BrownValue::of(7));
  CHECK(c.equal);
}

TEST_CASE("signature is additive and bounded by rank") {
  const std::vector<UnimodularLattice> blocks{UnimodularLattice::e8(), UnimodularLattice::hyperbolic_plane(),
                                              UnimodularLattice::plus_one(), UnimodularLattice::minus_one()};
  for (const auto& a : blocks)
    for (const auto& b : blocks) {
      const auto s = direct_sum(a, b);
      CHECK(signature(s) == signature(a) + signature(b));
      CHECK(std::abs(signature(s)) <= int(s.rank()));
    }
}

TEST_CASE("even lattices reduce to even q values") {
  const auto q = reduce_mod2(parse_lattice("sum:E8,2*U"));
  for (auto v : q.q_basis()) CHECK(v % 2 == 0);
}

TEST_CASE("parse_lattice") {
  CHECK(parse_lattice("E8").rank() == 8);
  CHECK(parse_lattice("sum:E8,U,3*+1").rank() == 13);
  CHECK(parse_lattice("rank 2\n0 1\n1 0\n").gram() == IntMatrix{{0, 1}, {1, 0}});
  CHECK(signature(parse_lattice("rank 2\n2 1\n1 1\n")) == 2);
  CHECK_THROWS_AS(parse_lattice("rank 2\n2 0\n0 1\n"), Error);  // determinant 2
  CHECK_THROWS_AS(parse_lattice("rank 2\n0 1\n0 0\n"), Error);  // not symmetric
  CHECK_THROWS_AS(parse_lattice("E7"), Error);
  CHECK_THROWS_AS(parse_lattice("sum:0*U"), Error);
  CHECK_THROWS_AS(parse_lattice("rank 2\n1 0\n0"), Error);
}
