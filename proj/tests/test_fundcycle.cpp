// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "pvform/error.hpp"
#include "pvform/fundcycle.hpp"

using namespace pvform;

namespace {

const char* kDisk = "P a\nZ- A chi=1 : +1*a\n";
const char* kFree = "P a\n";
const char* kDiskPair = "P a\nQ c\nZ- A chi=1 : +1*a\nZ+ B : +1*c\n";
const char* kAnnulus = "P a\nP b\nZ- A chi=0 : +1*a +1*b\n";

bool in_span(const Z4Vector& v, const std::vector<Z4Vector>& gens) {
  const auto rest = z4_reduce(v, z4_howell_form(gens, v.size()));
  return std::all_of(rest.begin(), rest.end(), [](auto e) { return e == 0; });
}

}  // namespace

TEST_CASE("solve_fundamental_cycle: single disk") {
  const auto c = solve_fundamental_cycle(parse_arrangement(kDisk));
  REQUIRE(c);
  CHECK(c->lambda == Z4Vector{1});
  CHECK(c->kappa_minus == Z4Vector{3});
  CHECK(c->mu.empty());
  CHECK(c->kappa_plus.empty());
  CHECK(subgroup_membership(parse_arrangement(kDisk)));
}

TEST_CASE("solve_fundamental_cycle: free P circle") {
  const auto arr = parse_arrangement(kFree);
  CHECK_FALSE(solve_fundamental_cycle(arr));
  CHECK_FALSE(subgroup_membership(arr));
  CHECK_THROWS_AS(ambiguity_generators(arr), Error);
}

TEST_CASE("solve_fundamental_cycle: P disk with a Q disk") {
  const auto c = solve_fundamental_cycle(parse_arrangement(kDiskPair));
  REQUIRE(c);
  CHECK(c->flatten() == Z4Vector{1, 3, 0, 0});
  const auto sep = separation_from_cycle(*c);
  CHECK(sep.q_groups == std::vector<int>{0});
  CHECK(sep.plus_groups == std::vector<int>{0});
}

TEST_CASE("solve_fundamental_cycle: annulus") {
  const auto arr = parse_arrangement(kAnnulus);
  const auto c = solve_fundamental_cycle(arr);
  REQUIRE(c);
  CHECK(c->lambda == Z4Vector{1, 1});
  CHECK(c->kappa_minus == Z4Vector{3});
  CHECK(subgroup_membership(arr));
}

TEST_CASE("separation_from_cycle groups by parity") {
  FundamentalCycle c;
  c.mu = {0, 1};
  c.kappa_plus = {0, 2};
  const auto s = separation_from_cycle(c);
  CHECK(s.q_groups[0] != s.q_groups[1]);
  CHECK(s.plus_groups[0] == s.plus_groups[1]);
}

TEST_CASE("ambiguity_generators") {
  const auto arr = parse_arrangement(kDiskPair);
  const auto r = ambiguity_generators(arr);
  CHECK(r.particular.flatten() == Z4Vector{1, 3, 0, 0});
  CHECK(in_span({2, 2, 0, 0}, r.generators));
  CHECK(r.canonical.size() == 3);
  CHECK(r.canonical_homogeneous.size() == 3);
  // Every generator shifts a solution to another solution.
  for (const auto& g : r.generators) {
    Z4Vector x = r.particular.flatten();
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = z4(x[i] + g[i]);
    CHECK(oracle::cycle_holds(arr, x));
  }
}

TEST_CASE("random arrangements: solutions, generators and separation invariance") {
  std::mt19937_64 rng(21);
  int solved = 0;
  for (int t = 0; t < 200; ++t) {
    const auto arr = oracle::random_arrangement(rng, 8, t % 2 == 0);
    const auto c = solve_fundamental_cycle(arr);
    if (t % 2 == 0) {
      CHECK(c.has_value() == subgroup_membership(arr));
    }
    if (!c) continue;
    ++solved;
    const auto x = c->flatten();
    CHECK(oracle::cycle_holds(arr, x));
    const auto r = ambiguity_generators(arr);
    const auto base = separation_from_cycle(*c);
    for (const auto& g : r.generators) {
      Z4Vector y = x;
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = z4(y[i] + g[i]);
      CHECK(oracle::cycle_holds(arr, y));
    }
    for (const auto& v : r.canonical) {
      Z4Vector y = x;
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = z4(y[i] + v[i]);
      const auto s = separation_from_cycle(FundamentalCycle::unflatten(arr, y));
      CHECK(s.q_groups == base.q_groups);
      CHECK(s.plus_groups == base.plus_groups);
    }
  }
  CHECK(solved > 20);
}

TEST_CASE("loop_form_value") {
  CHECK(loop_form_value({false, 0, 0, 0}) == 0);
  CHECK(loop_form_value({true, 0, 0, 0}) == 2);
  CHECK(loop_form_value({false, 1, 1, 0}) == 0);
  CHECK(loop_form_value({false, 0, 0, 3}) == 3);
  CHECK_THROWS_AS(loop_form_value({false, -1, 0, 0}), Error);
}

TEST_CASE("boundary_value") {
  CHECK(boundary_value(BoundaryKind::Tangency) == 1);
  CHECK(boundary_value(BoundaryKind::MinusRegion, 1) == 2);
  CHECK(boundary_value(BoundaryKind::MinusRegion, -2) == 0);
  CHECK(boundary_value(BoundaryKind::PComponent, 4) == 2);
  CHECK(boundary_value(BoundaryKind::PComponent, -2) == 3);
  CHECK(boundary_value(BoundaryKind::Lk, 3, 1) == 2);
  CHECK_THROWS_AS(boundary_value(BoundaryKind::PComponent, 3), Error);
}

TEST_CASE("parse_arrangement") {
  const auto arr = parse_arrangement("# comment\nZ- A chi=2 side=+ : +1*c -1*a\nP a\nQ c\nZ+ B : -1*c\n");
  CHECK(arr.p_circles == std::vector<std::string>{"a"});
  CHECK(arr.q_circles == std::vector<std::string>{"c"});
  REQUIRE(arr.minus_regions.size() == 1);
  CHECK(arr.minus_regions[0].chi == 2);
  CHECK(arr.is_minus_plus(arr.minus_regions[0]));
  CHECK(arr.boundary_vector(arr.minus_regions[0]) == Z4Vector{3, 1});
  CHECK(arr.boundary_vector(arr.plus_regions[0]) == Z4Vector{0, 3});
  CHECK(has_type_one_layout(parse_arrangement(kDisk)));
  CHECK_FALSE(has_type_one_layout(parse_arrangement(kFree)));

  for (const char* bad : {"X a\n", "P a\nP a\n", "P a\nZ- A : +1*a\n", "P a\nZ- A chi=1 +1*a\n",
                          "P a\nZ- A chi=1 : +2*a\n", "P a\nZ- A chi=1 : +1*b\n", "P a\nZ+ B side=+ : +1*a\n",
                          "P a\nZ- A chi=x : +1*a\n", "P\n"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_arrangement(bad), Error);
  }
  CHECK_THROWS_AS(parse_arrangement("P a\nZ- A chi=1 : +1*a -1*a\n"), Error);
}

TEST_CASE("fundcycle_report") {
  const auto text = fundcycle_report(parse_arrangement(kDiskPair), true);
  CHECK(text.find("fundamental cycle: lambda=(1) kappa-=(3) mu=(0) kappa+=(0)") != std::string::npos);
  CHECK(text.find("subgroup membership: yes") != std::string::npos);
  CHECK(fundcycle_report(parse_arrangement(kFree), false).find("fundamental cycle: none") != std::string::npos);
}
