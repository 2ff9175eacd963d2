// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "oracles.hpp"
#include "pvform/enriques.hpp"
#include "pvform/error.hpp"

using namespace pvform;

namespace {

SurfaceUnion U(const char* s) { return parse_components(s); }

int mod8(int x) { return ((x % 8) + 8) % 8; }

// Recomputes every congruence instance from the partition and the returned values.
bool congruences_hold(const QuoterPartition& p, const BrownAssignment& a) {
  const int c4 = euler_char(p.components()) / 4;
  auto q = p.quoters;
  if (p.half_empty(0)) std::swap(q[0], q[1]);
  if (a.single_half) {
    for (int i = 0; i < 2; ++i)
      if (mod8(euler_char(q[0][i]) - 2 - c4 - a.beta[i]) != 0) return false;
    return true;
  }
  const int s[2] = {1, -1};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (mod8(euler_char(q[0][i]) + euler_char(q[1][j]) - 2 - c4 - s[j] * a.beta[i] - s[i] * a.gamma[j]) != 0)
        return false;
  return true;
}

// Every multiset over {S, S1, S2, V1..V8} with at most `max_parts` components
// and H1 rank at most `max_rank`.
void for_each_union(std::size_t max_parts, int max_rank, const std::function<void(const SurfaceUnion&)>& visit) {
  std::vector<SurfaceKind> kinds{SurfaceKind::sphere(), SurfaceKind::orientable(1), SurfaceKind::orientable(2)};
  for (int p = 1; p <= 8; ++p) kinds.push_back(SurfaceKind::nonorientable(p));
  std::vector<SurfaceKind> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int rank) {
    if (!cur.empty()) visit(SurfaceUnion(cur));
    if (cur.size() == max_parts) return;
    for (std::size_t k = start; k < kinds.size(); ++k) {
      if (rank + kinds[k].h1_rank() > max_rank) continue;
      cur.push_back(kinds[k]);
      rec(k, rank + kinds[k].h1_rank());
      cur.pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace

TEST_CASE("chi_congruence and m_surface_check") {
  CHECK(chi_congruence(U("4V1+2S")));
  CHECK(chi_congruence(U("V10")));
  CHECK_FALSE(chi_congruence(U("V1")));
  CHECK(m_surface_check(U("4V1+2S")));
  CHECK(m_surface_check(U("2V2+4S")));
  CHECK_FALSE(m_surface_check(U("V10")));
}

TEST_CASE("ergm_satisfiable: table examples") {
  const auto a = ergm_satisfiable(parse_partition("{(2V1+S)+(2V1+S)}|{}"));
  REQUIRE(a);
  CHECK(a->single_half);
  CHECK(a->beta == std::array<int, 2>{0, 0});

  const auto b = ergm_satisfiable(parse_partition("{(2V1+S)+(V1+S)}|{(V1)+()}"));
  REQUIRE(b);
  CHECK(b->beta == std::array<int, 2>{0, 1});
  CHECK(b->gamma == std::array<int, 2>{1, 0});

  CHECK_FALSE(ergm_satisfiable(parse_partition("{(4V1+2S)+()}|{}")));

  const auto c = ergm_satisfiable(parse_partition("{(V8)+()}|{(V4)+()}"));
  REQUIRE(c);
  CHECK(c->beta[0] == 6);
  CHECK(c->gamma[0] == 2);

  CHECK_THROWS_AS(ergm_satisfiable(parse_partition("{(V1)+()}|{}")), Error);
}

TEST_CASE("pw1_set") {
  CHECK(pw1_set(parse_partition("{(V2)+(V2)}|{(2S)+(2S)}")) == Pw1::of({0}));
  CHECK(pw1_set(parse_partition("{(V2)+(V2)}|{(3S)+(S)}")) == Pw1::of({2}));
  CHECK(pw1_set(parse_partition("{(2V2)+()}|{(2S)+(2S)}")) == Pw1::of({0, 2}));
  CHECK(pw1_set(parse_partition("{(2V1+S)+(2V1+S)}|{}")) == Pw1::none());
  CHECK_THROWS_AS(pw1_set(parse_partition("{(4V1+2S)+()}|{}")), Error);
}

TEST_CASE("enumerate_separations: small cases") {
  const auto rows = enumerate_separations(U("S1+V2+4S"));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].to_string() == "{(2S)+(V2+2S)}|{(S1)+()}  pw1=0");

  EnumerateOptions one;
  one.halves = std::array<SurfaceUnion, 2>{U("V4+S"), U("0")};
  const auto v4 = enumerate_separations(U("V4+S"), one);
  REQUIRE(v4.size() == 1);
  CHECK(v4[0].to_string() == "{(S)+(V4)}|{}  pw1=0");

  CHECK(enumerate_separations(U("4V1+2S")).size() == 20);
  CHECK(enumerate_separations(U("4V1+2S")) == enumerate_separations(U("4V1+2S")));
  CHECK_THROWS_AS(enumerate_separations(U("V1")), Error);
  one.halves = std::array<SurfaceUnion, 2>{U("V4"), U("0")};
  CHECK_THROWS_AS(enumerate_separations(U("V4+S"), one), Error);
}

TEST_CASE("empty_quoter_chi") {
  for (const char* s : {"V10", "V2", "S", "S3", "V1"}) {
    INFO(s);
    const auto e = empty_quoter_chi(U(s));
    CHECK(e.admissible == std::set<int>{-8});
    CHECK(e.consistent == (euler_char(U(s)) == -8));
  }
  CHECK_THROWS_AS(empty_quoter_chi(U("2S")), Error);
  const auto rows = enumerate_separations(U("V10"));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].partition.to_string() == "{(V10)+()}|{}");
}

TEST_CASE("ergm_satisfiable matches the blind search on small multisets") {
  std::size_t partitions = 0, satisfiable = 0;
  for_each_union(6, 8, [&](const SurfaceUnion& u) {
    int weight = 0;
    for (const auto& c : u.components()) weight += 2 + c.h1_rank();
    if (weight > 16 || !chi_congruence(u)) return;
    for (const auto& halves : submultiset_splits(u))
      for (const auto& a : submultiset_splits(halves[0]))
        for (const auto& b : submultiset_splits(halves[1])) {
          QuoterPartition p;
          p.quoters = {a, b};
          ++partitions;
          const auto got = ergm_satisfiable(p);
          const bool expect = oracle::ergm(p);
          REQUIRE_MESSAGE(got.has_value() == expect, p.to_string());
          if (!got) continue;
          ++satisfiable;
          CHECK_MESSAGE(congruences_hold(p, *got), p.to_string());
          for (std::size_t h = 0; h < 2; ++h)
            for (std::size_t i = 0; i < 2; ++i) {
              const auto& w = got->witnesses[h][i];
              if (!w) continue;
              const int value = (h == 0 ? got->beta : got->gamma)[i];
              CHECK_MESSAGE(brown(*w) == BrownValue::of(value), p.to_string());
            }
          // Swapping quoters inside a half keeps the canonical form and satisfiability.
          QuoterPartition s = p;
          std::swap(s.quoters[0][0], s.quoters[0][1]);
          std::swap(s.quoters[1][0], s.quoters[1][1]);
          CHECK(s.canonical() == p.canonical());
          CHECK(ergm_satisfiable(s).has_value());
          std::swap(s.quoters[0], s.quoters[1]);
          CHECK(s.canonical() == p.canonical());
        }
  });
  CHECK(partitions > 1000);
  CHECK(satisfiable > 100);
}

TEST_CASE("pw1 readings are even and agree within a witness") {
  for (const char* s : {"2V2+4S", "S1+V2+4S", "V2+4S", "V4+3S", "2V2+V4+3S"}) {
    INFO(s);
    const auto u = U(s);
    if (!chi_congruence(u)) continue;
    for (const auto& row : enumerate_separations(u)) {
      for (int v : row.pw1.values) CHECK((v == 0 || v == 2));
      const auto a = ergm_satisfiable(row.partition);
      REQUIRE(a);
      for (int r : a->readings) CHECK(r == a->readings.front());
    }
  }
}

TEST_CASE("partition and row text") {
  const auto p = parse_partition("{(2V1+S)+(V1+S)}|{(V1)+()}");
  CHECK(p.to_string() == "{(2V1+S)+(V1+S)}|{(V1)+()}");
  CHECK(p.components() == U("4V1+2S"));
  const auto row = parse_row("{(2V2)+()}|{(2S)+(2S)}  pw1=0,2");
  CHECK(row.pw1 == Pw1::of({0, 2}));
  CHECK(row.to_string() == "{(2V2)+()}|{(2S)+(2S)}  pw1=0,2");
  for (const char* bad : {"{(V1)+(V1)}", "{(V1)+(V1)}|{(V1)}", "{(V1)(V1)}|{}", "{(X)+()}|{}"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_partition(bad), Error);
  }
  CHECK_THROWS_AS(parse_row("{(V2)+()}|{}  pw1=1"), Error);
}
