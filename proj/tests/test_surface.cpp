// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "pvform/error.hpp"
#include "pvform/surface.hpp"

using namespace pvform;

namespace {

SurfaceUnion U(const char* s) { return parse_components(s); }

}  // namespace

TEST_CASE("parse_components") {
  const auto a = U("4V1+2S");
  REQUIRE(a.size() == 6);
  CHECK(a.components()[0] == SurfaceKind::nonorientable(1));
  CHECK(a.components()[5] == SurfaceKind::sphere());
  CHECK(a.to_string() == "4V1+2S");

  const auto b = U("S1+V2+4S");
  CHECK(b.size() == 6);
  CHECK(b.to_string() == "S1+V2+4S");
  CHECK(U(" 4S + V2+ S1 ") == b);
  CHECK(U("0").empty());
  CHECK(U("").empty());
  CHECK(U("0").to_string() == "0");

  for (const char* bad : {"3X", "V", "S0", "V0", "0V1", "V1+", "+V1", "2", "V1x"}) {
    INFO(bad);
    CHECK_THROWS_AS(U(bad), Error);
  }
}

TEST_CASE("euler_char") {
  CHECK(euler_char(U("4V1+2S")) == 8);
  CHECK(euler_char(U("V10")) == -8);
  CHECK(euler_char(U("0")) == 0);
}

TEST_CASE("homology_model") {
  CHECK(homology_model(U("S")).rank == 0);
  const auto s1 = homology_model(U("S1"));
  CHECK(s1.rank == 2);
  CHECK(s1.bilinear.get(0, 1));
  CHECK_FALSE(s1.bilinear.get(0, 0));
  CHECK(s1.w1_dual.is_zero());
  const auto v3 = homology_model(U("V3"));
  CHECK(v3.bilinear == Gf2Matrix::identity(3));
  CHECK(v3.w1_dual == Gf2Vector::ones(3));
}

TEST_CASE("refinements") {
  CHECK(refinements(U("V1")).size() == 2);
  CHECK(refinements(U("V1")).at(0).q_basis()[0] == 1);
  CHECK(refinements(U("V1")).at(1).q_basis()[0] == 3);
  CHECK(refinements(U("S")).size() == 1);
  CHECK(refinements(U("S1")).size() == 4);
  CHECK_THROWS_AS(refinements(U("V25")), Error);
}

TEST_CASE("achievable_brown_set") {
  CHECK(achievable_brown_set(U("V1")) == std::set<int>{1, 7});
  CHECK(achievable_brown_set(U("V2")) == std::set<int>{0, 2, 6});
  CHECK(achievable_brown_set(U("S1")) == std::set<int>{0, 4});
  CHECK(achievable_brown_set(U("2S")) == std::set<int>{0});
  CHECK(achievable_brown_set(U("0")) == std::set<int>{0});
}

TEST_CASE("achievable sets of V_p are {p - 2k mod 8}") {
  for (int p = 1; p <= 8; ++p) {
    std::set<int> expect;
    for (int k = 0; k <= p; ++k) expect.insert(((p - 2 * k) % 8 + 8) % 8);
    SurfaceUnion u({SurfaceKind::nonorientable(p)});
    CHECK(achievable_brown_set(u) == expect);
    std::set<int> enumerated;
    const auto range = refinements(u);
    for (std::uint64_t i = 0; i < range.size(); ++i) enumerated.insert(brown(range.at(i)).residue());
    CHECK(enumerated == expect);
  }
}

TEST_CASE("refinement laws for unions of rank <= 6") {
  const char* unions[] = {"V1", "V2", "V3", "S1", "S1+V1", "V4+S", "2V1+V2", "S2", "S1+2V2", "V6", "3V2", "S3"};
  for (const char* text : unions) {
    INFO(text);
    const auto u = U(text);
    const auto range = refinements(u);
    const auto& h = range.homology();
    const auto set = achievable_brown_set(u);
    for (std::uint64_t i = 0; i < range.size(); ++i) {
      const auto q = range.at(i);
      const int b = brown(q).residue();
      // w1 is characteristic for the intersection form.
      CHECK(b % 4 == q.q(h.w1_dual));
      CHECK(b % 2 == int(h.rank % 2));
    }
    for (int b : set) CHECK(set.count((8 - b) % 8));
  }
}

TEST_CASE("annihilator_brown_set") {
  CHECK(annihilator_brown_set(U("S1")) == achievable_brown_set(U("S1")));
  CHECK(annihilator_brown_set(U("0")) == std::set<int>{0});
  // V1: the annihilator of w1 is zero.
  CHECK(annihilator_brown_set(U("V1")) == std::set<int>{0});
  // 4V1: the annihilator has rank 3 and contains w1 in its radical.
  for (int b : annihilator_brown_set(U("4V1"))) CHECK(b % 2 == 0);
}

TEST_CASE("pontrjagin_square_surface") {
  CHECK(pontrjagin_square_surface({0, 0, 2}) == 0);
  CHECK(pontrjagin_square_surface({2, 0, 0}) == 2);
  CHECK(pontrjagin_square_surface({-1, 1, 1}) == 3);
}

TEST_CASE("kalinin_class") {
  CHECK(kalinin_class({1, 0, 0}).to_string() == "{[l1]}");
  const auto k = kalinin_class({0, 1, 1});
  CHECK(k.to_string() == "{[n1],[P1],<n1>}");
  CHECK(k.zero_dim_count() == 2);
  CHECK(k.zero_dim_parity() == 0);
  CHECK(kalinin_class({0, 0, 0}).to_string() == "{}");
  for (long long q = 0; q <= 3; ++q)
    for (long long r = 0; r <= 3; ++r) CHECK(kalinin_class({1, q, r}).zero_dim_parity() == (q + r) % 2);
  CHECK_THROWS_AS(kalinin_class({-1, 0, 0}), Error);
}

TEST_CASE("w1_value") {
  const auto h2 = homology_model(U("V2"));
  CHECK(w1_value(QuadraticSpace(h2.bilinear, {1, 1}), h2, 0) == 2);
  CHECK(w1_value(QuadraticSpace(h2.bilinear, {1, 3}), h2, 0) == 0);
  const auto h1 = homology_model(U("V1"));
  CHECK(w1_value(QuadraticSpace(h1.bilinear, {1}), h1, 0) == 1);
  const auto hs = homology_model(U("V1+S"));
  CHECK_THROWS_AS(w1_value(QuadraticSpace(hs.bilinear, {1}), hs, 1), Error);
  CHECK_THROWS_AS(w1_value(QuadraticSpace(h2.bilinear, {1, 1}), h1, 0), Error);
}
