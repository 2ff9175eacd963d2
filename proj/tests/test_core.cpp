// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pvform/error.hpp"
#include "pvform/gf2.hpp"
#include "pvform/z4.hpp"

using namespace pvform;

namespace {

Gf2Matrix gf2_matrix(std::initializer_list<std::initializer_list<int>> rows, std::size_t cols) {
  std::vector<Gf2Vector> r;
  for (const auto& row : rows) {
    Gf2Vector v(cols);
    std::size_t i = 0;
    for (int b : row) v.set(i++, b != 0);
    r.push_back(v);
  }
  return Gf2Matrix::from_rows(r, cols);
}

}  // namespace

TEST_CASE("gf2_solve: identity system") {
  const auto sol = gf2_solve(Gf2Matrix::identity(3), Gf2Vector::unit(3, 0));
  REQUIRE(sol);
  CHECK(sol->particular == Gf2Vector::unit(3, 0));
  CHECK(sol->kernel.empty());
  CHECK(sol->rank == 3);
}

TEST_CASE("gf2_solve: inconsistent zero system") {
  CHECK_FALSE(gf2_solve(Gf2Matrix(2, 2), Gf2Vector::unit(2, 0)));
}

TEST_CASE("gf2_solve: one equation in two unknowns") {
  const auto sol = gf2_solve(gf2_matrix({{1, 1}}, 2), Gf2Vector::from_bits({1}));
  REQUIRE(sol);
  CHECK(sol->particular == Gf2Vector::from_bits({1, 0}));
  REQUIRE(sol->kernel.size() == 1);
  CHECK(sol->kernel[0] == Gf2Vector::from_bits({1, 1}));
  CHECK(sol->rank == 1);
}

TEST_CASE("gf2_solve: solutions and kernels on random systems") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    std::vector<Gf2Vector> r;
    for (std::size_t i = 0; i < rows; ++i) r.push_back(Gf2Vector::from_mask(cols, rng()));
    const auto a = Gf2Matrix::from_rows(r, cols);
    const auto b = Gf2Vector::from_mask(rows, rng());
    const auto sol = gf2_solve(a, b);
    bool any = false;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << cols); ++x) any = any || a.multiply(Gf2Vector::from_mask(cols, x)) == b;
    REQUIRE(sol.has_value() == any);
    if (!sol) continue;
    CHECK(a.multiply(sol->particular) == b);
    CHECK(sol->kernel.size() == cols - sol->rank);
    for (const auto& k : sol->kernel) CHECK(a.multiply(k).is_zero());
    CHECK(gf2_rank(sol->kernel) == sol->kernel.size());
  }
}

TEST_CASE("gf2 vectors reject size mismatches") {
  auto a = Gf2Vector(3);
  CHECK_THROWS_AS(a ^= Gf2Vector(4), Error);
  CHECK_THROWS_AS(Gf2Vector::from_mask(65, 1), Error);
}

TEST_CASE("z4_solve_parity: small systems") {
  SUBCASE("two odd unknowns summing to zero") {
    const auto x = z4_solve_parity(Z4Matrix{{1, 1}}, {0}, {Parity::Odd, Parity::Odd});
    REQUIRE(x);
    CHECK(*x == Z4Vector{1, 3});
  }
  SUBCASE("2x = 1 has no solution") { CHECK_FALSE(z4_solve_parity(Z4Matrix{{2}}, {1}, {Parity::Free})); }
  SUBCASE("no equations, one odd unknown") {
    const auto x = z4_solve_parity(Z4Matrix(0, 1), {}, {Parity::Odd});
    REQUIRE(x);
    CHECK(*x == Z4Vector{1});
  }
}

TEST_CASE("z4_solution_space: small systems") {
  SUBCASE("two odd unknowns") {
    const auto s = z4_solution_space(Z4Matrix{{1, 1}}, {0}, {Parity::Odd, Parity::Odd});
    REQUIRE(s);
    CHECK(s->particular == Z4Vector{1, 3});
    CHECK(s->generators == std::vector<Z4Vector>{{2, 2}});
  }
  SUBCASE("identity") {
    Z4Matrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id.set(i, i, 1);
    const auto s = z4_solution_space(id, {0, 0, 0}, ParityMask(3, Parity::Free));
    REQUIRE(s);
    CHECK(s->particular == Z4Vector{0, 0, 0});
    CHECK(s->generators.empty());
  }
  SUBCASE("free unknown") {
    const auto s = z4_solution_space(Z4Matrix{{0}}, {0}, {Parity::Free});
    REQUIRE(s);
    CHECK(s->particular == Z4Vector{0});
    CHECK(s->generators == std::vector<Z4Vector>{{1}});
  }
}

TEST_CASE("z4 solver matches exhaustive search for up to 8 unknowns") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 8;
    Z4Matrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a.set(i, j, static_cast<long long>(rng() % 4));
    Z4Vector b(rows);
    for (auto& e : b) e = std::uint8_t(rng() % 4);
    // Make about half the systems solvable by construction.
    if (t % 2 == 0) {
      Z4Vector x(cols);
      for (auto& e : x) e = std::uint8_t(rng() % 4);
      b = a.multiply(x);
    }
    ParityMask mask(cols);
    for (auto& m : mask) m = rng() % 3 == 0 ? Parity::Odd : Parity::Free;

    const auto all = oracle::z4_all_solutions(a, b, mask);
    const auto x = z4_solve_parity(a, b, mask);
    REQUIRE(x.has_value() == !all.empty());
    if (!x) continue;
    CHECK(*x == all.front());

    const auto space = z4_solution_space(a, b, mask);
    REQUIRE(space);
    CHECK(space->particular == *x);
    for (const auto& g : space->generators) {
      Z4Vector y = space->particular;
      for (std::size_t i = 0; i < cols; ++i) y[i] = z4(y[i] + g[i]);
      CHECK(std::binary_search(all.begin(), all.end(), y));
    }
    // The generators span every difference of solutions.
    for (const auto& s : all) {
      Z4Vector d(cols);
      for (std::size_t i = 0; i < cols; ++i) d[i] = z4(s[i] - space->particular[i]);
      const auto rest = z4_reduce(d, space->generators);
      CHECK(std::all_of(rest.begin(), rest.end(), [](auto e) { return e == 0; }));
    }
  }
}

TEST_CASE("z4_howell_form is canonical for the module it spans") {
  const std::vector<Z4Vector> a{{1, 2, 0}, {0, 2, 2}};
  const std::vector<Z4Vector> b{{1, 0, 2}, {0, 2, 2}, {1, 2, 0}};
  CHECK(z4_howell_form(a, 3) == z4_howell_form(b, 3));
  CHECK(z4_to_string({1, 0, 3}) == "(1,0,3)");
}
