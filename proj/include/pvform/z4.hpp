// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace pvform {

/// Residues mod 4, one per entry, always normalized to {0,1,2,3}.
using Z4Vector = std::vector<std::uint8_t>;

inline std::uint8_t z4(long long v) { return static_cast<std::uint8_t>(((v % 4) + 4) % 4); }

class Z4Matrix {
 public:
  Z4Matrix() = default;
  Z4Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
  Z4Matrix(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint8_t get(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v) { entries_[r * cols_ + c] = z4(v); }

  Z4Vector multiply(const Z4Vector& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> entries_;
};

enum class Parity { Free, Odd };
using ParityMask = std::vector<Parity>;

/// Lexicographically smallest x with A x = b (mod 4) and x_i odd wherever the
/// mask says Odd, or nullopt when none exists.
std::optional<Z4Vector> z4_solve_parity(const Z4Matrix& a, const Z4Vector& b, const ParityMask& mask);

struct Z4SolutionSpace {
  Z4Vector particular;
  /// Howell basis of { d : A d = 0, d_i even at Odd positions }, sorted
  /// lexicographically.
  std::vector<Z4Vector> generators;
};

std::optional<Z4SolutionSpace> z4_solution_space(const Z4Matrix& a, const Z4Vector& b, const ParityMask& mask);

/// Howell normal form of the Z/4-submodule spanned by `rows`: a canonical
/// echelon generating set (pivots 1 or 2, entries above pivots reduced).
std::vector<Z4Vector> z4_howell_form(std::vector<Z4Vector> rows, std::size_t cols);

/// Reduces v modulo the module given by a Howell basis (rows in any order);
/// the result is the
/// lexicographically smallest element of the coset v + span.
Z4Vector z4_reduce(Z4Vector v, const std::vector<Z4Vector>& howell);

std::string z4_to_string(const Z4Vector& v);

}  // namespace pvform
