// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pvform {

/// Dense bit-packed vector over GF(2).
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  static Gf2Vector from_bits(std::initializer_list<int> bits);
  /// Low `n` bits of `mask`; requires n <= 64.
  static Gf2Vector from_mask(std::size_t n, std::uint64_t mask);
  static Gf2Vector unit(std::size_t n, std::size_t i);
  static Gf2Vector ones(std::size_t n);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  Gf2Vector& operator^=(const Gf2Vector& other);
  friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }

  /// Standard dot product mod 2.
  bool dot(const Gf2Vector& other) const;
  std::size_t popcount() const noexcept;
  bool is_zero() const noexcept;
  /// Low 64 bits; meaningful only for size() <= 64.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  /// "0110"-style rendering, index 0 first.
  std::string to_string() const;

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
  friend std::strong_ordering operator<=>(const Gf2Vector& a, const Gf2Vector& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_rows(std::vector<Gf2Vector> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
  const Gf2Vector& row(std::size_t r) const { return rows_[r]; }

  bool is_symmetric() const;
  Gf2Vector multiply(const Gf2Vector& x) const;
  /// x^T M y.
  bool form(const Gf2Vector& x, const Gf2Vector& y) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<Gf2Vector> rows_;
};

struct Gf2Solution {
  Gf2Vector particular;
  std::vector<Gf2Vector> kernel;
  std::size_t rank = 0;
};

/// Solves A x = b. The particular solution has zeros in every free column.
std::optional<Gf2Solution> gf2_solve(const Gf2Matrix& a, const Gf2Vector& b);

std::vector<Gf2Vector> gf2_kernel(const Gf2Matrix& a);
std::size_t gf2_rank(std::span<const Gf2Vector> vectors);
/// Reduced row echelon basis of the span; zero vectors dropped.
std::vector<Gf2Vector> gf2_span_basis(std::span<const Gf2Vector> vectors, std::size_t n);
bool gf2_in_span(std::span<const Gf2Vector> basis, const Gf2Vector& v);

}  // namespace pvform
