// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pvform/gf2.hpp"

namespace pvform {

/// A GF(2) vector space with a symmetric bilinear form x∘y and a Z/4-valued
/// quadratic refinement q, stored by its values on the standard basis:
///
///   q(x + y) = q(x) + q(y) + 2 (x∘y),     q(e_i) ≡ e_i∘e_i (mod 2).
class QuadraticSpace {
 public:
  QuadraticSpace() = default;
  /// Throws Errc::dimension_mismatch on a non-square / non-symmetric form or a
  /// q_basis of the wrong length, Errc::precondition when a basis value has
  /// the wrong parity.
  QuadraticSpace(Gf2Matrix bilinear, std::vector<std::uint8_t> q_basis);

  std::size_t dim() const noexcept { return q_basis_.size(); }
  const Gf2Matrix& bilinear() const noexcept { return bilinear_; }
  std::span<const std::uint8_t> q_basis() const noexcept { return q_basis_; }

  /// Folds the extension rule over the support of x.
  std::uint8_t q(const Gf2Vector& x) const;
  bool dot(const Gf2Vector& x, const Gf2Vector& y) const { return bilinear_.form(x, y); }

  friend bool operator==(const QuadraticSpace&, const QuadraticSpace&) = default;

 private:
  Gf2Matrix bilinear_;
  std::vector<std::uint8_t> q_basis_;
};

/// Counts n_k = #{x : q(x) = k}.
struct GaussSumProfile {
  std::array<std::uint64_t, 4> counts{};

  std::int64_t real_part() const { return std::int64_t(counts[0]) - std::int64_t(counts[2]); }
  std::int64_t imag_part() const { return std::int64_t(counts[1]) - std::int64_t(counts[3]); }
};

/// Brown invariant: a residue mod 8, or Undefined for non-informative spaces.
class BrownValue {
 public:
  static BrownValue undefined() { return BrownValue(); }
  static BrownValue of(int residue) { return BrownValue(((residue % 8) + 8) % 8); }

  bool defined() const noexcept { return residue_ >= 0; }
  int residue() const;
  std::string to_string() const { return defined() ? std::to_string(residue_) : "undefined"; }

  friend bool operator==(const BrownValue&, const BrownValue&) = default;

 private:
  BrownValue() = default;
  explicit BrownValue(int r) : residue_(r) {}
  int residue_ = -1;
};

struct RadicalInfo {
  std::vector<Gf2Vector> radical_basis;
  bool informative = true;
};

/// Largest dimension the 2^dim enumerations accept.
inline constexpr std::size_t kMaxEnumerationDim = 26;

std::uint8_t q_eval(const QuadraticSpace& space, const Gf2Vector& x);
RadicalInfo radical_and_informative(const QuadraticSpace& space);
GaussSumProfile gauss_sum_profile(const QuadraticSpace& space);

/// Brown invariant read off the Gauss sum Σ i^{q(x)}.
BrownValue brown(const QuadraticSpace& space);
/// Same invariant via splitting off the radical, then ⟨±1⟩ lines and planes.
/// Shares no code with the Gauss-sum path.
BrownValue brown_by_decomposition(const QuadraticSpace& space);

/// (q + v)(x) = q(x) + 2 (v∘x).
QuadraticSpace shift(const QuadraticSpace& space, const Gf2Vector& v);
QuadraticSpace direct_sum(const QuadraticSpace& a, const QuadraticSpace& b);
/// Restriction of q to the span of `basis` (which must be independent),
/// expressed in that basis.
QuadraticSpace restrict_to(const QuadraticSpace& space, std::span<const Gf2Vector> basis);

/// Every u with u∘x = x∘x for all x, in increasing order.
std::vector<Gf2Vector> characteristic_elements(const QuadraticSpace& space);

/// Basis of a subspace H with H⊥ = H and q|_H = 0, or nullopt when none
/// exists. Throws Errc::not_informative on non-informative input.
std::optional<std::vector<Gf2Vector>> null_cobordant_witness(const QuadraticSpace& space);

struct SubspaceCheck {
  bool informative = false;
  BrownValue brown = BrownValue::undefined();
};

/// Is W an informative subspace (W⊥ ⊆ W, q|_{W⊥} = 0)? When so, also
/// reports the Brown invariant of (W, q|_W).
SubspaceCheck informative_subspace_check(const QuadraticSpace& space, std::span<const Gf2Vector> w);

/// Text form: "dim n", n rows of 0/1 characters, one line of n residues.
std::string to_text(const QuadraticSpace& space);
QuadraticSpace parse_quadratic_space(std::string_view text);

}  // namespace pvform
