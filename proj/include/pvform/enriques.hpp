// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pvform/surface.hpp"

namespace pvform {

/// Two halves of two quoters each: quoters[h][i] is Q^(h+1)_(i+1).
struct QuoterPartition {
  std::array<std::array<SurfaceUnion, 2>, 2> quoters;

  SurfaceUnion half(std::size_t h) const { return quoters[h][0] + quoters[h][1]; }
  bool half_empty(std::size_t h) const { return quoters[h][0].empty() && quoters[h][1].empty(); }
  SurfaceUnion components() const { return half(0) + half(1); }

  /// Quoters inside a half: nonempty first, then descending χ, then token
  /// string. Halves by rendered text, an empty half last.
  QuoterPartition canonical() const;
  /// "{(A)+(B)}|{(C)+(D)}", "()" for an empty quoter, "{}" for an empty half.
  std::string to_string() const;

  friend auto operator<=>(const QuoterPartition&, const QuoterPartition&) = default;
};

/// β_i = Br q^(1)_{i1}, γ_j = Br q^(2)_{j1}; the second column carries the
/// negated values. With half 2 empty the γ terms are unused and the witnesses
/// of half 1 live on the annihilator of w1 of their quoter.
struct BrownAssignment {
  std::array<int, 2> beta{};
  std::array<int, 2> gamma{};
  bool single_half = false;
  /// witnesses[h][i] realizes the Brown value of quoters[h][i].
  std::array<std::array<std::optional<QuadraticSpace>, 2>, 2> witnesses;
  /// q(w1(F)) per even-χ nonorientable component F, in partition order.
  std::vector<int> readings;
};

/// P(w1): Absent when no nonorientable component has even χ.
struct Pw1 {
  bool absent = true;
  std::set<int> values;

  static Pw1 none() { return {}; }
  static Pw1 of(std::set<int> v) { return {false, std::move(v)}; }
  /// "-", "0", "2" or "0,2".
  std::string to_string() const;
  friend bool operator==(const Pw1&, const Pw1&) = default;
};

struct ClassificationRow {
  QuoterPartition partition;
  Pw1 pw1;
  /// Realization markers such as "*" or "**"; metadata only.
  std::string flags;

  /// `{(A)+(B)}|{(C)+(D)}  pw1=<v>` plus `  [flags]` when flagged.
  std::string to_string() const;
  friend bool operator==(const ClassificationRow&, const ClassificationRow&) = default;
};

ClassificationRow parse_row(std::string_view line);
QuoterPartition parse_partition(std::string_view text);

/// χ ≡ 0 mod 8.
bool chi_congruence(const SurfaceUnion& u);
/// Σ (2 + rank H1) = 16.
bool m_surface_check(const SurfaceUnion& u);

/// Some assignment satisfying every congruence instance, preferring one whose
/// w1 readings agree; nullopt when none. Throws Errc::precondition when χ of
/// the whole partition is not divisible by 8.
std::optional<BrownAssignment> ergm_satisfiable(const QuoterPartition& p);

/// Readings over all satisfying assignments whose readings agree. Throws
/// Errc::precondition when the partition is unsatisfiable.
Pw1 pw1_set(const QuoterPartition& p);

struct EnumerateOptions {
  /// Restrict to one half decomposition (first half, second half).
  std::optional<std::array<SurfaceUnion, 2>> halves;
  bool s1_rule = true;
};

/// Canonical, deduplicated rows sorted by rendered text.
std::vector<ClassificationRow> enumerate_separations(const SurfaceUnion& u, const EnumerateOptions& options = {});

struct EmptyQuoterChi {
  std::set<int> admissible;
  bool consistent = false;
};

/// Values of χ in {-8, 0, 8} allowed by the empty-quoter congruence for a
/// single-component real part, and whether u's own χ is one of them.
EmptyQuoterChi empty_quoter_chi(const SurfaceUnion& u);

/// Every (sub, rest) pair with sub a sub-multiset of u.
std::vector<std::array<SurfaceUnion, 2>> submultiset_splits(const SurfaceUnion& u);

}  // namespace pvform
