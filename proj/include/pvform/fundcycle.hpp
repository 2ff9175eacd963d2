// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pvform/z4.hpp"

namespace pvform {

struct Region {
  std::string label;
  bool minus = true;
  std::optional<long long> chi;
  /// Minus regions only: '+' for Z^{-+}, '-' for Z^{--}, 0 when untagged.
  char side = 0;
  /// (circle index, coefficient ±1 as a residue) pairs. Circle indices count
  /// P circles first, then Q circles.
  std::vector<std::pair<std::size_t, std::uint8_t>> boundary;
};

/// Circles P_1..P_p, Q_1..Q_q and regions Z-_k, Z+_l with signed boundaries.
/// H1 of the circles is the free Z/4-module on them.
class CurveArrangement {
 public:
  std::vector<std::string> p_circles;
  std::vector<std::string> q_circles;
  std::vector<Region> minus_regions;
  std::vector<Region> plus_regions;

  std::size_t circle_count() const { return p_circles.size() + q_circles.size(); }
  /// λ per P circle, κ⁻ per minus region, μ per Q circle, κ⁺ per plus region.
  std::size_t unknown_count() const {
    return p_circles.size() + minus_regions.size() + q_circles.size() + plus_regions.size();
  }
  /// Boundary of a region as a vector in the circle basis.
  Z4Vector boundary_vector(const Region& r) const;

  /// Z^{-+} membership: the explicit side tag, otherwise "touches no P
  /// circle".
  bool is_minus_plus(const Region& r) const;

  /// Throws Errc::precondition on out-of-range circles, coefficients other
  /// than ±1, or repeated circles in one boundary. Returns warnings for
  /// circles that no region bounds on one of the sides.
  std::vector<std::string> validate() const;
};

/// Grammar, one declaration per line ('#' starts a comment):
///   P <label>
///   Q <label>
///   Z- <label> chi=<int> [side=+|-] : ±1*<circle> ...
///   Z+ <label> [chi=<int>] : ±1*<circle> ...
CurveArrangement parse_arrangement(std::string_view text);

/// Each P circle bounds exactly one minus region and each Q circle exactly
/// two.
bool has_type_one_layout(const CurveArrangement& arr);

struct FundamentalCycle {
  Z4Vector lambda;
  Z4Vector kappa_minus;
  Z4Vector mu;
  Z4Vector kappa_plus;

  Z4Vector flatten() const;
  static FundamentalCycle unflatten(const CurveArrangement& arr, const Z4Vector& x);
  std::string to_string() const;
};

struct CycleSystem {
  Z4Matrix matrix;
  Z4Vector rhs;
  ParityMask mask;
};

/// Σλ_i[P_i] + Σκ⁻_k[∂Z⁻_k] − 2Σμ_j[Q_j] − 2Σκ⁺_l[∂Z⁺_l] = 0 with λ, κ⁻ odd.
CycleSystem fundamental_cycle_system(const CurveArrangement& arr);

std::optional<FundamentalCycle> solve_fundamental_cycle(const CurveArrangement& arr);

/// Σ[P_i] ∈ span(2[P_i], 2[Q_j], 2∂[Z⁺_l]) modulo the minus-region
/// boundaries.
bool subgroup_membership(const CurveArrangement& arr);

struct Separation {
  /// Quoter labels by parity; the first element is always in group 0.
  std::vector<int> q_groups;
  std::vector<int> plus_groups;
};

Separation separation_from_cycle(const FundamentalCycle& c);

struct AmbiguityReport {
  FundamentalCycle particular;
  std::vector<Z4Vector> generators;
  /// 2[Z_R], 2([Z⁺]+[P̄]), 2([Z⁻⁺]+[Q̄]) in coefficient coordinates.
  std::vector<Z4Vector> canonical;
  /// Whether each canonical vector solves the homogeneous system.
  std::vector<bool> canonical_homogeneous;
  /// Whether every generator lies in the span of the canonical vectors.
  bool contained = false;
};

/// Throws Errc::precondition when no fundamental cycle exists.
AmbiguityReport ambiguity_generators(const CurveArrangement& arr);

struct LoopData {
  bool disorienting = false;
  long long isolated_q_hits = 0;
  long long isolated_plus_hits = 0;
  long long pq_points_passed = 0;
};

/// 2e + 2i_Q + 2i⁺ + i_{P∩Q} mod 4.
int loop_form_value(const LoopData& d);

enum class BoundaryKind { Tangency, MinusRegion, PComponent, Lk };

/// Tangency → 1; MinusRegion(χ) → 2χ; PComponent(s = [P]²) → s/2 (s must be
/// even); Lk(c⁺, c⁻) → c⁺ − c⁻. All mod 4.
int boundary_value(BoundaryKind kind, long long a = 0, long long b = 0);

/// Human-readable analysis for the CLI.
std::string fundcycle_report(const CurveArrangement& arr, bool assume_proper);

}  // namespace pvform
