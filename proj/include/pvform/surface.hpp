// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pvform/quadspace.hpp"

namespace pvform {

/// S (sphere), S_p (orientable genus p) or V_p (p crosscaps).
struct SurfaceKind {
  enum class Tag : std::uint8_t { Orientable, Nonorientable, Sphere };

  Tag tag = Tag::Sphere;
  int p = 0;

  static SurfaceKind sphere() { return {Tag::Sphere, 0}; }
  static SurfaceKind orientable(int genus);
  static SurfaceKind nonorientable(int crosscaps);

  int euler_char() const { return tag == Tag::Sphere ? 2 : tag == Tag::Orientable ? 2 - 2 * p : 2 - p; }
  int h1_rank() const { return tag == Tag::Sphere ? 0 : tag == Tag::Orientable ? 2 * p : p; }
  bool nonorientable_even() const { return tag == Tag::Nonorientable && p % 2 == 0; }
  std::string token() const;

  /// Canonical order: S_p by descending p, then V_p by descending p, then S.
  friend std::strong_ordering operator<=>(const SurfaceKind& a, const SurfaceKind& b) {
    if (auto c = a.tag <=> b.tag; c != 0) return c;
    return b.p <=> a.p;
  }
  friend bool operator==(const SurfaceKind&, const SurfaceKind&) = default;
};

/// Multiset of components, kept sorted in canonical order.
class SurfaceUnion {
 public:
  SurfaceUnion() = default;
  explicit SurfaceUnion(std::vector<SurfaceKind> components);

  const std::vector<SurfaceKind>& components() const noexcept { return components_; }
  bool empty() const noexcept { return components_.empty(); }
  std::size_t size() const noexcept { return components_.size(); }

  /// Token form, e.g. "S1+V2+4S"; the empty union renders as "0".
  std::string to_string() const;

  friend auto operator<=>(const SurfaceUnion&, const SurfaceUnion&) = default;

 private:
  std::vector<SurfaceKind> components_;
};

SurfaceUnion operator+(const SurfaceUnion& a, const SurfaceUnion& b);

/// Whitespace- and order-insensitive; "0" or blank is the empty union.
/// Throws Errc::parse_error on unknown tokens or bad multiplicities.
SurfaceUnion parse_components(std::string_view text);

struct HomologyBlock {
  std::size_t component = 0;
  std::size_t offset = 0;
  std::size_t length = 0;
};

/// H1(F; Z/2) with intersection form; one block per component (spheres get
/// empty blocks).
struct FirstHomology {
  std::size_t rank = 0;
  Gf2Matrix bilinear;
  Gf2Vector w1_dual;
  std::vector<HomologyBlock> blocks;

  /// w1_dual restricted to one component's block.
  Gf2Vector component_w1(std::size_t component) const;
};

int euler_char(const SurfaceUnion& u);
FirstHomology homology_model(const SurfaceUnion& u);

inline constexpr std::size_t kMaxRefinementRank = 24;

/// All 2^rank refinements of the intersection form. Bit i of the index picks
/// the larger of the two parity-legal values of q(e_i).
class RefinementRange {
 public:
  /// Throws Errc::guard_exceeded above kMaxRefinementRank.
  explicit RefinementRange(const SurfaceUnion& u);
  RefinementRange(FirstHomology h);

  std::uint64_t size() const noexcept { return std::uint64_t{1} << h_.rank; }
  QuadraticSpace at(std::uint64_t index) const;
  const FirstHomology& homology() const noexcept { return h_; }

 private:
  FirstHomology h_;
};

RefinementRange refinements(const SurfaceUnion& u);

/// {brown(s) : s refines H1(u)}; {0} for the empty union.
std::set<int> achievable_brown_set(const SurfaceUnion& u);

/// Basis of the annihilator {x : x∘w1 = 0} in H1(u).
std::vector<Gf2Vector> annihilator_basis(const FirstHomology& h);

/// Brown values of refinements restricted to the annihilator of w1,
/// informative restrictions only.
std::set<int> annihilator_brown_set(const SurfaceUnion& u);

struct MembraneData {
  long long normal_euler = 0;
  long long self_intersections = 0;
  long long euler_char = 0;
};

/// (e + 2i + 2χ) mod 4.
int pontrjagin_square_surface(const MembraneData& m);

struct FixedPointData {
  long long two_sided_circles = 0;
  long long one_sided_circles = 0;
  long long isolated_points = 0;
};

/// Formal sum Σ[l_i] + Σ[n_j] + Σ[P_k] + Σ⟨n_j⟩.
struct KalininClass {
  std::vector<std::string> one_cycles;
  std::vector<std::string> zero_classes;

  long long zero_dim_count() const { return static_cast<long long>(zero_classes.size()); }
  int zero_dim_parity() const { return static_cast<int>(zero_classes.size() % 2); }
  std::string to_string() const;
};

KalininClass kalinin_class(const FixedPointData& f);

/// q at w1 of one component. Throws Errc::precondition for a component with
/// no homology, Errc::dimension_mismatch when q does not live on h.
int w1_value(const QuadraticSpace& q, const FirstHomology& h, std::size_t component);

}  // namespace pvform
