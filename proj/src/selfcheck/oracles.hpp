// SPDX-License-Identifier: Apache-2.0
// Brute-force reference implementations. None of these call the engine
// routine they are used to check.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "pvform/enriques.hpp"
#include "pvform/fundcycle.hpp"
#include "pvform/quadspace.hpp"
#include "pvform/z4.hpp"

namespace pvform::oracle {

/// q(x) = Σ_{i∈x} q(e_i) + 2 Σ_{i<j∈x} e_i∘e_j, with x given by bit mask.
int q_pairwise(const QuadraticSpace& s, std::uint64_t x);

/// x∘y by the bit masks.
bool dot(const QuadraticSpace& s, std::uint64_t x, std::uint64_t y);

/// Brown invariant from Gauss-sum counts computed with q_pairwise; -1 when
/// the sum vanishes.
int brown(const QuadraticSpace& s);

/// Dimension of V⊥ by testing every vector.
std::size_t radical_dim(const QuadraticSpace& s);

/// Every vector u with u∘x = x∘x for all x (by enumeration).
std::vector<std::uint64_t> characteristic_masks(const QuadraticSpace& s);

/// All vectors of span(basis), as masks.
std::vector<std::uint64_t> span_masks(const std::vector<std::uint64_t>& basis);

/// All x with x∘w = 0 for every w in W.
std::vector<std::uint64_t> perp_masks(const QuadraticSpace& s, const std::vector<std::uint64_t>& w);

/// Visits every symmetric bilinear form of size n with every refinement.
void for_each_space(std::size_t n, const std::function<void(const QuadraticSpace&)>& visit);
QuadraticSpace random_space(std::mt19937_64& rng, std::size_t n);

/// Lexicographically smallest parity-legal solution by trying all 4^n
/// vectors, and the set of all solutions.
std::optional<Z4Vector> z4_lexmin(const Z4Matrix& a, const Z4Vector& b, const ParityMask& mask);
std::vector<Z4Vector> z4_all_solutions(const Z4Matrix& a, const Z4Vector& b, const ParityMask& mask);

/// Congruence satisfiability by enumerating refinements of every quoter
/// (both halves nonempty) or of every annihilator (one half empty).
bool ergm(const QuoterPartition& p);

/// Evaluates Σλ[P] + Σκ⁻∂Z⁻ − 2Σμ[Q] − 2Σκ⁺∂Z⁺ straight from the region
/// boundaries and tests it for zero, with λ and κ⁻ odd.
bool cycle_holds(const CurveArrangement& arr, const Z4Vector& x);

/// Random arrangement with at most `max_unknowns` coefficients. With
/// `layout` set, each P circle bounds exactly one minus region and each Q
/// circle exactly two.
CurveArrangement random_arrangement(std::mt19937_64& rng, std::size_t max_unknowns, bool layout);

}  // namespace pvform::oracle
