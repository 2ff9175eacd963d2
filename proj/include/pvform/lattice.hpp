// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pvform/quadspace.hpp"

namespace pvform {

using IntMatrix = std::vector<std::vector<long long>>;

/// Symmetric integral Gram matrix with determinant ±1.
class UnimodularLattice {
 public:
  /// Throws Errc::dimension_mismatch for a ragged or non-symmetric matrix and
  /// Errc::precondition when the determinant is not ±1.
  explicit UnimodularLattice(IntMatrix gram, std::string name = {});

  /// Negative definite, signature -8.
  static UnimodularLattice e8();
  static UnimodularLattice hyperbolic_plane();
  static UnimodularLattice plus_one();
  static UnimodularLattice minus_one();

  std::size_t rank() const noexcept { return gram_.size(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const std::string& name() const noexcept { return name_; }

 private:
  IntMatrix gram_;
  std::string name_;
};

UnimodularLattice direct_sum(const UnimodularLattice& a, const UnimodularLattice& b);

/// Exact signature by rational congruence diagonalization.
int signature(const UnimodularLattice& lattice);

/// V = L ⊗ Z/2 with q(x̄) = x² mod 4.
QuadraticSpace reduce_mod2(const UnimodularLattice& lattice);

struct BrownSignatureCheck {
  int signature_mod8 = 0;
  BrownValue brown = BrownValue::undefined();
  bool equal = false;
};

BrownSignatureCheck brown_signature_check(const UnimodularLattice& lattice);

/// Accepts `rank n` followed by n integer rows, or a keyword: `E8`, `U`,
/// `+1`, `-1`, or `sum:` followed by comma-separated keywords, each with an
/// optional `k*` repeat prefix (e.g. `sum:E8,U,3*+1`).
UnimodularLattice parse_lattice(std::string_view text);

}  // namespace pvform
