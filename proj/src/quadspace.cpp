// SPDX-License-Identifier: Apache-2.0
#include "pvform/quadspace.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "pvform/error.hpp"

namespace pvform {

QuadraticSpace::QuadraticSpace(Gf2Matrix bilinear, std::vector<std::uint8_t> q_basis)
    : bilinear_(std::move(bilinear)), q_basis_(std::move(q_basis)) {
  if (bilinear_.rows() != bilinear_.cols() || bilinear_.rows() != q_basis_.size())
    fail(Errc::dimension_mismatch, "quadratic space: form is not " + std::to_string(q_basis_.size()) + "x" +
                                       std::to_string(q_basis_.size()));
  if (!bilinear_.is_symmetric()) fail(Errc::dimension_mismatch, "quadratic space: bilinear form is not symmetric");
  for (std::size_t i = 0; i < q_basis_.size(); ++i) {
    if (q_basis_[i] > 3) fail(Errc::precondition, "quadratic space: q value out of range");
    if ((q_basis_[i] & 1u) != unsigned(bilinear_.get(i, i)))
      fail(Errc::precondition, "quadratic space: q(e_" + std::to_string(i) + ") has the wrong parity");
  }
}

std::uint8_t QuadraticSpace::q(const Gf2Vector& x) const {
  if (x.size() != dim()) fail(Errc::dimension_mismatch, "q_eval: vector length differs from dimension");
  // Fold x = e_{i1} + ... + e_{ik} one generator at a time.
  Gf2Vector partial(dim());
  unsigned value = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!x.get(i)) continue;
    const bool cross = bilinear_.row(i).dot(partial);
    value += q_basis_[i] + (cross ? 2u : 0u);
    partial.set(i, true);
  }
  return static_cast<std::uint8_t>(value & 3u);
}

int BrownValue::residue() const {
  if (!defined()) fail(Errc::not_informative, "Brown invariant is undefined");
  return residue_;
}

std::uint8_t q_eval(const QuadraticSpace& space, const Gf2Vector& x) { return space.q(x); }

RadicalInfo radical_and_informative(const QuadraticSpace& space) {
  RadicalInfo info;
  info.radical_basis = gf2_kernel(space.bilinear());
  // q is additive on V⊥, so vanishing on a basis is vanishing everywhere.
  for (const auto& r : info.radical_basis)
    if (space.q(r) != 0) info.informative = false;
  return info;
}

GaussSumProfile gauss_sum_profile(const QuadraticSpace& space) {
  const std::size_t n = space.dim();
  if (n > kMaxEnumerationDim) fail(Errc::guard_exceeded, "Gauss sum: dimension " + std::to_string(n) + " too large");
  std::vector<std::uint64_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = space.bilinear().row(i).mask();
  const auto qb = space.q_basis();

  // Gray-code walk: toggling e_k changes q by q(e_k) + 2 (x∘e_k).
  GaussSumProfile p;
  std::uint64_t x = 0;
  unsigned value = 0;
  p.counts[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int k = std::countr_zero(step);
    const unsigned cross = std::popcount(x & rows[k]) & 1u;
    value = (value + qb[k] + 2 * cross) & 3u;
    x ^= std::uint64_t{1} << k;
    ++p.counts[value];
  }
  return p;
}

BrownValue brown(const QuadraticSpace& space) {
  const auto p = gauss_sum_profile(space);
  const auto re = p.real_part(), im = p.imag_part();
  if (re == 0 && im == 0) return BrownValue::undefined();
  // The sum is |sum| * e^{iπk/4}; match the direction of (re, im).
  static constexpr std::array<std::array<int, 2>, 8> kDirections{
      {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};
  for (int k = 0; k < 8; ++k) {
    const auto [a, b] = kDirections[k];
    if (a * im - b * re == 0 && a * re + b * im > 0) return BrownValue::of(k);
  }
  fail(Errc::precondition, "Gauss sum is not a multiple of an eighth root of unity");
}

namespace {

Gf2Vector embed(const QuadraticSpace& space, std::size_t i) { return Gf2Vector::unit(space.dim(), i); }

// Basis vectors completing the radical to a basis of V.
std::vector<Gf2Vector> complement_of(const std::vector<Gf2Vector>& sub, std::size_t n) {
  std::vector<Gf2Vector> acc = sub, out;
  std::size_t rank = gf2_rank(acc);
  for (std::size_t i = 0; i < n && rank < n; ++i) {
    acc.push_back(Gf2Vector::unit(n, i));
    const std::size_t r = gf2_rank(acc);
    if (r > rank) {
      out.push_back(Gf2Vector::unit(n, i));
      rank = r;
    } else {
      acc.pop_back();
    }
  }
  return out;
}

}  // namespace

BrownValue brown_by_decomposition(const QuadraticSpace& space) {
  const auto info = radical_and_informative(space);
  if (!info.informative) return BrownValue::undefined();

  // V = V⊥ ⊕ W with W nonsingular; V⊥ contributes nothing.
  std::vector<Gf2Vector> work = complement_of(info.radical_basis, space.dim());
  int total = 0;
  while (!work.empty()) {
    auto odd = std::find_if(work.begin(), work.end(), [&](const Gf2Vector& v) { return space.dot(v, v); });
    if (odd != work.end()) {
      // Split off the line ⟨x⟩ with x∘x = 1: contributes +1 or -1.
      const Gf2Vector x = *odd;
      work.erase(odd);
      total += space.q(x) == 1 ? 1 : -1;
      for (auto& v : work)
        if (space.dot(v, x)) v ^= x;
      continue;
    }
    // Alternating form on the remaining span: split off a hyperbolic plane.
    const Gf2Vector a = work.front();
    work.erase(work.begin());
    auto partner = std::find_if(work.begin(), work.end(), [&](const Gf2Vector& v) { return space.dot(a, v); });
    if (partner == work.end()) fail(Errc::precondition, "decomposition: complement of the radical is singular");
    const Gf2Vector b = *partner;
    work.erase(partner);
    if (space.q(a) == 2 && space.q(b) == 2) total += 4;
    for (auto& v : work) {
      const bool va = space.dot(v, a), vb = space.dot(v, b);
      if (vb) v ^= a;
      if (va) v ^= b;
    }
  }
  return BrownValue::of(total);
}

QuadraticSpace shift(const QuadraticSpace& space, const Gf2Vector& v) {
  if (v.size() != space.dim()) fail(Errc::dimension_mismatch, "shift: vector length differs from dimension");
  std::vector<std::uint8_t> q(space.q_basis().begin(), space.q_basis().end());
  for (std::size_t i = 0; i < q.size(); ++i)
    if (space.dot(v, embed(space, i))) q[i] = static_cast<std::uint8_t>((q[i] + 2) & 3u);
  return QuadraticSpace(space.bilinear(), std::move(q));
}

QuadraticSpace direct_sum(const QuadraticSpace& a, const QuadraticSpace& b) {
  const std::size_t n = a.dim() + b.dim();
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m.set(i, j, a.bilinear().get(i, j));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) m.set(a.dim() + i, a.dim() + j, b.bilinear().get(i, j));
  std::vector<std::uint8_t> q(a.q_basis().begin(), a.q_basis().end());
  q.insert(q.end(), b.q_basis().begin(), b.q_basis().end());
  return QuadraticSpace(std::move(m), std::move(q));
}

QuadraticSpace restrict_to(const QuadraticSpace& space, std::span<const Gf2Vector> basis) {
  const std::size_t m = basis.size();
  Gf2Matrix form(m, m);
  std::vector<std::uint8_t> q(m);
  for (std::size_t i = 0; i < m; ++i) {
    q[i] = space.q(basis[i]);
    for (std::size_t j = 0; j < m; ++j) form.set(i, j, space.dot(basis[i], basis[j]));
  }
  return QuadraticSpace(std::move(form), std::move(q));
}

std::vector<Gf2Vector> characteristic_elements(const QuadraticSpace& space) {
  const std::size_t n = space.dim();
  // u∘e_i = e_i∘e_i for every basis vector suffices: x ↦ x∘x is linear.
  Gf2Vector diag(n);
  for (std::size_t i = 0; i < n; ++i) diag.set(i, space.bilinear().get(i, i));
  auto sol = gf2_solve(space.bilinear(), diag);
  if (!sol) return {};
  if (sol->kernel.size() > kMaxEnumerationDim) fail(Errc::guard_exceeded, "characteristic coset too large");
  std::vector<Gf2Vector> out;
  const std::uint64_t count = std::uint64_t{1} << sol->kernel.size();
  for (std::uint64_t s = 0; s < count; ++s) {
    Gf2Vector u = sol->particular;
    for (std::size_t k = 0; k < sol->kernel.size(); ++k)
      if ((s >> k) & 1u) u ^= sol->kernel[k];
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Gf2Vector>> null_cobordant_witness(const QuadraticSpace& space) {
  const auto info = radical_and_informative(space);
  if (!info.informative) fail(Errc::not_informative, "null_cobordant_witness: space is not informative");
  const std::size_t n = space.dim();
  if (n > kMaxEnumerationDim) fail(Errc::guard_exceeded, "null_cobordant_witness: dimension too large");

  // Any Lagrangian contains V⊥. Grow a q-null self-orthogonal H from V⊥ one
  // vector at a time; H⊥/H keeps the Brown invariant of V, so the walk can
  // only stall early when that invariant is nonzero.
  std::vector<Gf2Vector> h = gf2_span_basis(info.radical_basis, n);
  if ((n - h.size()) % 2 != 0) return std::nullopt;
  const std::size_t target = (n + info.radical_basis.size()) / 2;
  while (h.size() < target) {
    bool extended = false;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n) && !extended; ++m) {
      const Gf2Vector v = Gf2Vector::from_mask(n, m);
      if (space.q(v) != 0) continue;
      if (std::any_of(h.begin(), h.end(), [&](const Gf2Vector& w) { return space.dot(v, w); })) continue;
      if (gf2_in_span(h, v)) continue;
      h.push_back(v);
      extended = true;
    }
    if (!extended) return std::nullopt;
  }
  return h;
}

SubspaceCheck informative_subspace_check(const QuadraticSpace& space, std::span<const Gf2Vector> w) {
  const std::size_t n = space.dim();
  for (const auto& v : w)
    if (v.size() != n) fail(Errc::dimension_mismatch, "subspace vector length differs from dimension");
  const auto basis = gf2_span_basis(w, n);

  // W⊥ = kernel of the map x ↦ (w_k∘x)_k.
  std::vector<Gf2Vector> rows;
  for (const auto& v : basis) rows.push_back(space.bilinear().multiply(v));
  const auto perp = gf2_kernel(Gf2Matrix::from_rows(rows, n));

  SubspaceCheck out;
  out.informative = std::all_of(perp.begin(), perp.end(), [&](const Gf2Vector& x) {
    return gf2_in_span(basis, x) && space.q(x) == 0;
  });
  if (out.informative) out.brown = brown(restrict_to(space, basis));
  return out;
}

std::string to_text(const QuadraticSpace& space) {
  std::ostringstream os;
  os << "dim " << space.dim() << '\n';
  for (std::size_t i = 0; i < space.dim(); ++i) os << space.bilinear().row(i).to_string() << '\n';
  for (std::size_t i = 0; i < space.dim(); ++i) os << (i ? " " : "") << int(space.q_basis()[i]);
  os << '\n';
  return os.str();
}

QuadraticSpace parse_quadratic_space(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  long long n = -1;
  if (!(in >> word >> n) || word != "dim" || n < 0)
    fail(Errc::parse_error, "quadratic space: expected 'dim <n>' header");
  if (std::size_t(n) > 64) fail(Errc::parse_error, "quadratic space: dimension above 64");
  Gf2Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    std::string row;
    if (!(in >> row) || row.size() != std::size_t(n))
      fail(Errc::parse_error, "quadratic space: bilinear row " + std::to_string(i) + " must have " +
                                  std::to_string(n) + " characters");
    for (long long j = 0; j < n; ++j) {
      if (row[j] != '0' && row[j] != '1') fail(Errc::parse_error, "quadratic space: bilinear entries must be 0 or 1");
      m.set(std::size_t(i), std::size_t(j), row[j] == '1');
    }
  }
  std::vector<std::uint8_t> q;
  for (long long i = 0; i < n; ++i) {
    long long v;
    if (!(in >> v)) fail(Errc::parse_error, "quadratic space: expected " + std::to_string(n) + " q values");
    if (v < 0 || v > 3) fail(Errc::parse_error, "quadratic space: q values must be residues 0..3");
    q.push_back(static_cast<std::uint8_t>(v));
  }
  if (in >> word) fail(Errc::parse_error, "quadratic space: trailing input '" + word + "'");
  return QuadraticSpace(std::move(m), std::move(q));
}

}  // namespace pvform
