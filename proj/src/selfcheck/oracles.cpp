// SPDX-License-Identifier: Apache-2.0
#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>

#include "pvform/error.hpp"

namespace pvform::oracle {

bool dot(const QuadraticSpace& s, std::uint64_t x, std::uint64_t y) {
  bool acc = false;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!((x >> i) & 1u)) continue;
    for (std::size_t j = 0; j < s.dim(); ++j)
      if ((y >> j) & 1u) acc ^= s.bilinear().get(i, j);
  }
  return acc;
}

int q_pairwise(const QuadraticSpace& s, std::uint64_t x) {
  int v = 0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!((x >> i) & 1u)) continue;
    v += s.q_basis()[i];
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (((x >> j) & 1u) && s.bilinear().get(i, j)) v += 2;
  }
  return v % 4;
}

namespace {

// k with (re, im) a positive multiple of e^{ikπ/4}; -1 for a zero sum.
int direction(long long re, long long im) {
  if (re == 0 && im == 0) return -1;
  if (im == 0) return re > 0 ? 0 : 4;
  if (re == 0) return im > 0 ? 2 : 6;
  if (re == im) return re > 0 ? 1 : 5;
  if (re == -im) return im > 0 ? 3 : 7;
  fail(Errc::precondition, "oracle: Gauss sum off the eight directions");
}

}  // namespace

int brown(const QuadraticSpace& s) {
  std::array<long long, 4> n{};
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << s.dim()); ++x) ++n[std::size_t(q_pairwise(s, x))];
  return direction(n[0] - n[2], n[1] - n[3]);
}

std::size_t radical_dim(const QuadraticSpace& s) {
  const std::uint64_t all = std::uint64_t{1} << s.dim();
  std::size_t count = 0;
  for (std::uint64_t x = 0; x < all; ++x) {
    bool radical = true;
    for (std::size_t i = 0; i < s.dim() && radical; ++i) radical = !dot(s, x, std::uint64_t{1} << i);
    count += radical;
  }
  return std::size_t(std::countr_zero(count));
}

std::vector<std::uint64_t> characteristic_masks(const QuadraticSpace& s) {
  std::vector<std::uint64_t> out;
  const std::uint64_t all = std::uint64_t{1} << s.dim();
  for (std::uint64_t u = 0; u < all; ++u) {
    bool ok = true;
    for (std::uint64_t x = 0; x < all && ok; ++x) ok = dot(s, u, x) == dot(s, x, x);
    if (ok) out.push_back(u);
  }
  return out;
}

std::vector<std::uint64_t> span_masks(const std::vector<std::uint64_t>& basis) {
  std::vector<std::uint64_t> out{0};
  for (auto b : basis) {
    if (std::find(out.begin(), out.end(), b) != out.end()) continue;
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> perp_masks(const QuadraticSpace& s, const std::vector<std::uint64_t>& w) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << s.dim()); ++x)
    if (std::none_of(w.begin(), w.end(), [&](std::uint64_t y) { return dot(s, x, y); })) out.push_back(x);
  return out;
}

namespace {

QuadraticSpace build(std::size_t n, std::uint64_t upper, std::uint64_t lift) {
  Gf2Matrix m(n, n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++bit) {
      m.set(i, j, (upper >> bit) & 1u);
      m.set(j, i, (upper >> bit) & 1u);
    }
  std::vector<std::uint8_t> q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = std::uint8_t((m.get(i, i) ? 1 : 0) + 2 * ((lift >> i) & 1u));
  return QuadraticSpace(std::move(m), std::move(q));
}

}  // namespace

void for_each_space(std::size_t n, const std::function<void(const QuadraticSpace&)>& visit) {
  const std::uint64_t forms = std::uint64_t{1} << (n * (n + 1) / 2);
  for (std::uint64_t f = 0; f < forms; ++f)
    for (std::uint64_t l = 0; l < (std::uint64_t{1} << n); ++l) visit(build(n, f, l));
}

QuadraticSpace random_space(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t forms = std::uint64_t{1} << (n * (n + 1) / 2);
  return build(n, rng() % forms, rng() % (std::uint64_t{1} << n));
}

namespace {

template <typename Visit>
void each_solution(const Z4Matrix& a, const Z4Vector& b, const ParityMask& mask, Visit visit) {
  const std::size_t n = a.cols();
  Z4Vector x(n, 0);
  // Odometer in lexicographic order, most significant entry first.
  while (true) {
    bool legal = true;
    for (std::size_t i = 0; i < n && legal; ++i) legal = mask[i] == Parity::Free || x[i] % 2 == 1;
    if (legal && a.multiply(x) == b && !visit(x)) return;
    std::size_t i = n;
    while (i > 0 && x[i - 1] == 3) x[--i] = 0;
    if (i == 0) return;
    ++x[i - 1];
  }
}

}  // namespace

std::optional<Z4Vector> z4_lexmin(const Z4Matrix& a, const Z4Vector& b, const ParityMask& mask) {
  std::optional<Z4Vector> out;
  each_solution(a, b, mask, [&](const Z4Vector& x) {
    out = x;
    return false;
  });
  return out;
}

std::vector<Z4Vector> z4_all_solutions(const Z4Matrix& a, const Z4Vector& b, const ParityMask& mask) {
  std::vector<Z4Vector> out;
  each_solution(a, b, mask, [&](const Z4Vector& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

namespace {

int m8(int v) { return ((v % 8) + 8) % 8; }

// Brown values over every refinement of H1(quoter). With `annihilator` set,
// each refinement is summed over {x : x∘w1 = 0} only.
std::set<int> compute_quoter_browns(const SurfaceUnion& quoter, bool annihilator) {
  if (quoter.empty()) return {0};
  const FirstHomology h = homology_model(quoter);
  if (h.rank == 0) return {0};
  const RefinementRange range(h);
  const std::uint64_t w1 = h.w1_dual.mask();
  std::set<int> out;
  for (std::uint64_t r = 0; r < range.size(); ++r) {
    const QuadraticSpace s = range.at(r);
    std::array<long long, 4> n{};
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << h.rank); ++x)
      if (!annihilator || !dot(s, x, w1)) ++n[std::size_t(q_pairwise(s, x))];
    const int b = direction(n[0] - n[2], n[1] - n[3]);
    if (b >= 0) out.insert(b);
  }
  return out;
}

std::set<int> quoter_browns(const SurfaceUnion& quoter, bool annihilator) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, bool>, std::set<int>> memo;
  const auto key = std::make_pair(quoter.to_string(), annihilator);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  auto out = compute_quoter_browns(quoter, annihilator);
  std::lock_guard lock(mutex);
  memo.emplace(key, out);
  return out;
}

}  // namespace

bool ergm(const QuoterPartition& p) {
  const int chi = euler_char(p.components());
  if (m8(chi) != 0) fail(Errc::precondition, "oracle: χ not divisible by 8");
  const int c4 = chi / 4;
  const auto& q = p.quoters;
  if (p.half_empty(0) || p.half_empty(1)) {
    const std::size_t h = p.half_empty(0) ? 1 : 0;
    for (std::size_t i = 0; i < 2; ++i) {
      bool hit = false;
      for (int b : quoter_browns(q[h][i], true)) hit = hit || m8(euler_char(q[h][i]) - 2 - c4 - b) == 0;
      if (!hit) return false;
    }
    return true;
  }
  const std::array<std::set<int>, 4> sets{quoter_browns(q[0][0], false), quoter_browns(q[0][1], false),
                                          quoter_browns(q[1][0], false), quoter_browns(q[1][1], false)};
  const int s[2] = {1, -1};
  for (int b0 : sets[0])
    for (int b1 : sets[1])
      for (int g0 : sets[2])
        for (int g1 : sets[3]) {
          const int beta[2] = {b0, b1}, gamma[2] = {g0, g1};
          bool ok = true;
          for (int i = 0; i < 2 && ok; ++i)
            for (int j = 0; j < 2 && ok; ++j)
              ok = m8(euler_char(q[0][i]) + euler_char(q[1][j]) - 2 - c4 - s[j] * beta[i] - s[i] * gamma[j]) == 0;
          if (ok) return true;
        }
  return false;
}

bool cycle_holds(const CurveArrangement& arr, const Z4Vector& x) {
  const std::size_t p = arr.p_circles.size(), zm = arr.minus_regions.size(), q = arr.q_circles.size();
  if (x.size() != arr.unknown_count()) return false;
  std::vector<int> total(arr.circle_count(), 0);
  for (std::size_t i = 0; i < p; ++i) {
    if (x[i] % 2 == 0) return false;
    total[i] += x[i];
  }
  for (std::size_t k = 0; k < zm; ++k) {
    if (x[p + k] % 2 == 0) return false;
    for (const auto& [c, coef] : arr.minus_regions[k].boundary) total[c] += x[p + k] * coef;
  }
  for (std::size_t j = 0; j < q; ++j) total[p + j] -= 2 * x[p + zm + j];
  for (std::size_t l = 0; l < arr.plus_regions.size(); ++l)
    for (const auto& [c, coef] : arr.plus_regions[l].boundary) total[c] -= 2 * x[p + zm + q + l] * coef;
  return std::all_of(total.begin(), total.end(), [](int t) { return t % 4 == 0; });
}

CurveArrangement random_arrangement(std::mt19937_64& rng, std::size_t max_unknowns, bool layout) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return lo + std::size_t(rng() % (hi - lo + 1)); };
  CurveArrangement arr;
  std::size_t p, zm, q, zp;
  do {
    p = pick(0, 3);
    zm = pick(1, 3);
    q = pick(0, 3);
    zp = pick(0, 2);
    if (layout && q > 0 && zm < 2) zm = 2;
  } while (p + zm + q + zp > max_unknowns || p + q == 0);

  for (std::size_t i = 0; i < p; ++i) arr.p_circles.push_back("P" + std::to_string(i + 1));
  for (std::size_t j = 0; j < q; ++j) arr.q_circles.push_back("Q" + std::to_string(j + 1));
  const std::size_t n = p + q;
  auto sign = [&] { return std::uint8_t(rng() % 2 ? 1 : 3); };

  for (std::size_t k = 0; k < zm; ++k) {
    Region r;
    r.label = "A" + std::to_string(k + 1);
    r.minus = true;
    r.chi = static_cast<long long>(pick(0, 4)) - 2;
    arr.minus_regions.push_back(std::move(r));
  }
  if (layout) {
    for (std::size_t i = 0; i < p; ++i) arr.minus_regions[pick(0, zm - 1)].boundary.push_back({i, sign()});
    for (std::size_t j = 0; j < q; ++j) {
      const std::size_t a = pick(0, zm - 1);
      std::size_t b = pick(0, zm - 2);
      if (b >= a) ++b;
      arr.minus_regions[a].boundary.push_back({p + j, sign()});
      arr.minus_regions[b].boundary.push_back({p + j, sign()});
    }
  } else {
    for (auto& r : arr.minus_regions)
      for (std::size_t c = 0; c < n; ++c)
        if (rng() % 2) r.boundary.push_back({c, sign()});
  }
  for (std::size_t l = 0; l < zp; ++l) {
    Region r;
    r.label = "B" + std::to_string(l + 1);
    r.minus = false;
    for (std::size_t c = 0; c < n; ++c)
      if (rng() % 2) r.boundary.push_back({c, sign()});
    arr.plus_regions.push_back(std::move(r));
  }
  for (auto* list : {&arr.minus_regions, &arr.plus_regions})
    for (auto& r : *list) std::sort(r.boundary.begin(), r.boundary.end());
  return arr;
}

}  // namespace pvform::oracle
