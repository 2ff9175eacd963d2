// SPDX-License-Identifier: Apache-2.0
#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "pvform/enriques.hpp"
#include "pvform/error.hpp"
#include "pvform/fundcycle.hpp"
#include "pvform/lattice.hpp"
#include "pvform/quadspace.hpp"
#include "pvform/surface.hpp"
#include "pvform/tables.hpp"

namespace pvform::selfcheck {

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

// Collects the first few failures with context; counts every check.
class Ledger {
 public:
  void check(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  template <typename F>
  void check_lazy(bool cond, F describe) {
    if (cond) {
      ++checks_;
      return;
    }
    check(false, describe());
  }
  std::size_t checks() const { return checks_; }
  Verdict verdict(const std::string& summary) const {
    std::string detail = summary + ", " + std::to_string(checks_) + " checks";
    if (failures_) {
      detail += ", " + std::to_string(failures_) + " failed";
      for (const auto& n : notes_) detail += "\n      " + n;
    }
    return {failures_ == 0, detail};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> notes_;
};

int m8(long long v) { return int(((v % 8) + 8) % 8); }

Gf2Vector vec(std::size_t n, std::uint64_t mask) { return Gf2Vector::from_mask(n, mask); }

std::string show(const QuadraticSpace& s) {
  std::string t = to_text(s);
  std::replace(t.begin(), t.end(), '\n', ' ');
  return t;
}

// Every subspace of GF(2)^n, as an independent basis of masks.
std::vector<std::vector<std::uint64_t>> all_subspaces(std::size_t n) {
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::vector<std::uint64_t>> out;
  const std::uint64_t all = std::uint64_t{1} << n;
  std::vector<std::uint64_t> pick(n, 0);
  while (true) {
    std::vector<std::uint64_t> basis;
    for (auto v : pick) {
      const auto span = oracle::span_masks(basis);
      if (!std::binary_search(span.begin(), span.end(), v)) basis.push_back(v);
    }
    if (seen.insert(oracle::span_masks(basis)).second) out.push_back(basis);
    std::size_t i = 0;
    while (i < n && pick[i] == all - 1) pick[i++] = 0;
    if (i == n) break;
    ++pick[i];
  }
  return out;
}

std::vector<std::uint64_t> random_subspace(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> basis;
  const std::size_t k = rng() % (n + 1);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t v = rng() % (std::uint64_t{1} << n);
    const auto span = oracle::span_masks(basis);
    if (!std::binary_search(span.begin(), span.end(), v)) basis.push_back(v);
  }
  return basis;
}

// The six quadratic-space laws on one space. `subspaces` lists the W tested
// against the informative-subspace rule.
void check_laws(Ledger& L, const QuadraticSpace& s, const std::vector<std::vector<std::uint64_t>>& subspaces,
                const QuadraticSpace& partner) {
  const std::size_t n = s.dim();
  const std::uint64_t all = std::uint64_t{1} << n;
  const BrownValue b = brown(s);
  const int ob = oracle::brown(s);

  std::vector<std::uint64_t> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(std::uint64_t{1} << i);
  const auto radical = oracle::perp_masks(s, units);
  const bool informative =
      std::all_of(radical.begin(), radical.end(), [&](std::uint64_t r) { return oracle::q_pairwise(s, r) == 0; });
  const std::size_t rad = oracle::radical_dim(s);

  L.check_lazy(b.defined() == informative && (b.defined() ? b.residue() == ob : ob < 0),
               [&] { return "Gauss-sum brown " + b.to_string() + " vs oracle " + std::to_string(ob) + " on " + show(s); });

  // Magnitude of the Gauss sum.
  const auto g = gauss_sum_profile(s);
  const std::int64_t mag = g.real_part() * g.real_part() + g.imag_part() * g.imag_part();
  L.check_lazy(informative ? mag == (std::int64_t{1} << (n + rad)) : mag == 0,
               [&] { return "|Gauss sum|^2 = " + std::to_string(mag) + " on " + show(s); });

  // Br(1): Br ≡ rank(V/V⊥) mod 2.
  if (b.defined())
    L.check_lazy(b.residue() % 2 == int((n - rad) % 2), [&] { return "parity law fails on " + show(s); });

  // Br(2): Br ≡ q(u) mod 4 for every characteristic u.
  const auto chars = characteristic_elements(s);
  const auto ochars = oracle::characteristic_masks(s);
  std::vector<std::uint64_t> masks;
  for (const auto& u : chars) masks.push_back(u.mask());
  std::sort(masks.begin(), masks.end());
  L.check_lazy(masks == ochars, [&] { return "characteristic set differs on " + show(s); });
  if (b.defined())
    for (auto u : ochars)
      L.check_lazy(b.residue() % 4 == oracle::q_pairwise(s, u),
                   [&] { return "Br != q(u) mod 4 for u=" + vec(n, u).to_string() + " on " + show(s); });

  // Br(3): Br(q + v) = Br(q) − 2q(v).
  for (std::uint64_t v = 0; v < all; ++v) {
    const BrownValue shifted = brown(shift(s, vec(n, v)));
    const bool ok = b.defined() ? shifted == BrownValue::of(b.residue() - 2 * oracle::q_pairwise(s, v))
                                : !shifted.defined();
    L.check_lazy(ok, [&] { return "shift law fails for v=" + vec(n, v).to_string() + " on " + show(s); });
  }

  // Br(4): a null-cobordant Lagrangian exists exactly when Br = 0.
  if (b.defined()) {
    const auto w = null_cobordant_witness(s);
    L.check_lazy(w.has_value() == (b.residue() == 0),
                 [&] { return "witness existence disagrees with Br=" + b.to_string() + " on " + show(s); });
    if (w) {
      std::vector<std::uint64_t> basis;
      for (const auto& x : *w) basis.push_back(x.mask());
      const auto h = oracle::span_masks(basis);
      const auto hp = oracle::perp_masks(s, basis);
      const bool null = std::all_of(h.begin(), h.end(), [&](std::uint64_t x) { return oracle::q_pairwise(s, x) == 0; });
      L.check_lazy(h == hp && null, [&] { return "witness is not a q-null Lagrangian on " + show(s); });
    }
  } else {
    bool threw = false;
    try {
      (void)null_cobordant_witness(s);
    } catch (const Error& e) {
      threw = e.code() == Errc::not_informative;
    }
    L.check_lazy(threw, [&] { return "witness search accepted a non-informative space " + show(s); });
  }

  // Additivity.
  const BrownValue bp = brown(partner);
  const BrownValue sum = brown(direct_sum(s, partner));
  const bool add_ok = b.defined() && bp.defined() ? sum == BrownValue::of(b.residue() + bp.residue()) : !sum.defined();
  L.check_lazy(add_ok, [&] { return "additivity fails on " + show(s) + " + " + show(partner); });

  // Informative subspaces carry the Brown invariant of the whole space.
  for (const auto& wb : subspaces) {
    const auto wspan = oracle::span_masks(wb);
    const auto wperp = oracle::perp_masks(s, wb);
    const bool expect = std::all_of(wperp.begin(), wperp.end(), [&](std::uint64_t x) {
      return std::binary_search(wspan.begin(), wspan.end(), x) && oracle::q_pairwise(s, x) == 0;
    });
    std::vector<Gf2Vector> w;
    for (auto x : wb) w.push_back(vec(n, x));
    const auto got = informative_subspace_check(s, w);
    L.check_lazy(got.informative == expect, [&] { return "informative-subspace flag wrong on " + show(s); });
    if (expect) L.check_lazy(got.brown == b, [&] { return "Br(W) != Br(V) on " + show(s); });
  }
}

Verdict criterion_laws() {
  Ledger L;
  std::mt19937_64 rng(20240601);
  std::size_t spaces = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto subs = all_subspaces(n);
    oracle::for_each_space(n, [&](const QuadraticSpace& s) {
      check_laws(L, s, subs, oracle::random_space(rng, rng() % 4));
      ++spaces;
    });
  }
  const std::size_t exhaustive = spaces;
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 5 + rng() % 4;
    std::vector<std::vector<std::uint64_t>> subs;
    for (int j = 0; j < 4; ++j) subs.push_back(random_subspace(rng, n));
    check_laws(L, oracle::random_space(rng, n), subs, oracle::random_space(rng, rng() % 4));
    ++spaces;
  }
  return L.verdict(std::to_string(exhaustive) + " exhaustive + " + std::to_string(spaces - exhaustive) + " random spaces");
}

Verdict criterion_dual_path() {
  Ledger L;
  std::size_t spaces = 0;
  for (std::size_t n = 0; n <= 5; ++n)
    oracle::for_each_space(n, [&](const QuadraticSpace& s) {
      const auto a = brown(s), b = brown_by_decomposition(s);
      L.check_lazy(a == b, [&] { return "Gauss " + a.to_string() + " vs decomposition " + b.to_string() + " on " + show(s); });
      ++spaces;
    });
  return L.verdict(std::to_string(spaces) + " spaces of dim <= 5");
}

// P G P^T for a few random elementary P; keeps unimodularity and signature.
UnimodularLattice scramble(const UnimodularLattice& l, std::mt19937_64& rng) {
  IntMatrix g = l.gram();
  const std::size_t n = g.size();
  if (n < 2) return l;
  for (int step = 0; step < 3; ++step) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % (n - 1);
    if (j >= i) ++j;
    const long long c = rng() % 2 ? 1 : -1;
    // Row i += c·row j, then column i += c·column j.
    for (std::size_t k = 0; k < n; ++k) g[i][k] += c * g[j][k];
    for (std::size_t k = 0; k < n; ++k) g[k][i] += c * g[k][j];
  }
  return UnimodularLattice(std::move(g), l.name() + " (scrambled)");
}

Verdict criterion_lattices() {
  Ledger L;
  std::mt19937_64 rng(7);
  std::size_t lattices = 0;
  auto run = [&](const UnimodularLattice& l, int expected_signature) {
    const auto c = brown_signature_check(l);
    const int sig = signature(l);
    L.check_lazy(c.equal && sig == expected_signature && c.signature_mod8 == m8(expected_signature), [&] {
      return l.name() + ": signature " + std::to_string(sig) + " (expected " + std::to_string(expected_signature) +
             "), Brown " + c.brown.to_string();
    });
    ++lattices;
  };
  const auto e8 = UnimodularLattice::e8(), u = UnimodularLattice::hyperbolic_plane(),
             plus = UnimodularLattice::plus_one(), minus = UnimodularLattice::minus_one();
  run(e8, -8);
  run(u, 0);
  for (int k = 1; k <= 6; ++k) {
    UnimodularLattice p(IntMatrix{}, ""), m(IntMatrix{}, "");
    for (int i = 0; i < k; ++i) {
      p = direct_sum(p, plus);
      m = direct_sum(m, minus);
    }
    run(p, k);
    run(m, -k);
  }
  // Every block multiset of rank <= 10, in a shuffled order and again after
  // a random change of basis.
  for (int e = 0; e <= 1; ++e)
    for (int nu = 0; nu <= 5; ++nu)
      for (int a = 0; a <= 10; ++a)
        for (int b = 0; b <= 10; ++b) {
          const int rank = 8 * e + 2 * nu + a + b;
          if (rank == 0 || rank > 10) continue;
          std::vector<const UnimodularLattice*> blocks;
          blocks.insert(blocks.end(), std::size_t(e), &e8);
          blocks.insert(blocks.end(), std::size_t(nu), &u);
          blocks.insert(blocks.end(), std::size_t(a), &plus);
          blocks.insert(blocks.end(), std::size_t(b), &minus);
          std::shuffle(blocks.begin(), blocks.end(), rng);
          UnimodularLattice sum(IntMatrix{}, "");
          for (const auto* x : blocks) sum = direct_sum(sum, *x);
          const int sig = -8 * e + a - b;
          run(sum, sig);
          run(scramble(sum, rng), sig);
        }
  return L.verdict(std::to_string(lattices) + " lattices");
}

Verdict criterion_table(const std::string& label, const std::string& data_dir) {
  const auto table = load_reference_table(label, data_dir);
  const auto report = table_report(table);
  Verdict v{report.match, std::to_string(report.matched) + "/" + std::to_string(report.expected) + " rows"};
  if (!report.match) {
    std::istringstream in(report.text);
    std::string line;
    while (std::getline(in, line))
      if (line.find("missing") != std::string::npos || line.find("extra") != std::string::npos ||
          line.rfind("FAIL", 0) == 0)
        v.detail += "\n      " + line;
  }
  return v;
}

Verdict criterion_empty_quoter() {
  Ledger L;
  std::vector<SurfaceKind> singles{SurfaceKind::sphere()};
  for (int p = 1; p <= 7; ++p) singles.push_back(SurfaceKind::orientable(p));
  for (int p = 1; p <= 14; ++p) singles.push_back(SurfaceKind::nonorientable(p));
  std::size_t survivors = 0;
  for (const auto& k : singles) {
    const SurfaceUnion u({k});
    const auto e = empty_quoter_chi(u);
    L.check_lazy(e.admissible == std::set<int>{-8}, [&] { return "admissible set wrong for " + u.to_string(); });
    L.check(e.consistent == (k.euler_char() == -8), "consistency flag wrong for " + u.to_string());
    if (!chi_congruence(u)) continue;
    // Every separation of one component has an empty quoter.
    const auto rows = enumerate_separations(u);
    bool oracle_any = false;
    for (const auto& split : submultiset_splits(u)) {
      QuoterPartition p;
      p.quoters[0] = split;
      oracle_any = oracle_any || oracle::ergm(p);
    }
    L.check_lazy(rows.empty() == (k.euler_char() != -8) && oracle_any == !rows.empty(),
                 [&] { return u.to_string() + ": " + std::to_string(rows.size()) + " rows"; });
    survivors += !rows.empty();
  }
  return L.verdict(std::to_string(singles.size()) + " single components, " + std::to_string(survivors) +
                   " with rows, all at chi=-8");
}

std::vector<Z4Vector> z4_span(const std::vector<Z4Vector>& gens, std::size_t n) {
  std::set<Z4Vector> out{Z4Vector(n, 0)};
  for (const auto& g : gens) {
    std::set<Z4Vector> next;
    for (const auto& v : out)
      for (int c = 0; c < 4; ++c) {
        Z4Vector w = v;
        for (std::size_t i = 0; i < n; ++i) w[i] = z4(w[i] + c * g[i]);
        next.insert(w);
      }
    out = std::move(next);
  }
  return {out.begin(), out.end()};
}

// Solver, membership and ambiguity span against the 4^n search on one
// arrangement. Returns whether a cycle exists.
bool compare_fundcycle(Ledger& L, const CurveArrangement& arr, const std::string& tag) {
  const std::size_t n = arr.unknown_count();
  std::vector<Z4Vector> solutions;
  Z4Vector x(n, 0);
  // Most significant entry first, so solutions come out in lexicographic order.
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * n)); ++code) {
    for (std::size_t i = 0; i < n; ++i) x[n - 1 - i] = std::uint8_t((code >> (2 * i)) & 3u);
    if (oracle::cycle_holds(arr, x)) solutions.push_back(x);
  }
  const auto got = solve_fundamental_cycle(arr);
  L.check_lazy(got.has_value() == !solutions.empty(), [&] { return tag + ": feasibility disagrees"; });
  if (has_type_one_layout(arr))
    L.check_lazy(subgroup_membership(arr) == !solutions.empty(),
                 [&] { return tag + ": membership disagrees with feasibility"; });
  if (!got || solutions.empty()) return false;
  L.check_lazy(got->flatten() == solutions.front(), [&] {
    return tag + ": solver " + z4_to_string(got->flatten()) + ", lexmin " + z4_to_string(solutions.front());
  });
  const auto amb = ambiguity_generators(arr);
  std::vector<Z4Vector> shifted;
  for (const auto& d : z4_span(amb.generators, n)) {
    Z4Vector y = amb.particular.flatten();
    for (std::size_t i = 0; i < n; ++i) y[i] = z4(y[i] + d[i]);
    shifted.push_back(y);
  }
  std::sort(shifted.begin(), shifted.end());
  L.check_lazy(shifted == solutions, [&] { return tag + ": solution set != particular + span of generators"; });
  return true;
}

Verdict criterion_fundcycle() {
  Ledger L;
  std::mt19937_64 rng(314159);
  std::size_t feasible = 0, layouts = 0;
  for (int t = 0; t < 150; ++t)
    feasible += compare_fundcycle(L, oracle::random_arrangement(rng, 8, false), "random trial " + std::to_string(t));
  for (int t = 0; t < 100; ++t) {
    const auto arr = oracle::random_arrangement(rng, 8, true);
    L.check(has_type_one_layout(arr), "generator produced a non-layout arrangement");
    layouts += has_type_one_layout(arr);
    feasible += compare_fundcycle(L, arr, "layout trial " + std::to_string(t));
  }

  // The parity-constrained solver on bare random systems.
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 6;
    Z4Matrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a.set(i, j, static_cast<long long>(rng() % 4));
    Z4Vector b(rows);
    for (auto& e : b) e = std::uint8_t(rng() % 4);
    ParityMask mask(cols);
    for (auto& m : mask) m = rng() % 3 == 0 ? Parity::Odd : Parity::Free;
    L.check(z4_solve_parity(a, b, mask) == oracle::z4_lexmin(a, b, mask), "z4 solver disagrees with 4^n search");
  }
  return L.verdict("250 arrangements (" + std::to_string(feasible) + " feasible, " + std::to_string(layouts) +
                   " with the one/two minus-region layout) + 200 bare systems");
}

Verdict criterion_formulas() {
  Ledger L;
  auto mod4 = [](long long v) { return int(((v % 4) + 4) % 4); };
  for (long long e = -4; e <= 4; ++e)
    for (long long i = -4; i <= 4; ++i)
      for (long long chi = -4; chi <= 4; ++chi)
        L.check(pontrjagin_square_surface({e, i, chi}) == mod4(e + 2 * i + 2 * chi), "membrane formula");
  for (int dis = 0; dis <= 1; ++dis)
    for (long long q = 0; q <= 4; ++q)
      for (long long plus = 0; plus <= 4; ++plus)
        for (long long pq = 0; pq <= 4; ++pq)
          L.check(loop_form_value({dis == 1, q, plus, pq}) == mod4(2 * dis + 2 * q + 2 * plus + pq), "loop formula");
  for (long long a = -4; a <= 4; ++a)
    for (long long b = -4; b <= 4; ++b) {
      L.check(boundary_value(BoundaryKind::Tangency, a, b) == 1, "tangency value");
      L.check(boundary_value(BoundaryKind::MinusRegion, a, b) == mod4(2 * a), "minus-region value");
      L.check(boundary_value(BoundaryKind::Lk, a, b) == mod4(a - b), "linking value");
      if (a % 2 == 0) {
        L.check(boundary_value(BoundaryKind::PComponent, a, b) == mod4(a / 2), "P-component value");
      } else {
        bool threw = false;
        try {
          (void)boundary_value(BoundaryKind::PComponent, a, b);
        } catch (const Error& err) {
          threw = err.code() == Errc::precondition;
        }
        L.check(threw, "odd [P]^2 accepted");
      }
    }
  return L.verdict("grid |values| <= 4");
}

const char* const kNames[kCriterionCount] = {
    "quadratic-space law suite",
    "dual-path Brown equivalence",
    "lattice Brown = signature mod 8",
    "table 4V1+2S reproduction",
    "table parabolic reproduction",
    "table hyperbolic uniqueness",
    "table other satisfiability",
    "empty-quoter constraint",
    "fundamental-cycle solver vs oracle",
    "formula evaluators",
};

}  // namespace

CriterionResult run_criterion(int id, const std::string& data_dir) {
  if (id < 1 || id > kCriterionCount) fail(Errc::precondition, "no criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.name = kNames[id - 1];
  const auto start = std::chrono::steady_clock::now();
  try {
    Verdict v;
    switch (id) {
      case 1: v = criterion_laws(); break;
      case 2: v = criterion_dual_path(); break;
      case 3: v = criterion_lattices(); break;
      case 4: v = criterion_table("elliptic-4V1-2S", data_dir); break;
      case 5: v = criterion_table("parabolic", data_dir); break;
      case 6: v = criterion_table("hyperbolic", data_dir); break;
      case 7: v = criterion_table("other", data_dir); break;
      case 8: v = criterion_empty_quoter(); break;
      case 9: v = criterion_fundcycle(); break;
      case 10: v = criterion_formulas(); break;
    }
    r.outcome = v.ok ? Outcome::pass : Outcome::fail;
    r.detail = v.detail;
  } catch (const Error& e) {
    r.outcome = e.code() == Errc::not_found ? Outcome::missing_reference : Outcome::fail;
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.outcome = Outcome::fail;
    r.detail = std::string("unexpected error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all(const std::string& data_dir) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, data_dir));
  return out;
}

std::string format_result(const CriterionResult& r) {
  const char* tag = r.outcome == Outcome::pass ? "PASS" : r.outcome == Outcome::fail ? "FAIL" : "MISSING";
  char head[160];
  std::snprintf(head, sizeof head, "%-7s %2d  %-36s (%.2f s)  ", tag, r.id, r.name.c_str(), r.seconds);
  return head + r.detail;
}

}  // namespace pvform::selfcheck
