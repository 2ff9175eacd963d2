// SPDX-License-Identifier: Apache-2.0
#include "pvform/enriques.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <tuple>

#include "pvform/error.hpp"

namespace pvform {

namespace {

int mod8(long long v) { return int(((v % 8) + 8) % 8); }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string render_half(const std::array<SurfaceUnion, 2>& half) {
  if (half[0].empty() && half[1].empty()) return "{}";
  auto quoter = [](const SurfaceUnion& q) { return q.empty() ? std::string("()") : "(" + q.to_string() + ")"; };
  return "{" + quoter(half[0]) + "+" + quoter(half[1]) + "}";
}

auto quoter_key(const SurfaceUnion& q) { return std::make_tuple(q.empty(), -euler_char(q), q.to_string()); }

}  // namespace

QuoterPartition QuoterPartition::canonical() const {
  QuoterPartition out = *this;
  for (auto& half : out.quoters)
    if (quoter_key(half[1]) < quoter_key(half[0])) std::swap(half[0], half[1]);
  const bool e0 = out.half_empty(0), e1 = out.half_empty(1);
  if ((e0 && !e1) || (e0 == e1 && render_half(out.quoters[1]) < render_half(out.quoters[0])))
    std::swap(out.quoters[0], out.quoters[1]);
  return out;
}

std::string QuoterPartition::to_string() const { return render_half(quoters[0]) + "|" + render_half(quoters[1]); }

std::string Pw1::to_string() const {
  if (absent) return "-";
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string ClassificationRow::to_string() const {
  std::string out = partition.to_string() + "  pw1=" + pw1.to_string();
  if (!flags.empty()) out += "  [" + flags + "]";
  return out;
}

namespace {

std::array<SurfaceUnion, 2> parse_half(const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    fail(Errc::parse_error, "half must be enclosed in braces: '" + text + "'");
  const std::string body = text.substr(1, text.size() - 2);
  if (body.empty()) return {};
  // "(A)+(B)"; A and B contain '+' but never parentheses.
  const auto close_a = body.find(')');
  if (body.front() != '(' || close_a == std::string::npos || body.compare(close_a, 3, ")+(") != 0 ||
      body.back() != ')')
    fail(Errc::parse_error, "half must read {(A)+(B)}: '" + text + "'");
  const std::string a = body.substr(1, close_a - 1);
  const std::string b = body.substr(close_a + 3, body.size() - close_a - 4);
  if (b.find_first_of("()") != std::string::npos) fail(Errc::parse_error, "half must read {(A)+(B)}: '" + text + "'");
  return {parse_components(a), parse_components(b)};
}

}  // namespace

QuoterPartition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const auto bar = s.find('|');
  if (bar == std::string::npos || s.find('|', bar + 1) != std::string::npos)
    fail(Errc::parse_error, "partition needs exactly one '|': '" + s + "'");
  QuoterPartition p;
  p.quoters[0] = parse_half(s.substr(0, bar));
  p.quoters[1] = parse_half(s.substr(bar + 1));
  return p;
}

ClassificationRow parse_row(std::string_view line) {
  const std::string s = trim(line);
  const auto at = s.find("pw1=");
  if (at == std::string::npos) fail(Errc::parse_error, "row lacks a pw1= field: '" + s + "'");
  ClassificationRow row;
  row.partition = parse_partition(s.substr(0, at));

  std::string rest = s.substr(at + 4);
  const auto space = rest.find_first_of(" \t");
  const std::string value = rest.substr(0, space);
  rest = space == std::string::npos ? std::string{} : trim(rest.substr(space));
  if (value == "-") {
    row.pw1 = Pw1::none();
  } else if (value == "0" || value == "2" || value == "0,2") {
    std::set<int> v;
    for (char c : value)
      if (c != ',') v.insert(c - '0');
    row.pw1 = Pw1::of(std::move(v));
  } else {
    fail(Errc::parse_error, "pw1 must be one of 0, 2, 0,2, -: got '" + value + "'");
  }
  if (!rest.empty()) {
    if (rest.size() < 3 || rest.front() != '[' || rest.back() != ']')
      fail(Errc::parse_error, "flags must read [..]: '" + rest + "'");
    row.flags = rest.substr(1, rest.size() - 2);
    if (row.flags.empty()) fail(Errc::parse_error, "empty flag list");
  }
  return row;
}

bool chi_congruence(const SurfaceUnion& u) { return mod8(euler_char(u)) == 0; }

bool m_surface_check(const SurfaceUnion& u) {
  int total = 0;
  for (const auto& c : u.components()) total += 2 + c.h1_rank();
  return total == 16;
}

namespace {

using Readings = std::vector<int>;
using Witness = std::vector<std::uint8_t>;

// Brown value -> w1 readings -> one refinement (q on a basis) realizing both.
struct Profile {
  std::map<int, std::map<Readings, Witness>> states;
  Gf2Matrix bilinear;
};

template <typename Key>
void keep_first(std::map<Key, Witness>& m, const Key& k, Witness w) {
  m.try_emplace(k, std::move(w));
}

// (brown, q) pairs of the rank-1 and rank-2 blocks, by Gauss sum.
struct BlockTables {
  std::vector<std::pair<int, std::array<std::uint8_t, 1>>> line;
  std::vector<std::pair<int, std::array<std::uint8_t, 2>>> plane;

  BlockTables() {
    for (std::uint8_t q : {1, 3}) line.push_back({brown(QuadraticSpace(Gf2Matrix::identity(1), {q})).residue(), {q}});
    Gf2Matrix h(2, 2);
    h.set(0, 1, true);
    h.set(1, 0, true);
    for (std::uint8_t a : {0, 2})
      for (std::uint8_t b : {0, 2}) plane.push_back({brown(QuadraticSpace(h, {a, b})).residue(), {a, b}});
  }
};

const BlockTables& blocks() {
  static const BlockTables t;
  return t;
}

// Component states: (brown, reading or -1) -> witness.
std::map<std::pair<int, int>, Witness> component_states(const SurfaceKind& c) {
  std::map<std::pair<int, int>, Witness> states{{{0, 0}, {}}};
  if (c.tag == SurfaceKind::Tag::Sphere) return states;
  for (int k = 0; k < c.p; ++k) {
    std::map<std::pair<int, int>, Witness> next;
    for (const auto& [key, w] : states) {
      if (c.tag == SurfaceKind::Tag::Nonorientable) {
        // Basis vectors are pairwise orthogonal, so q(w1) = Σ q(e_i).
        for (const auto& [b, q] : blocks().line) {
          Witness w2 = w;
          w2.push_back(q[0]);
          keep_first(next, {(key.first + b) % 8, (key.second + q[0]) % 4}, std::move(w2));
        }
      } else {
        for (const auto& [b, q] : blocks().plane) {
          Witness w2 = w;
          w2.insert(w2.end(), q.begin(), q.end());
          keep_first(next, {(key.first + b) % 8, 0}, std::move(w2));
        }
      }
    }
    states = std::move(next);
  }
  return states;
}

Profile compute_full_profile(const SurfaceUnion& quoter) {
  Profile p;
  p.bilinear = homology_model(quoter).bilinear;
  p.states[0][{}] = {};
  for (const auto& c : quoter.components()) {
    const auto comp = component_states(c);
    std::map<int, std::map<Readings, Witness>> next;
    for (const auto& [b, by_reading] : p.states)
      for (const auto& [r, w] : by_reading)
        for (const auto& [key, cw] : comp) {
          Readings r2 = r;
          if (c.nonorientable_even()) r2.push_back(key.second);
          Witness w2 = w;
          w2.insert(w2.end(), cw.begin(), cw.end());
          keep_first(next[(b + key.first) % 8], r2, std::move(w2));
        }
    p.states = std::move(next);
  }
  return p;
}

inline constexpr std::size_t kGaussSumDimLimit = 12;
inline constexpr std::size_t kAnnihilatorGuard = 20;

Profile compute_single_profile(const SurfaceUnion& quoter) {
  const FirstHomology h = homology_model(quoter);
  const auto basis = annihilator_basis(h);
  const std::size_t m = basis.size();
  if (m > kAnnihilatorGuard)
    fail(Errc::guard_exceeded, "single-half analysis: annihilator of " + quoter.to_string() + " has rank " +
                                   std::to_string(m));

  // Coordinates of each even-χ nonorientable w1 in the annihilator basis.
  Gf2Matrix columns(h.rank, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < h.rank; ++i) columns.set(i, k, basis[k].get(i));
  std::vector<Gf2Vector> coords;
  for (std::size_t c = 0; c < quoter.size(); ++c) {
    if (!quoter.components()[c].nonorientable_even()) continue;
    auto sol = gf2_solve(columns, h.component_w1(c));
    if (!sol) fail(Errc::precondition, "w1 of an even component lies outside the annihilator");
    coords.push_back(sol->particular);
  }

  const QuadraticSpace base = restrict_to(RefinementRange(h).at(0), basis);
  Profile p;
  p.bilinear = base.bilinear();
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Witness q(base.q_basis().begin(), base.q_basis().end());
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1u) q[i] = static_cast<std::uint8_t>((q[i] + 2) & 3u);
    const QuadraticSpace space(base.bilinear(), q);
    const BrownValue b = m <= kGaussSumDimLimit ? brown(space) : brown_by_decomposition(space);
    if (!b.defined()) continue;
    Readings r;
    for (const auto& x : coords) r.push_back(space.q(x));
    keep_first(p.states[b.residue()], r, std::move(q));
  }
  return p;
}

const Profile& cached_profile(const SurfaceUnion& quoter, bool single) {
  static std::mutex mutex;
  static std::map<std::pair<bool, std::string>, Profile> cache;
  const auto key = std::make_pair(single, quoter.to_string());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Profile p = single ? compute_single_profile(quoter) : compute_full_profile(quoter);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(p)).first->second;
}

bool all_equal(const Readings& r) { return std::adjacent_find(r.begin(), r.end(), std::not_equal_to<>()) == r.end(); }

struct Analysis {
  std::optional<BrownAssignment> any;
  std::optional<BrownAssignment> consistent;
  std::set<int> values;
};

struct Choice {
  int brown;
  const Readings* readings;
  const Witness* witness;
};

BrownAssignment make_assignment(const std::array<std::array<const Profile*, 2>, 2>& prof,
                                const std::array<std::array<Choice, 2>, 2>& pick, bool single) {
  BrownAssignment a;
  a.single_half = single;
  for (std::size_t h = 0; h < 2; ++h)
    for (std::size_t i = 0; i < 2; ++i) {
      if (!prof[h][i]) continue;
      (h == 0 ? a.beta : a.gamma)[i] = pick[h][i].brown;
      a.witnesses[h][i] = QuadraticSpace(prof[h][i]->bilinear, *pick[h][i].witness);
      a.readings.insert(a.readings.end(), pick[h][i].readings->begin(), pick[h][i].readings->end());
    }
  return a;
}

// Walks every combination of per-quoter choices; `admissible` filters Brown
// tuples, after which every reading combination is considered.
template <typename Admissible>
Analysis search(const std::array<std::array<const Profile*, 2>, 2>& prof, bool single, Admissible admissible) {
  std::vector<std::vector<Choice>> options;
  for (std::size_t h = 0; h < 2; ++h)
    for (std::size_t i = 0; i < 2; ++i) {
      std::vector<Choice> opts;
      if (prof[h][i]) {
        for (const auto& [b, by_reading] : prof[h][i]->states)
          for (const auto& [r, w] : by_reading) opts.push_back({b, &r, &w});
      } else {
        static const Readings none;
        static const Witness nothing;
        opts.push_back({0, &none, &nothing});
      }
      options.push_back(std::move(opts));
    }

  Analysis out;
  std::array<std::array<Choice, 2>, 2> pick{};
  for (const auto& c0 : options[0])
    for (const auto& c1 : options[1])
      for (const auto& c2 : options[2])
        for (const auto& c3 : options[3]) {
          pick = {{{c0, c1}, {c2, c3}}};
          if (!admissible(c0.brown, c1.brown, c2.brown, c3.brown)) continue;
          if (!out.any) out.any = make_assignment(prof, pick, single);
          Readings r = *c0.readings;
          for (const auto* x : {c1.readings, c2.readings, c3.readings}) r.insert(r.end(), x->begin(), x->end());
          if (!all_equal(r)) continue;
          if (!out.consistent) out.consistent = make_assignment(prof, pick, single);
          if (!r.empty()) out.values.insert(r.front());
        }
  return out;
}

Analysis analyze(QuoterPartition p) {
  const SurfaceUnion all = p.components();
  const int chi = euler_char(all);
  if (mod8(chi) != 0)
    fail(Errc::precondition, "χ=" + std::to_string(chi) + " ≢ 0 mod 8 for " + all.to_string());
  const int c4 = chi / 4;
  if (p.half_empty(0) && !p.half_empty(1)) std::swap(p.quoters[0], p.quoters[1]);
  const auto& q = p.quoters;
  std::array<int, 2> chi1{euler_char(q[0][0]), euler_char(q[0][1])};

  if (p.half_empty(1)) {
    const std::array<std::array<const Profile*, 2>, 2> prof{
        {{&cached_profile(q[0][0], true), &cached_profile(q[0][1], true)}, {nullptr, nullptr}}};
    return search(prof, true, [&](int b1, int b2, int, int) {
      return mod8(chi1[0] - 2 - c4 - b1) == 0 && mod8(chi1[1] - 2 - c4 - b2) == 0;
    });
  }

  std::array<int, 2> chi2{euler_char(q[1][0]), euler_char(q[1][1])};
  const std::array<std::array<const Profile*, 2>, 2> prof{{{&cached_profile(q[0][0], false),
                                                            &cached_profile(q[0][1], false)},
                                                           {&cached_profile(q[1][0], false),
                                                            &cached_profile(q[1][1], false)}}};
  static constexpr std::array<int, 2> s{1, -1};
  return search(prof, false, [&](int b1, int b2, int g1, int g2) {
    const std::array<int, 2> beta{b1, b2}, gamma{g1, g2};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (mod8(chi1[i] + chi2[j] - 2 - c4 - s[j] * beta[i] - s[i] * gamma[j]) != 0) return false;
    return true;
  });
}

bool has_even_nonorientable(const SurfaceUnion& u) {
  return std::any_of(u.components().begin(), u.components().end(),
                     [](const SurfaceKind& c) { return c.nonorientable_even(); });
}

Pw1 pw1_from(const QuoterPartition& p, const Analysis& a) {
  if (!has_even_nonorientable(p.components())) return Pw1::none();
  return Pw1::of(a.values);
}

bool violates_s1_rule(const SurfaceUnion& half) {
  return half.size() > 1 && std::any_of(half.components().begin(), half.components().end(), [](const SurfaceKind& c) {
           return c.tag == SurfaceKind::Tag::Orientable;
         });
}

}  // namespace

std::optional<BrownAssignment> ergm_satisfiable(const QuoterPartition& p) {
  auto a = analyze(p);
  if (a.consistent) return a.consistent;
  return a.any;
}

Pw1 pw1_set(const QuoterPartition& p) {
  const auto a = analyze(p);
  if (!a.any) fail(Errc::precondition, "pw1_set: partition " + p.to_string() + " is not satisfiable");
  return pw1_from(p, a);
}

std::vector<std::array<SurfaceUnion, 2>> submultiset_splits(const SurfaceUnion& u) {
  std::vector<std::pair<SurfaceKind, int>> groups;
  for (const auto& c : u.components()) {
    if (!groups.empty() && groups.back().first == c)
      ++groups.back().second;
    else
      groups.push_back({c, 1});
  }
  std::vector<std::array<SurfaceUnion, 2>> out;
  std::vector<int> take(groups.size(), 0);
  while (true) {
    std::vector<SurfaceKind> a, b;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      a.insert(a.end(), std::size_t(take[g]), groups[g].first);
      b.insert(b.end(), std::size_t(groups[g].second - take[g]), groups[g].first);
    }
    out.push_back({SurfaceUnion(std::move(a)), SurfaceUnion(std::move(b))});
    std::size_t g = 0;
    while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
    if (g == groups.size()) break;
    ++take[g];
  }
  return out;
}

std::vector<ClassificationRow> enumerate_separations(const SurfaceUnion& u, const EnumerateOptions& options) {
  if (!chi_congruence(u))
    fail(Errc::precondition, "χ=" + std::to_string(euler_char(u)) + " ≢ 0 mod 8 for " + u.to_string());

  std::vector<std::array<SurfaceUnion, 2>> splits;
  if (options.halves) {
    if ((*options.halves)[0] + (*options.halves)[1] != u)
      fail(Errc::precondition, "halves " + (*options.halves)[0].to_string() + " | " + (*options.halves)[1].to_string() +
                                   " do not make up " + u.to_string());
    splits.push_back(*options.halves);
  } else {
    splits = submultiset_splits(u);
  }

  std::map<std::string, ClassificationRow> rows;
  for (auto split : splits) {
    if (split[0].empty()) std::swap(split[0], split[1]);
    if (split[0].empty()) continue;
    if (options.s1_rule && (violates_s1_rule(split[0]) || violates_s1_rule(split[1]))) continue;
    for (const auto& a : submultiset_splits(split[0]))
      for (const auto& b : submultiset_splits(split[1])) {
        QuoterPartition p;
        p.quoters = {a, b};
        p = p.canonical();
        const std::string key = p.to_string();
        if (rows.count(key)) continue;
        const auto analysis = analyze(p);
        if (!analysis.consistent) continue;
        rows.emplace(key, ClassificationRow{p, pw1_from(p, analysis), {}});
      }
  }
  std::vector<ClassificationRow> out;
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

EmptyQuoterChi empty_quoter_chi(const SurfaceUnion& u) {
  if (u.size() != 1) fail(Errc::precondition, "empty_quoter_chi: expected exactly one component");
  // Single half {(F)+()}: the empty quoter has χ = 0 and Brown 0.
  EmptyQuoterChi out;
  for (int chi : {-8, 0, 8})
    if (mod8(0 - 2 - chi / 4) == 0) out.admissible.insert(chi);
  out.consistent = out.admissible.count(euler_char(u)) > 0;
  return out;
}

}  // namespace pvform
