// SPDX-License-Identifier: Apache-2.0
#include "pvform/fundcycle.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "pvform/error.hpp"

namespace pvform {

Z4Vector CurveArrangement::boundary_vector(const Region& r) const {
  Z4Vector v(circle_count(), 0);
  for (const auto& [c, coef] : r.boundary) v[c] = z4(v[c] + coef);
  return v;
}

bool CurveArrangement::is_minus_plus(const Region& r) const {
  if (r.side) return r.side == '+';
  return std::none_of(r.boundary.begin(), r.boundary.end(),
                      [&](const auto& b) { return b.first < p_circles.size(); });
}

std::vector<std::string> CurveArrangement::validate() const {
  const std::size_t n = circle_count();
  std::vector<bool> minus_side(n, false), plus_side(n, false);
  for (const auto* list : {&minus_regions, &plus_regions})
    for (const auto& r : *list) {
      std::set<std::size_t> seen;
      for (const auto& [c, coef] : r.boundary) {
        if (c >= n) fail(Errc::precondition, "region " + r.label + ": circle index out of range");
        if (coef != 1 && coef != 3) fail(Errc::precondition, "region " + r.label + ": coefficients must be ±1");
        if (!seen.insert(c).second) fail(Errc::precondition, "region " + r.label + ": circle listed twice");
        (r.minus ? minus_side : plus_side)[c] = true;
      }
      if (r.side && (!r.minus || (r.side != '+' && r.side != '-')))
        fail(Errc::precondition, "region " + r.label + ": side tags apply to minus regions only");
    }
  std::vector<std::string> warnings;
  auto name = [&](std::size_t c) { return c < p_circles.size() ? p_circles[c] : q_circles[c - p_circles.size()]; };
  for (std::size_t c = 0; c < n; ++c) {
    if (!minus_side[c]) warnings.push_back("circle " + name(c) + " bounds no minus region");
    if (!plus_side[c]) warnings.push_back("circle " + name(c) + " bounds no plus region");
  }
  return warnings;
}

namespace {

long long parse_int(const std::string& s, const std::string& context) {
  long long v = 0;
  const char* b = s.data();
  if (!s.empty() && s[0] == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    fail(Errc::parse_error, context + ": bad integer '" + s + "'");
  return v;
}

}  // namespace

CurveArrangement parse_arrangement(std::string_view text) {
  CurveArrangement arr;
  std::map<std::string, std::pair<bool, std::size_t>> circles;  // label -> (is P, index within kind)
  std::set<std::string> region_labels;
  struct Pending {
    Region region;
    std::vector<std::pair<std::string, long long>> terms;
    std::size_t line;
  };
  std::vector<Pending> pending;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string head;
    if (!(words >> head)) continue;
    const std::string where = "arrangement line " + std::to_string(lineno);
    if (head == "P" || head == "Q") {
      std::string label, extra;
      if (!(words >> label) || (words >> extra)) fail(Errc::parse_error, where + ": expected '" + head + " <label>'");
      if (circles.count(label) || region_labels.count(label)) fail(Errc::parse_error, where + ": duplicate label " + label);
      auto& list = head == "P" ? arr.p_circles : arr.q_circles;
      circles[label] = {head == "P", list.size()};
      list.push_back(label);
    } else if (head == "Z-" || head == "Z+") {
      Pending p;
      p.line = lineno;
      p.region.minus = head == "Z-";
      if (!(words >> p.region.label)) fail(Errc::parse_error, where + ": region needs a label");
      if (circles.count(p.region.label) || !region_labels.insert(p.region.label).second)
        fail(Errc::parse_error, where + ": duplicate label " + p.region.label);
      std::string w;
      bool colon = false;
      while (words >> w) {
        if (!colon) {
          if (w == ":") {
            colon = true;
          } else if (w.rfind("chi=", 0) == 0) {
            p.region.chi = parse_int(w.substr(4), where);
          } else if (w.rfind("side=", 0) == 0 && p.region.minus && (w == "side=+" || w == "side=-")) {
            p.region.side = w.back();
          } else {
            fail(Errc::parse_error, where + ": unexpected '" + w + "' before ':'");
          }
          continue;
        }
        const auto star = w.find('*');
        if (star == std::string::npos) fail(Errc::parse_error, where + ": boundary terms read ±1*<circle>");
        const long long coef = parse_int(w.substr(0, star), where);
        if (coef != 1 && coef != -1) fail(Errc::parse_error, where + ": boundary coefficients must be ±1");
        p.terms.push_back({w.substr(star + 1), coef});
      }
      if (!colon) fail(Errc::parse_error, where + ": region line needs ':' before its boundary");
      if (p.region.minus && !p.region.chi) fail(Errc::parse_error, where + ": minus regions need chi=<int>");
      pending.push_back(std::move(p));
    } else {
      fail(Errc::parse_error, where + ": unknown declaration '" + head + "'");
    }
  }

  // Regions may name circles declared later in the file.
  for (auto& p : pending) {
    for (const auto& [label, coef] : p.terms) {
      auto it = circles.find(label);
      if (it == circles.end())
        fail(Errc::parse_error, "arrangement line " + std::to_string(p.line) + ": unknown circle " + label);
      const auto [is_p, idx] = it->second;
      p.region.boundary.push_back({is_p ? idx : arr.p_circles.size() + idx, z4(coef)});
    }
    (p.region.minus ? arr.minus_regions : arr.plus_regions).push_back(std::move(p.region));
  }
  arr.validate();
  return arr;
}

bool has_type_one_layout(const CurveArrangement& arr) {
  std::vector<int> minus_count(arr.circle_count(), 0);
  for (const auto& r : arr.minus_regions)
    for (const auto& b : r.boundary) ++minus_count[b.first];
  for (std::size_t c = 0; c < arr.circle_count(); ++c)
    if (minus_count[c] != (c < arr.p_circles.size() ? 1 : 2)) return false;
  return true;
}

Z4Vector FundamentalCycle::flatten() const {
  Z4Vector x = lambda;
  for (const auto* part : {&kappa_minus, &mu, &kappa_plus}) x.insert(x.end(), part->begin(), part->end());
  return x;
}

FundamentalCycle FundamentalCycle::unflatten(const CurveArrangement& arr, const Z4Vector& x) {
  if (x.size() != arr.unknown_count()) fail(Errc::dimension_mismatch, "coefficient vector length mismatch");
  FundamentalCycle c;
  auto it = x.begin();
  auto take = [&](Z4Vector& dst, std::size_t n) {
    dst.assign(it, it + std::ptrdiff_t(n));
    it += std::ptrdiff_t(n);
  };
  take(c.lambda, arr.p_circles.size());
  take(c.kappa_minus, arr.minus_regions.size());
  take(c.mu, arr.q_circles.size());
  take(c.kappa_plus, arr.plus_regions.size());
  return c;
}

std::string FundamentalCycle::to_string() const {
  return "lambda=" + z4_to_string(lambda) + " kappa-=" + z4_to_string(kappa_minus) + " mu=" + z4_to_string(mu) +
         " kappa+=" + z4_to_string(kappa_plus);
}

CycleSystem fundamental_cycle_system(const CurveArrangement& arr) {
  arr.validate();
  const std::size_t n = arr.circle_count(), p = arr.p_circles.size();
  CycleSystem s{Z4Matrix(n, arr.unknown_count()), Z4Vector(n, 0), {}};
  std::size_t col = 0;
  for (std::size_t i = 0; i < p; ++i, ++col) {
    s.matrix.set(i, col, 1);
    s.mask.push_back(Parity::Odd);
  }
  for (const auto& r : arr.minus_regions) {
    const auto b = arr.boundary_vector(r);
    for (std::size_t c = 0; c < n; ++c) s.matrix.set(c, col, b[c]);
    s.mask.push_back(Parity::Odd);
    ++col;
  }
  for (std::size_t j = 0; j < arr.q_circles.size(); ++j, ++col) {
    s.matrix.set(p + j, col, -2);
    s.mask.push_back(Parity::Free);
  }
  for (const auto& r : arr.plus_regions) {
    const auto b = arr.boundary_vector(r);
    for (std::size_t c = 0; c < n; ++c) s.matrix.set(c, col, -2 * b[c]);
    s.mask.push_back(Parity::Free);
    ++col;
  }
  return s;
}

std::optional<FundamentalCycle> solve_fundamental_cycle(const CurveArrangement& arr) {
  const auto s = fundamental_cycle_system(arr);
  auto x = z4_solve_parity(s.matrix, s.rhs, s.mask);
  if (!x) return std::nullopt;
  return FundamentalCycle::unflatten(arr, *x);
}

bool subgroup_membership(const CurveArrangement& arr) {
  arr.validate();
  const std::size_t n = arr.circle_count(), p = arr.p_circles.size();
  // Generators as columns: 2[P_i], 2[Q_j], 2∂Z⁺_l, then the relations ∂Z⁻_k.
  std::vector<Z4Vector> columns;
  for (std::size_t c = 0; c < n; ++c) {
    Z4Vector v(n, 0);
    v[c] = 2;
    columns.push_back(std::move(v));
  }
  for (const auto& r : arr.plus_regions) {
    auto b = arr.boundary_vector(r);
    for (auto& e : b) e = z4(2 * e);
    columns.push_back(std::move(b));
  }
  for (const auto& r : arr.minus_regions) columns.push_back(arr.boundary_vector(r));

  Z4Matrix a(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) a.set(i, j, columns[j][i]);
  Z4Vector target(n, 0);
  for (std::size_t i = 0; i < p; ++i) target[i] = 1;
  return z4_solve_parity(a, target, ParityMask(columns.size(), Parity::Free)).has_value();
}

namespace {

std::vector<int> parity_groups(const Z4Vector& v) {
  std::vector<int> g;
  for (auto x : v) g.push_back(int((x - v.front() + 4) % 2));
  return g;
}

}  // namespace

Separation separation_from_cycle(const FundamentalCycle& c) {
  return {c.mu.empty() ? std::vector<int>{} : parity_groups(c.mu),
          c.kappa_plus.empty() ? std::vector<int>{} : parity_groups(c.kappa_plus)};
}

AmbiguityReport ambiguity_generators(const CurveArrangement& arr) {
  const auto s = fundamental_cycle_system(arr);
  const auto space = z4_solution_space(s.matrix, s.rhs, s.mask);
  if (!space) fail(Errc::precondition, "ambiguity_generators: the arrangement admits no fundamental cycle");

  AmbiguityReport r;
  r.particular = FundamentalCycle::unflatten(arr, space->particular);
  r.generators = space->generators;

  const std::size_t p = arr.p_circles.size(), zm = arr.minus_regions.size(), q = arr.q_circles.size(),
                    zp = arr.plus_regions.size();
  // Coefficients of 2[Z⁺] and 2[Q̄] carry a factor 2 in the cycle, so they
  // shift κ⁺ and μ by 1.
  Z4Vector zr(arr.unknown_count(), 0), zplus_p(arr.unknown_count(), 0), zmp_q(arr.unknown_count(), 0);
  for (std::size_t k = 0; k < zm; ++k) zr[p + k] = 2;
  for (std::size_t l = 0; l < zp; ++l) zr[p + zm + q + l] = zplus_p[p + zm + q + l] = 1;
  for (std::size_t i = 0; i < p; ++i) zplus_p[i] = 2;
  for (std::size_t k = 0; k < zm; ++k)
    if (arr.is_minus_plus(arr.minus_regions[k])) zmp_q[p + k] = 2;
  for (std::size_t j = 0; j < q; ++j) zmp_q[p + zm + j] = 1;
  r.canonical = {zr, zplus_p, zmp_q};

  for (const auto& v : r.canonical) {
    const auto img = s.matrix.multiply(v);
    r.canonical_homogeneous.push_back(std::all_of(img.begin(), img.end(), [](auto e) { return e == 0; }));
  }
  const auto span = z4_howell_form(r.canonical, arr.unknown_count());
  r.contained = std::all_of(r.generators.begin(), r.generators.end(), [&](const Z4Vector& g) {
    const auto rest = z4_reduce(g, span);
    return std::all_of(rest.begin(), rest.end(), [](auto e) { return e == 0; });
  });
  return r;
}

int loop_form_value(const LoopData& d) {
  if (d.isolated_q_hits < 0 || d.isolated_plus_hits < 0 || d.pq_points_passed < 0)
    fail(Errc::precondition, "loop_form_value: counts must be nonnegative");
  return z4(2 * (d.disorienting ? 1 : 0) + 2 * d.isolated_q_hits + 2 * d.isolated_plus_hits + d.pq_points_passed);
}

int boundary_value(BoundaryKind kind, long long a, long long b) {
  switch (kind) {
    case BoundaryKind::Tangency: return 1;
    case BoundaryKind::MinusRegion: return z4(2 * a);
    case BoundaryKind::PComponent:
      if (a % 2 != 0) fail(Errc::precondition, "boundary_value: [P]^2 = " + std::to_string(a) + " is odd");
      return z4(a / 2);
    case BoundaryKind::Lk: return z4(a - b);
  }
  fail(Errc::precondition, "boundary_value: unknown kind");
}

std::string fundcycle_report(const CurveArrangement& arr, bool assume_proper) {
  std::ostringstream os;
  os << "circles: " << arr.p_circles.size() << " P, " << arr.q_circles.size() << " Q; regions: "
     << arr.minus_regions.size() << " minus, " << arr.plus_regions.size() << " plus\n";
  for (const auto& w : arr.validate()) os << "warning: " << w << '\n';
  os << "layout: " << (has_type_one_layout(arr) ? "each P bounds one minus region, each Q two" : "general") << '\n';
  const auto cycle = solve_fundamental_cycle(arr);
  os << "subgroup membership: " << (subgroup_membership(arr) ? "yes" : "no") << '\n';
  if (!cycle) {
    os << "fundamental cycle: none\n";
    return os.str();
  }
  os << "fundamental cycle: " << cycle->to_string() << '\n';
  os << "proper: " << (assume_proper ? "assumed (M-surface with connected real part)" : "not checked") << '\n';
  const auto sep = separation_from_cycle(*cycle);
  auto groups = [&](const std::vector<std::string>& labels, const std::vector<int>& g) {
    std::array<std::string, 2> side;
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto& s = side[std::size_t(g[i])];
      if (!s.empty()) s += ',';
      s += labels[i];
    }
    return "{" + side[0] + "}{" + side[1] + "}";
  };
  std::vector<std::string> plus_labels;
  for (const auto& r : arr.plus_regions) plus_labels.push_back(r.label);
  os << "separation" << (assume_proper ? "" : " (if proper)") << ": Q " << groups(arr.q_circles, sep.q_groups)
     << "  Z+ " << groups(plus_labels, sep.plus_groups) << '\n';
  const auto amb = ambiguity_generators(arr);
  os << "ambiguity generators:";
  for (const auto& g : amb.generators) os << ' ' << z4_to_string(g);
  os << "\ncanonical shifts: 2[Z_R]=" << z4_to_string(amb.canonical[0]) << " 2([Z+]+[P])="
     << z4_to_string(amb.canonical[1]) << " 2([Z-+]+[Q])=" << z4_to_string(amb.canonical[2]) << '\n';
  os << "generators within canonical span: " << (amb.contained ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace pvform
