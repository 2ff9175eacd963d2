// SPDX-License-Identifier: Apache-2.0
#include "pvform/surface.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "pvform/error.hpp"

namespace pvform {

SurfaceKind SurfaceKind::orientable(int genus) {
  if (genus < 1) fail(Errc::precondition, "orientable component needs genus >= 1");
  return {Tag::Orientable, genus};
}

SurfaceKind SurfaceKind::nonorientable(int crosscaps) {
  if (crosscaps < 1) fail(Errc::precondition, "nonorientable component needs >= 1 crosscap");
  return {Tag::Nonorientable, crosscaps};
}

std::string SurfaceKind::token() const {
  switch (tag) {
    case Tag::Sphere: return "S";
    case Tag::Orientable: return "S" + std::to_string(p);
    case Tag::Nonorientable: return "V" + std::to_string(p);
  }
  return {};
}

SurfaceUnion::SurfaceUnion(std::vector<SurfaceKind> components) : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end());
}

std::string SurfaceUnion::to_string() const {
  if (components_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < components_.size();) {
    std::size_t j = i;
    while (j < components_.size() && components_[j] == components_[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += components_[i].token();
    i = j;
  }
  return out;
}

SurfaceUnion operator+(const SurfaceUnion& a, const SurfaceUnion& b) {
  auto all = a.components();
  all.insert(all.end(), b.components().begin(), b.components().end());
  return SurfaceUnion(std::move(all));
}

namespace {

int parse_count(std::string_view digits, std::string_view token) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    fail(Errc::parse_error, "malformed number in component token '" + std::string(token) + "'");
  return v;
}

}  // namespace

SurfaceUnion parse_components(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "0") return {};

  std::vector<SurfaceKind> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find('+', start), s.size());
    const std::string_view token(s.data() + start, end - start);
    if (token.empty()) fail(Errc::parse_error, "empty component token in '" + s + "'");

    std::size_t k = 0;
    while (k < token.size() && std::isdigit(static_cast<unsigned char>(token[k]))) ++k;
    const int multiplicity = k ? parse_count(token.substr(0, k), token) : 1;
    if (multiplicity < 1) fail(Errc::parse_error, "multiplicity must be positive in '" + std::string(token) + "'");
    if (multiplicity > 64) fail(Errc::parse_error, "multiplicity above 64 in '" + std::string(token) + "'");
    if (k == token.size() || (token[k] != 'S' && token[k] != 'V'))
      fail(Errc::parse_error, "unknown component token '" + std::string(token) + "'");
    const char letter = token[k];
    const std::string_view param = token.substr(k + 1);
    SurfaceKind kind;
    if (param.empty()) {
      if (letter == 'V') fail(Errc::parse_error, "V needs a crosscap count in '" + std::string(token) + "'");
      kind = SurfaceKind::sphere();
    } else {
      const int p = parse_count(param, token);
      if (p < 1 || p > 64) fail(Errc::parse_error, "component parameter must lie in 1..64 in '" + std::string(token) + "'");
      kind = letter == 'S' ? SurfaceKind::orientable(p) : SurfaceKind::nonorientable(p);
    }
    out.insert(out.end(), std::size_t(multiplicity), kind);
    start = end + 1;
  }
  return SurfaceUnion(std::move(out));
}

Gf2Vector FirstHomology::component_w1(std::size_t component) const {
  if (component >= blocks.size()) fail(Errc::precondition, "component index out of range");
  const auto& b = blocks[component];
  Gf2Vector v(rank);
  for (std::size_t i = b.offset; i < b.offset + b.length; ++i) v.set(i, w1_dual.get(i));
  return v;
}

int euler_char(const SurfaceUnion& u) {
  int chi = 0;
  for (const auto& c : u.components()) chi += c.euler_char();
  return chi;
}

FirstHomology homology_model(const SurfaceUnion& u) {
  FirstHomology h;
  for (const auto& c : u.components()) h.rank += std::size_t(c.h1_rank());
  h.bilinear = Gf2Matrix(h.rank, h.rank);
  h.w1_dual = Gf2Vector(h.rank);
  std::size_t offset = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const auto& c = u.components()[k];
    const std::size_t len = std::size_t(c.h1_rank());
    h.blocks.push_back({k, offset, len});
    if (c.tag == SurfaceKind::Tag::Orientable) {
      for (std::size_t i = offset; i < offset + len; i += 2) {
        h.bilinear.set(i, i + 1, true);
        h.bilinear.set(i + 1, i, true);
      }
    } else if (c.tag == SurfaceKind::Tag::Nonorientable) {
      for (std::size_t i = offset; i < offset + len; ++i) {
        h.bilinear.set(i, i, true);
        h.w1_dual.set(i, true);
      }
    }
    offset += len;
  }
  return h;
}

RefinementRange::RefinementRange(const SurfaceUnion& u) : RefinementRange(homology_model(u)) {}

RefinementRange::RefinementRange(FirstHomology h) : h_(std::move(h)) {
  if (h_.rank > kMaxRefinementRank)
    fail(Errc::guard_exceeded, "refinements: rank " + std::to_string(h_.rank) + " exceeds guard " +
                                   std::to_string(kMaxRefinementRank));
}

QuadraticSpace RefinementRange::at(std::uint64_t index) const {
  std::vector<std::uint8_t> q(h_.rank);
  for (std::size_t i = 0; i < h_.rank; ++i)
    q[i] = static_cast<std::uint8_t>((h_.bilinear.get(i, i) ? 1 : 0) + (((index >> i) & 1u) ? 2 : 0));
  return QuadraticSpace(h_.bilinear, std::move(q));
}

RefinementRange refinements(const SurfaceUnion& u) { return RefinementRange(u); }

namespace {

std::set<int> minkowski_sum(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  for (int x : a)
    for (int y : b) out.insert((x + y) % 8);
  return out;
}

std::set<int> enumerated_brown_set(const SurfaceUnion& u) {
  std::set<int> out;
  const RefinementRange range(u);
  for (std::uint64_t i = 0; i < range.size(); ++i) out.insert(brown(range.at(i)).residue());
  return out;
}

}  // namespace

std::set<int> achievable_brown_set(const SurfaceUnion& u) {
  // The form is an orthogonal sum of ⟨1⟩ lines and symplectic planes; Brown
  // is additive, so combine the sets of those blocks.
  static const std::set<int> line = enumerated_brown_set(parse_components("V1"));
  static const std::set<int> plane = enumerated_brown_set(parse_components("S1"));
  std::set<int> out{0};
  for (const auto& c : u.components()) {
    if (c.tag == SurfaceKind::Tag::Sphere) continue;
    const auto& block = c.tag == SurfaceKind::Tag::Orientable ? plane : line;
    for (int k = 0; k < c.p; ++k) out = minkowski_sum(out, block);
  }
  return out;
}

std::vector<Gf2Vector> annihilator_basis(const FirstHomology& h) {
  const Gf2Vector row = h.bilinear.multiply(h.w1_dual);
  return gf2_kernel(Gf2Matrix::from_rows({row}, h.rank));
}

std::set<int> annihilator_brown_set(const SurfaceUnion& u) {
  const FirstHomology h = homology_model(u);
  const auto basis = annihilator_basis(h);
  if (basis.size() > kMaxRefinementRank) fail(Errc::guard_exceeded, "annihilator_brown_set: rank too large");
  // The intersection form is nonsingular, so every refinement of the
  // restricted form extends to H1: enumerate those directly.
  const QuadraticSpace base = restrict_to(RefinementRange(h).at(0), basis);
  std::set<int> out;
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    std::vector<std::uint8_t> q(base.q_basis().begin(), base.q_basis().end());
    for (std::size_t i = 0; i < q.size(); ++i)
      if ((m >> i) & 1u) q[i] = static_cast<std::uint8_t>((q[i] + 2) & 3u);
    const auto b = brown(QuadraticSpace(base.bilinear(), std::move(q)));
    if (b.defined()) out.insert(b.residue());
  }
  return out;
}

int pontrjagin_square_surface(const MembraneData& m) {
  const long long v = m.normal_euler + 2 * m.self_intersections + 2 * m.euler_char;
  return int(((v % 4) + 4) % 4);
}

std::string KalininClass::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto* list : {&one_cycles, &zero_classes})
    for (const auto& s : *list) {
      if (!first) out += ',';
      out += s;
      first = false;
    }
  return out + "}";
}

KalininClass kalinin_class(const FixedPointData& f) {
  if (f.two_sided_circles < 0 || f.one_sided_circles < 0 || f.isolated_points < 0)
    fail(Errc::precondition, "kalinin_class: counts must be nonnegative");
  KalininClass k;
  for (long long i = 1; i <= f.two_sided_circles; ++i) k.one_cycles.push_back("[l" + std::to_string(i) + "]");
  for (long long j = 1; j <= f.one_sided_circles; ++j) k.one_cycles.push_back("[n" + std::to_string(j) + "]");
  for (long long i = 1; i <= f.isolated_points; ++i) k.zero_classes.push_back("[P" + std::to_string(i) + "]");
  for (long long j = 1; j <= f.one_sided_circles; ++j) k.zero_classes.push_back("<n" + std::to_string(j) + ">");
  return k;
}

int w1_value(const QuadraticSpace& q, const FirstHomology& h, std::size_t component) {
  if (q.dim() != h.rank) fail(Errc::dimension_mismatch, "w1_value: refinement does not live on this homology");
  if (component >= h.blocks.size()) fail(Errc::precondition, "w1_value: component index out of range");
  if (h.blocks[component].length == 0) fail(Errc::precondition, "w1_value: component has no first homology");
  return q.q(h.component_w1(component));
}

}  // namespace pvform
