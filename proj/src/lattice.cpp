// SPDX-License-Identifier: Apache-2.0
#include "pvform/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <sstream>

#include "pvform/error.hpp"

namespace pvform {

namespace mp = boost::multiprecision;

namespace {

// Fraction-free Gaussian elimination.
mp::cpp_int bareiss_determinant(const IntMatrix& gram) {
  const std::size_t n = gram.size();
  if (n == 0) return 1;
  std::vector<std::vector<mp::cpp_int>> a(n, std::vector<mp::cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gram[i][j];
  mp::cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

UnimodularLattice::UnimodularLattice(IntMatrix gram, std::string name) : gram_(std::move(gram)), name_(std::move(name)) {
  const std::size_t n = gram_.size();
  for (const auto& row : gram_)
    if (row.size() != n) fail(Errc::dimension_mismatch, "lattice: Gram matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram_[i][j] != gram_[j][i]) fail(Errc::dimension_mismatch, "lattice: Gram matrix is not symmetric");
  const auto det = bareiss_determinant(gram_);
  if (det != 1 && det != -1)
    fail(Errc::precondition, "lattice: determinant " + det.str() + " is not ±1");
}

UnimodularLattice UnimodularLattice::e8() {
  // Dynkin diagram: chain 0-1-2-3-4-5-6 with node 7 attached to node 4.
  IntMatrix g(8, std::vector<long long>(8, 0));
  for (int i = 0; i < 8; ++i) g[i][i] = -2;
  auto edge = [&](int a, int b) { g[a][b] = g[b][a] = 1; };
  for (int i = 0; i < 6; ++i) edge(i, i + 1);
  edge(4, 7);
  return UnimodularLattice(std::move(g), "E8");
}

UnimodularLattice UnimodularLattice::hyperbolic_plane() { return UnimodularLattice({{0, 1}, {1, 0}}, "U"); }
UnimodularLattice UnimodularLattice::plus_one() { return UnimodularLattice({{1}}, "+1"); }
UnimodularLattice UnimodularLattice::minus_one() { return UnimodularLattice({{-1}}, "-1"); }

UnimodularLattice direct_sum(const UnimodularLattice& a, const UnimodularLattice& b) {
  const std::size_t n = a.rank() + b.rank();
  IntMatrix g(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) g[i][j] = a.gram()[i][j];
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g[a.rank() + i][a.rank() + j] = b.gram()[i][j];
  std::string name = a.name().empty() || b.name().empty() ? std::string{} : a.name() + "," + b.name();
  if (a.rank() == 0) name = b.name();
  if (b.rank() == 0) name = a.name();
  return UnimodularLattice(std::move(g), std::move(name));
}

int signature(const UnimodularLattice& lattice) {
  const std::size_t n = lattice.rank();
  std::vector<std::vector<mp::cpp_rational>> a(n, std::vector<mp::cpp_rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = lattice.gram()[i][j];

  int positive = 0, negative = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      // Bring a nonzero diagonal entry to position k, or create one by
      // adding a row/column with a nonzero off-diagonal entry.
      std::size_t p = k + 1;
      while (p < n && a[p][p] == 0) ++p;
      if (p < n) {
        std::swap(a[p], a[k]);
        for (auto& row : a) std::swap(row[p], row[k]);
      } else {
        std::size_t j = k + 1;
        while (j < n && a[k][j] == 0) ++j;
        if (j == n) fail(Errc::precondition, "signature: Gram matrix is singular");
        for (std::size_t c = 0; c < n; ++c) a[k][c] += a[j][c];
        for (std::size_t r = 0; r < n; ++r) a[r][k] += a[r][j];
      }
    }
    const mp::cpp_rational pivot = a[k][k];
    if (pivot == 0) fail(Errc::precondition, "signature: Gram matrix is singular");
    (pivot > 0 ? positive : negative)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const mp::cpp_rational f = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = k; j < n; ++j) a[j][i] = a[i][j];
    }
  }
  return positive - negative;
}

QuadraticSpace reduce_mod2(const UnimodularLattice& lattice) {
  const std::size_t n = lattice.rank();
  Gf2Matrix m(n, n);
  std::vector<std::uint8_t> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, (lattice.gram()[i][j] & 1) != 0);
    q[i] = static_cast<std::uint8_t>(((lattice.gram()[i][i] % 4) + 4) % 4);
  }
  return QuadraticSpace(std::move(m), std::move(q));
}

BrownSignatureCheck brown_signature_check(const UnimodularLattice& lattice) {
  BrownSignatureCheck out;
  out.signature_mod8 = ((signature(lattice) % 8) + 8) % 8;
  out.brown = brown(reduce_mod2(lattice));
  out.equal = out.brown.defined() && out.brown.residue() == out.signature_mod8;
  return out;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

UnimodularLattice named_lattice(const std::string& word) {
  if (word == "E8") return UnimodularLattice::e8();
  if (word == "U") return UnimodularLattice::hyperbolic_plane();
  if (word == "+1") return UnimodularLattice::plus_one();
  if (word == "-1") return UnimodularLattice::minus_one();
  fail(Errc::parse_error, "lattice: unknown keyword '" + word + "'");
}

}  // namespace

UnimodularLattice parse_lattice(std::string_view text) {
  const std::string body = trim(text);
  if (body.rfind("sum:", 0) == 0) {
    UnimodularLattice acc(IntMatrix{}, "");
    std::istringstream parts(body.substr(4));
    std::string item;
    bool any = false;
    while (std::getline(parts, item, ',')) {
      item = trim(item);
      long long repeat = 1;
      if (const auto star = item.find('*'); star != std::string::npos) {
        const std::string count = item.substr(0, star);
        auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), repeat);
        if (ec != std::errc{} || ptr != count.data() + count.size() || repeat < 1)
          fail(Errc::parse_error, "lattice: bad repeat count in '" + item + "'");
        item = trim(item.substr(star + 1));
      }
      const auto block = named_lattice(item);
      for (long long r = 0; r < repeat; ++r) acc = direct_sum(acc, block);
      any = true;
    }
    if (!any) fail(Errc::parse_error, "lattice: empty sum");
    return acc;
  }
  if (body.rfind("rank", 0) != 0) return named_lattice(body);

  std::istringstream in(body);
  std::string word;
  long long n = -1;
  if (!(in >> word >> n) || word != "rank" || n < 0) fail(Errc::parse_error, "lattice: expected 'rank <n>' header");
  if (n > 64) fail(Errc::parse_error, "lattice: rank above 64");
  IntMatrix g(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
  for (auto& row : g)
    for (auto& v : row)
      if (!(in >> v)) fail(Errc::parse_error, "lattice: expected " + std::to_string(n * n) + " integer entries");
  if (in >> word) fail(Errc::parse_error, "lattice: trailing input '" + word + "'");
  return UnimodularLattice(std::move(g));
}

}  // namespace pvform
