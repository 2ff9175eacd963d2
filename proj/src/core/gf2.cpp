// SPDX-License-Identifier: Apache-2.0
#include "pvform/gf2.hpp"

#include <algorithm>
#include <bit>

#include "pvform/error.hpp"

namespace pvform {

Gf2Vector Gf2Vector::from_bits(std::initializer_list<int> bits) {
  Gf2Vector v(bits.size());
  std::size_t i = 0;
  for (int b : bits) v.set(i++, (b & 1) != 0);
  return v;
}

Gf2Vector Gf2Vector::from_mask(std::size_t n, std::uint64_t mask) {
  if (n > 64) fail(Errc::dimension_mismatch, "from_mask: size exceeds 64");
  Gf2Vector v(n);
  if (n > 0) v.words_[0] = n == 64 ? mask : mask & ((std::uint64_t{1} << n) - 1);
  return v;
}

Gf2Vector Gf2Vector::unit(std::size_t n, std::size_t i) {
  Gf2Vector v(n);
  v.set(i, true);
  return v;
}

Gf2Vector Gf2Vector::ones(std::size_t n) {
  Gf2Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, true);
  return v;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  if (other.size_ != size_) fail(Errc::dimension_mismatch, "GF(2) vector sizes differ");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
  if (other.size_ != size_) fail(Errc::dimension_mismatch, "GF(2) vector sizes differ");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::size_t Gf2Vector::popcount() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Gf2Vector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::string Gf2Vector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::strong_ordering operator<=>(const Gf2Vector& a, const Gf2Vector& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Lexicographic in index order: index 0 is the most significant position.
  for (std::size_t i = 0; i < a.size_; ++i) {
    const bool x = a.get(i), y = b.get(i);
    if (x != y) return x ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Gf2Vector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::vector<Gf2Vector> rows, std::size_t cols) {
  for (const auto& r : rows)
    if (r.size() != cols) fail(Errc::dimension_mismatch, "row length differs from column count");
  Gf2Matrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

bool Gf2Matrix::is_symmetric() const {
  if (rows() != cols_) return false;
  for (std::size_t i = 0; i < cols_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (get(i, j) != get(j, i)) return false;
  return true;
}

Gf2Vector Gf2Matrix::multiply(const Gf2Vector& x) const {
  if (x.size() != cols_) fail(Errc::dimension_mismatch, "matrix/vector size mismatch");
  Gf2Vector y(rows());
  for (std::size_t r = 0; r < rows(); ++r) y.set(r, rows_[r].dot(x));
  return y;
}

bool Gf2Matrix::form(const Gf2Vector& x, const Gf2Vector& y) const {
  if (x.size() != rows()) fail(Errc::dimension_mismatch, "bilinear form argument size mismatch");
  return x.dot(multiply(y));
}

namespace {

struct Echelon {
  std::vector<Gf2Vector> rows;     // reduced rows, one per pivot
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::vector<bool> rhs;
  bool consistent = true;
};

Echelon reduce(const Gf2Matrix& a, const Gf2Vector* b) {
  Echelon e;
  std::vector<Gf2Vector> rows;
  std::vector<bool> rhs;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    rows.push_back(a.row(r));
    rhs.push_back(b ? b->get(r) : false);
  }
  std::size_t next = 0;
  for (std::size_t c = 0; c < a.cols() && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    std::swap(rhs[p], rhs[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) {
        rows[r] ^= rows[next];
        rhs[r] = rhs[r] != rhs[next];
      }
    }
    e.pivots.push_back(c);
    ++next;
  }
  for (std::size_t r = next; r < rows.size(); ++r)
    if (rhs[r]) e.consistent = false;
  rows.resize(next);
  rhs.resize(next);
  e.rows = std::move(rows);
  e.rhs = std::move(rhs);
  return e;
}

std::vector<Gf2Vector> kernel_from(const Echelon& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Gf2Vector> kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Gf2Vector k(cols);
    k.set(f, true);
    for (std::size_t r = 0; r < e.rows.size(); ++r)
      if (e.rows[r].get(f)) k.set(e.pivots[r], true);
    kernel.push_back(std::move(k));
  }
  return kernel;
}

}  // namespace

std::optional<Gf2Solution> gf2_solve(const Gf2Matrix& a, const Gf2Vector& b) {
  if (b.size() != a.rows()) fail(Errc::dimension_mismatch, "gf2_solve: right-hand side length differs from row count");
  Echelon e = reduce(a, &b);
  if (!e.consistent) return std::nullopt;
  Gf2Solution s;
  s.particular = Gf2Vector(a.cols());
  for (std::size_t r = 0; r < e.rows.size(); ++r) s.particular.set(e.pivots[r], e.rhs[r]);
  s.kernel = kernel_from(e, a.cols());
  s.rank = e.rows.size();
  return s;
}

std::vector<Gf2Vector> gf2_kernel(const Gf2Matrix& a) { return kernel_from(reduce(a, nullptr), a.cols()); }

std::size_t gf2_rank(std::span<const Gf2Vector> vectors) {
  if (vectors.empty()) return 0;
  return gf2_span_basis(vectors, vectors.front().size()).size();
}

std::vector<Gf2Vector> gf2_span_basis(std::span<const Gf2Vector> vectors, std::size_t n) {
  Gf2Matrix m = Gf2Matrix::from_rows(std::vector<Gf2Vector>(vectors.begin(), vectors.end()), n);
  return reduce(m, nullptr).rows;
}

bool gf2_in_span(std::span<const Gf2Vector> basis, const Gf2Vector& v) {
  if (basis.empty()) return v.is_zero();
  std::vector<Gf2Vector> all(basis.begin(), basis.end());
  const std::size_t before = gf2_rank(all);
  all.push_back(v);
  return gf2_rank(all) == before;
}

}  // namespace pvform
