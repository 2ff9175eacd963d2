// SPDX-License-Identifier: Apache-2.0
#include "pvform/z4.hpp"

#include <algorithm>

#include "pvform/error.hpp"
#include "pvform/gf2.hpp"

namespace pvform {

Z4Matrix::Z4Matrix(std::initializer_list<std::initializer_list<int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(Errc::dimension_mismatch, "ragged Z/4 matrix literal");
    for (int v : r) entries_.push_back(z4(v));
  }
}

Z4Vector Z4Matrix::multiply(const Z4Vector& x) const {
  if (x.size() != cols_) fail(Errc::dimension_mismatch, "Z/4 matrix/vector size mismatch");
  Z4Vector y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    unsigned acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += unsigned(get(r, c)) * x[c];
    y[r] = static_cast<std::uint8_t>(acc & 3u);
  }
  return y;
}

std::string z4_to_string(const Z4Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += char('0' + v[i]);
  }
  return s + ")";
}

namespace {

void axpy(Z4Vector& y, unsigned a, const Z4Vector& x) {
  // y <- y - a x
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = static_cast<std::uint8_t>((y[i] + 4 * 4 - a * x[i]) & 3u);
}

void scale(Z4Vector& y, unsigned a) {
  for (auto& v : y) v = static_cast<std::uint8_t>((v * a) & 3u);
}

bool is_zero(const Z4Vector& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

struct Unconstrained {
  Z4Vector particular;
  std::vector<Z4Vector> kernel;  // generating set of { z : A z = 0 }
};

// Solves A z = b over Z/4. Unit pivots first (Z/4 is local), then the
// remaining all-even block is halved and solved over GF(2).
std::optional<Unconstrained> solve_unconstrained(const Z4Matrix& a, const Z4Vector& b) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<Z4Vector> rows(m, Z4Vector(n + 1, 0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = a.get(r, c);
    rows[r][n] = b[r];
  }

  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(n, false);
  std::size_t next = 0;
  for (std::size_t c = 0; c < n && next < m; ++c) {
    std::size_t p = next;
    while (p < m && (rows[p][c] & 1u) == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[next]);
    scale(rows[next], rows[next][c]);  // units are self-inverse mod 4
    for (std::size_t r = 0; r < m; ++r)
      if (r != next && rows[r][c] != 0) axpy(rows[r], rows[r][c], rows[next]);
    pivot_cols.push_back(c);
    is_pivot[c] = true;
    ++next;
  }

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  // Remaining rows are 2 * (GF(2) system) in the free columns.
  const std::size_t rest = m - next;
  Gf2Matrix half(rest, free_cols.size());
  Gf2Vector half_rhs(rest);
  for (std::size_t r = 0; r < rest; ++r) {
    const auto& row = rows[next + r];
    if (row[n] & 1u) return std::nullopt;
    half_rhs.set(r, row[n] == 2);
    for (std::size_t j = 0; j < free_cols.size(); ++j) half.set(r, j, row[free_cols[j]] == 2);
  }
  auto gf = gf2_solve(half, half_rhs);
  if (!gf) return std::nullopt;

  auto complete = [&](Z4Vector z, bool homogeneous) {
    for (std::size_t t = 0; t < pivot_cols.size(); ++t) {
      unsigned acc = homogeneous ? 0 : rows[t][n];
      for (auto j : free_cols) acc += 4 * 4 - rows[t][j] * z[j];
      z[pivot_cols[t]] = static_cast<std::uint8_t>(acc & 3u);
    }
    return z;
  };

  Unconstrained out;
  Z4Vector z(n, 0);
  for (std::size_t j = 0; j < free_cols.size(); ++j) z[free_cols[j]] = gf->particular.get(j) ? 1 : 0;
  out.particular = complete(z, false);

  for (const auto& k : gf->kernel) {
    Z4Vector d(n, 0);
    for (std::size_t j = 0; j < free_cols.size(); ++j) d[free_cols[j]] = k.get(j) ? 1 : 0;
    out.kernel.push_back(complete(d, true));
  }
  for (auto j : free_cols) {
    Z4Vector d(n, 0);
    d[j] = 2;
    out.kernel.push_back(complete(d, true));
  }
  return out;
}

void check_dims(const Z4Matrix& a, const Z4Vector& b, const ParityMask& mask) {
  if (b.size() != a.rows()) fail(Errc::dimension_mismatch, "Z/4 right-hand side length differs from row count");
  if (mask.size() != a.cols()) fail(Errc::dimension_mismatch, "parity mask length differs from unknown count");
  for (auto v : b)
    if (v > 3) fail(Errc::dimension_mismatch, "Z/4 right-hand side entry out of range");
}

}  // namespace

std::vector<Z4Vector> z4_howell_form(std::vector<Z4Vector> pool, std::size_t cols) {
  for (auto& v : pool)
    if (v.size() != cols) fail(Errc::dimension_mismatch, "Howell form: row length mismatch");
  std::erase_if(pool, is_zero);

  std::vector<Z4Vector> result;
  std::vector<std::size_t> result_pivot;
  for (std::size_t c = 0; c < cols; ++c) {
    auto unit = std::find_if(pool.begin(), pool.end(), [c](const Z4Vector& v) { return (v[c] & 1u) != 0; });
    Z4Vector p;
    if (unit != pool.end()) {
      p = std::move(*unit);
      pool.erase(unit);
      scale(p, p[c]);
      for (auto& v : pool)
        if (v[c]) axpy(v, v[c], p);
      for (auto& r : result)
        if (r[c]) axpy(r, r[c], p);
    } else {
      auto two = std::find_if(pool.begin(), pool.end(), [c](const Z4Vector& v) { return v[c] == 2; });
      if (two == pool.end()) continue;
      p = std::move(*two);
      pool.erase(two);
      for (auto& v : pool)
        if (v[c] == 2) axpy(v, 1, p);
      for (auto& r : result)
        if (r[c] >= 2) axpy(r, 1, p);
      // Howell property: 2p has a zero pivot and must stay in the span below.
      Z4Vector doubled = p;
      scale(doubled, 2);
      if (!is_zero(doubled)) pool.push_back(std::move(doubled));
    }
    std::erase_if(pool, is_zero);
    result.push_back(std::move(p));
    result_pivot.push_back(c);
  }
  return result;
}

Z4Vector z4_reduce(Z4Vector v, const std::vector<Z4Vector>& howell) {
  auto pivot = [](const Z4Vector& row) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    return c;
  };
  std::vector<const Z4Vector*> order;
  for (const auto& row : howell) {
    if (row.size() != v.size()) fail(Errc::dimension_mismatch, "z4_reduce: row length mismatch");
    order.push_back(&row);
  }
  std::sort(order.begin(), order.end(), [&](auto* a, auto* b) { return pivot(*a) < pivot(*b); });
  for (const auto* row : order) {
    const std::size_t c = pivot(*row);
    if (c == row->size()) continue;
    const unsigned t = (*row)[c] == 1 ? v[c] : v[c] / 2u;
    if (t) axpy(v, t, *row);
  }
  return v;
}

std::optional<Z4SolutionSpace> z4_solution_space(const Z4Matrix& a, const Z4Vector& b, const ParityMask& mask) {
  check_dims(a, b, mask);
  const std::size_t n = a.cols();

  // x_i = 1 + 2 y_i at Odd positions turns the parity constraint into an
  // ordinary system in (x_free, y_odd).
  Z4Matrix t(a.rows(), n);
  Z4Vector rhs = b;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    unsigned shift = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask[c] == Parity::Odd) {
        t.set(r, c, 2 * a.get(r, c));
        shift += a.get(r, c);
      } else {
        t.set(r, c, a.get(r, c));
      }
    }
    rhs[r] = z4(int(rhs[r]) - int(shift));
  }
  auto sol = solve_unconstrained(t, rhs);
  if (!sol) return std::nullopt;

  auto to_x = [&](const Z4Vector& z, bool affine) {
    Z4Vector x(n);
    for (std::size_t c = 0; c < n; ++c)
      x[c] = mask[c] == Parity::Odd ? z4((affine ? 1 : 0) + 2 * z[c]) : z[c];
    return x;
  };

  std::vector<Z4Vector> diffs;
  for (const auto& k : sol->kernel) diffs.push_back(to_x(k, false));

  Z4SolutionSpace out;
  out.generators = z4_howell_form(std::move(diffs), n);
  out.particular = z4_reduce(to_x(sol->particular, true), out.generators);
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

std::optional<Z4Vector> z4_solve_parity(const Z4Matrix& a, const Z4Vector& b, const ParityMask& mask) {
  auto space = z4_solution_space(a, b, mask);
  if (!space) return std::nullopt;
  return std::move(space->particular);
}

}  // namespace pvform
