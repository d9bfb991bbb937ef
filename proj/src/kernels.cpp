#include "divcert/kernels.hpp"

#include <utility>

#include "divcert/error.hpp"

namespace divcert {

namespace {

// Swaps the pivot into place and scales it to 1. Returns false if the column
// has no pivot at or below `pivot_row`.
bool prepare_pivot(RationalMatrix& m, std::size_t pivot_row, std::size_t col) {
  std::size_t r = pivot_row;
  while (r < m.rows() && m(r, col) == 0) ++r;
  if (r == m.rows()) return false;
  if (r != pivot_row)
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r, c), m(pivot_row, c));
  Rational inv = 1 / m(pivot_row, col);
  for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;
  return true;
}

void eliminate_row(RationalMatrix& m, std::size_t row, std::size_t pivot_row, std::size_t col) {
  if (row == pivot_row || m(row, col) == 0) return;
  Rational factor = m(row, col);
  for (std::size_t c = col; c < m.cols(); ++c)
    if (m(pivot_row, c) != 0) m(row, c) -= factor * m(pivot_row, c);
}

}  // namespace

EchelonForm rref_serial(RationalMatrix m) {
  EchelonForm out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    if (!prepare_pivot(m, pivot_row, col)) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) eliminate_row(m, r, pivot_row, col);
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

EchelonForm rref_parallel(RationalMatrix m) {
  EchelonForm out;
  std::size_t pivot_row = 0;
  const long rows = static_cast<long>(m.rows());
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    if (!prepare_pivot(m, pivot_row, col)) continue;
#pragma omp parallel for schedule(dynamic, 4)
    for (long r = 0; r < rows; ++r) eliminate_row(m, static_cast<std::size_t>(r), pivot_row, col);
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

EchelonForm rref(RationalMatrix m) { return rref_parallel(std::move(m)); }

std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::InvalidParameter, "right-hand side has wrong length");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  EchelonForm e = rref(std::move(aug));
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
    std::size_t col = e.pivot_columns[i];
    if (col == a.cols()) return std::nullopt;
    x[col] = e.reduced(i, a.cols());
  }
  return x;
}

Polynomial determinant(const PolynomialMatrix& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Polynomial det(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolynomialMatrix sub;
    sub.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * determinant(sub, ring);
    if (j % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace {

Polynomial minor_at(const PolynomialMatrix& m, const RingPtr& ring, const std::vector<int>& rows, const std::vector<int>& cols) {
  PolynomialMatrix sub;
  sub.reserve(rows.size());
  for (int r : rows) {
    std::vector<Polynomial> row;
    row.reserve(cols.size());
    for (int c : cols) row.push_back(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    sub.push_back(std::move(row));
  }
  return determinant(sub, ring);
}

int column_count(const PolynomialMatrix& m) { return m.empty() ? 0 : static_cast<int>(m.front().size()); }

}  // namespace

std::vector<Polynomial> minors_serial(const PolynomialMatrix& m, const RingPtr& ring, int r) {
  auto row_sets = combinations(static_cast<int>(m.size()), r);
  auto col_sets = combinations(column_count(m), r);
  std::vector<Polynomial> out;
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& rows : row_sets)
    for (const auto& cols : col_sets) out.push_back(minor_at(m, ring, rows, cols));
  return out;
}

std::vector<Polynomial> minors_parallel(const PolynomialMatrix& m, const RingPtr& ring, int r) {
  auto row_sets = combinations(static_cast<int>(m.size()), r);
  auto col_sets = combinations(column_count(m), r);
  const long total = static_cast<long>(row_sets.size() * col_sets.size());
  std::vector<Polynomial> out(static_cast<std::size_t>(total), Polynomial(ring));
  const long per_row = static_cast<long>(col_sets.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < total; ++i)
    out[static_cast<std::size_t>(i)] =
        minor_at(m, ring, row_sets[static_cast<std::size_t>(i / per_row)], col_sets[static_cast<std::size_t>(i % per_row)]);
  return out;
}

}  // namespace divcert
