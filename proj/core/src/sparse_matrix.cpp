#include "cartan/sparse_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cartan {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  const std::size_t cols = dense.empty() ? 0 : dense.front().size();
  SparseMatrix m(dense.size(), cols);
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (dense[r][c] != 0) m.rows_[r].emplace_back(c, dense[r][c]);
    }
  }
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

void SparseMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= cols_) {
    throw std::out_of_range("matrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                            ") outside " + std::to_string(rows_.size()) + "x" + std::to_string(cols_));
  }
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& raw) {
  check_index(r, c);
  if (raw == 0) return;
  Rational value = raw;
  value.canonicalize();
  auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += value;
    if (it->second == 0) row.erase(it);
  } else {
    row.emplace(it, c, value);
  }
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  check_index(r, c);
  auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (value == 0) {
      row.erase(it);
    } else {
      it->second = value;
      it->second.canonicalize();
    }
  } else if (value != 0) {
    row.emplace(it, c, value)->second.canonicalize();
  }
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  const auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : Rational(0);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(r, v);
  }
  return t;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

IntRow to_integer_row(const SparseMatrix::Row& row) {
  Integer lcm = 1;
  for (const auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    Integer scaled = lcm / v.get_den();
    scaled *= v.get_num();
    out.emplace_back(c, std::move(scaled));
  }
  make_primitive(out);
  return out;
}

// a_lead * row - r_lead * pivot, scaled down by gcd(a_lead, r_lead). The
// leading entries cancel and are dropped.
IntRow eliminate(const IntRow& row, const IntRow& pivot) {
  const Integer& r_lead = row.front().second;
  const Integer& p_lead = pivot.front().second;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r_lead.get_mpz_t(), p_lead.get_mpz_t());
  const Integer row_scale = p_lead / g;
  const Integer pivot_scale = r_lead / g;

  IntRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1;
  std::size_t j = 1;
  Integer tmp;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, row_scale * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(pivot_scale * pivot[j].second));
      ++j;
    } else {
      tmp = row_scale * row[i].second - pivot_scale * pivot[j].second;
      if (tmp != 0) out.emplace_back(row[i].first, tmp);
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.row(a).size() < m.row(b).size();
  });

  std::vector<IntRow> pivot_by_col(m.cols());
  std::size_t result = 0;
  for (std::size_t r : order) {
    if (m.row(r).empty()) continue;
    IntRow row = to_integer_row(m.row(r));
    while (!row.empty()) {
      IntRow& pivot = pivot_by_col[row.front().first];
      if (pivot.empty()) {
        pivot = std::move(row);
        ++result;
        break;
      }
      row = eliminate(row, pivot);
    }
    if (result == std::min(m.rows(), m.cols())) break;
  }
  return result;
}

std::size_t kernel_dim(const SparseMatrix& m) { return m.cols() - rank(m); }

std::optional<std::vector<Rational>> solve(const SparseMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (const auto& [c, v] : m.row(r)) a[r][c] = v;
    a[r][cols] = rhs[r];
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = pivot_row;
    while (found < rows && a[found][c] == 0) ++found;
    if (found == rows) continue;
    std::swap(a[found], a[pivot_row]);
    const Rational inv = 1 / a[pivot_row][c];
    for (std::size_t k = c; k <= cols; ++k) a[pivot_row][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][c] == 0) continue;
      const Rational factor = a[r][c];
      for (std::size_t k = c; k <= cols; ++k) a[r][k] -= factor * a[pivot_row][k];
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (a[r][cols] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = a[i][cols];
  return x;
}

}  // namespace cartan
