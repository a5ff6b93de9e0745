#pragma once

#include "cartan/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cartan {

/// Sparse matrix over Q, stored row-wise. Each row is sorted by column and
/// never holds an explicit zero.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;
  using Row = std::vector<Entry>;

  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  /// Adds `value` to entry (r, c). Throws std::out_of_range on bad indices.
  void add(std::size_t r, std::size_t c, const Rational& value);
  void set(std::size_t r, std::size_t c, const Rational& value);
  Rational at(std::size_t r, std::size_t c) const;

  const Row& row(std::size_t r) const { return rows_.at(r); }

  SparseMatrix transpose() const;

  bool operator==(const SparseMatrix&) const = default;

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::vector<Row> rows_;
  std::size_t cols_;
};

/// Exact rank over Q. Rows are cleared to primitive integer vectors and
/// eliminated fraction-free (cross-multiplication followed by content removal),
/// so no rational arithmetic happens inside the elimination loop.
std::size_t rank(const SparseMatrix& m);

/// cols(m) - rank(m).
std::size_t kernel_dim(const SparseMatrix& m);

/// One solution of m * x = rhs (free variables set to zero), or nullopt when
/// the system is inconsistent. Dense Gauss-Jordan; meant for small systems.
std::optional<std::vector<Rational>> solve(const SparseMatrix& m, std::span<const Rational> rhs);

}  // namespace cartan
