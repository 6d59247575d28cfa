#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "strathom/rational.hpp"

namespace strathom {

// Column-major sparse matrix over Q. Columns are kept sorted by row.
// Intended workloads: boundary/coboundary matrices, restriction maps and
// cobar differentials -- very sparse, entries mostly +-1.
class SparseMatQ {
 public:
  struct Entry {
    int row;
    Q val;
  };
  using Column = std::vector<Entry>;

  SparseMatQ() = default;
  SparseMatQ(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}

  static SparseMatQ identity(int n);
  static SparseMatQ zero(int rows, int cols) { return SparseMatQ(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Build-time interface; call finalize() once before use.
  void add(int r, int c, Q v);
  void finalize();

  const Column& column(int c) const { return col_[c]; }
  Q at(int r, int c) const;
  std::size_t nnz() const;
  bool is_zero() const;

  SparseMatQ transpose() const;
  SparseMatQ operator*(const SparseMatQ& rhs) const;
  SparseMatQ operator+(const SparseMatQ& rhs) const;
  SparseMatQ operator-(const SparseMatQ& rhs) const;
  SparseMatQ scaled(const Q& a) const;
  bool operator==(const SparseMatQ& rhs) const;

  // [this | rhs] and [this ; rhs]
  SparseMatQ hcat(const SparseMatQ& rhs) const;
  SparseMatQ vcat(const SparseMatQ& rhs) const;
  // Keep a subset of columns (in the given order).
  SparseMatQ select_columns(const std::vector<int>& idx) const;
  // Keep a subset of rows, renumbered 0..k-1 in the given order.
  SparseMatQ select_rows(const std::vector<int>& idx) const;

  std::vector<Q> apply(const std::vector<Q>& x) const;

  int rank() const;
  // Basis of the right kernel, as columns of a sparse matrix. Each kernel
  // column has coefficient 1 on a distinct "free" original column; when
  // free_cols is given those indices are returned in order, so solving
  // K x = y for y in the kernel is projection onto the free coordinates.
  SparseMatQ kernel_basis(std::vector<int>* free_cols = nullptr) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Column> col_;
  bool finalized_ = true;

  void require_finalized() const;
};

// Small dense matrix over Q, row-major. Used for stalk-scale cohomology
// computations where explicit bases and solves are needed.
class DenseMatQ {
 public:
  DenseMatQ() = default;
  DenseMatQ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static DenseMatQ identity(int n);
  static DenseMatQ from_sparse(const SparseMatQ& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Q& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Q& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  DenseMatQ operator*(const DenseMatQ& rhs) const;
  DenseMatQ hcat(const DenseMatQ& rhs) const;
  bool operator==(const DenseMatQ& rhs) const;

  int rank() const;
  // Columns spanning the kernel.
  DenseMatQ kernel_basis() const;
  // Solve A x = b; nullopt if inconsistent. Returns one solution.
  std::optional<std::vector<Q>> solve(const std::vector<Q>& b) const;
  // Solve A X = B columnwise; nullopt if any column is inconsistent.
  std::optional<DenseMatQ> solve(const DenseMatQ& b) const;
  std::vector<int> pivot_columns() const;

  std::vector<Q> column_vec(int c) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Q> a_;

  // Row echelon of a working copy; returns pivot (row,col) pairs.
  static std::vector<std::pair<int, int>> echelon(DenseMatQ& m);
};

}  // namespace strathom
