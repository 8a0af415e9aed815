#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rhc/rational.hpp"

namespace rhc {

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column, no zeros

struct Echelon;

// Immutable-after-construction sparse matrix over the rationals, row-major.
// All eliminations use deterministic pivoting (first nonzero in row-major
// order), so every derived basis is canonical: two runs on the same input
// produce identical output.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Insertion keeps the row sorted; zero values are dropped.
  void set(int r, int c, const Rational& v);
  Rational get(int r, int c) const;
  const SparseRow& row(int r) const { return data_[r]; }

  int nnz() const;
  bool is_zero() const;

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const Rational& c) const;
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

  // Block-diagonal sum.
  static SparseMatrix direct_sum(const SparseMatrix& a, const SparseMatrix& b);
  // [A; B] stacked vertically (equal column counts).
  static SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b);
  // [A B] side by side (equal row counts).
  static SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);

  // Writes the given matrix into this one with its top-left corner at (r0, c0).
  void insert_block(int r0, int c0, const SparseMatrix& block);

  std::vector<Rational> apply(const std::vector<Rational>& x) const;  // A*x

  // Reduced row echelon form together with the pivot columns.
  Echelon echelon() const;

  int rank() const;

  // Canonical basis of the null space {x : Ax = 0}, one matrix row per basis
  // vector; rows are in reduced echelon form after a sign/ordering
  // normalization (free variable set to 1, listed by increasing free column).
  SparseMatrix kernel_basis() const;

  // Canonical basis of the column space, one row per basis vector
  // (the reduced echelon basis of the transpose's row space).
  SparseMatrix image_basis() const;

  // One solution of Ax = b, if consistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

 private:
  int rows_, cols_;
  std::vector<SparseRow> data_;
};

struct Echelon {
  SparseMatrix rref;
  std::vector<int> pivot_cols;
};

SparseRow add_rows(const SparseRow& a, const SparseRow& b, const Rational& b_scale);

}  // namespace rhc
