#pragma once

#include <map>
#include <optional>
#include <vector>

#include "parcon/rational.hpp"

namespace parcon {

// Dense matrix over exact rationals. Rank and determinant clear denominators
// row-wise and run fraction-free (Bareiss) elimination over the integers, so
// every intermediate value is a minor of the scaled matrix.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  int rank() const;
  Rat determinant() const;

  // Exact solve of (*this) x = rhs for a square matrix; nullopt if singular.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& rhs) const;

  // Columns of *this followed by the columns of other (same row count).
  RationalMatrix h_stack(const RationalMatrix& other) const;

  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Streaming exact row-echelon accumulator with sparse rows. Feeding rows one
// at a time and stopping at full rank keeps kernel-dimension checks cheap.
class RowEchelon {
 public:
  explicit RowEchelon(int cols) : cols_(cols) {}

  // Returns true when the row was independent of the rows seen so far.
  bool add_row(SparseVec row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

 private:
  int cols_;
  std::vector<SparseVec> rows_;      // reduced; leading coefficient 1
  std::map<int, int> pivot_to_row_;  // pivot column -> index into rows_
};

}  // namespace parcon
