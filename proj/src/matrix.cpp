#include "parcon/matrix.hpp"

#include <utility>

#include "parcon/errors.hpp"

namespace parcon {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, Rat(0)) {}

namespace {

// Denominator-cleared integer copy; rescaling rows preserves rank and scales
// the determinant by a known factor.
std::vector<Int> integer_copy(const RationalMatrix& m, Rat* det_scale) {
  std::vector<Int> out(std::size_t(m.rows()) * m.cols());
  Rat scale(1);
  for (int i = 0; i < m.rows(); ++i) {
    Int lcm(1);
    for (int j = 0; j < m.cols(); ++j) {
      const Rat& x = m.at(i, j);
      if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    scale *= Rat(lcm);
    for (int j = 0; j < m.cols(); ++j) {
      Rat v = m.at(i, j) * Rat(lcm);
      out[std::size_t(i) * m.cols() + j] = v.get_num();  // denominator is 1
    }
  }
  if (det_scale) *det_scale = scale;
  return out;
}

Int exact_div(const Int& a, const Int& b) {
  Int q;
  if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0)
    throw ArithmeticError("fraction-free elimination: inexact division");
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Fraction-free elimination in place; returns the pivot count and, for square
// input consuming every column, leaves the determinant in the last pivot.
struct BareissResult {
  int rank = 0;
  Int last_pivot = 0;
  int sign = 1;
};

BareissResult bareiss(std::vector<Int>& m, int rows, int cols) {
  auto at = [&](int i, int j) -> Int& { return m[std::size_t(i) * cols + j]; };
  BareissResult res;
  Int prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (at(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
      res.sign = -res.sign;
    }
    const Int piv = at(r, c);
    for (int i = r + 1; i < rows; ++i) {
      const Int mic = at(i, c);
      for (int j = c + 1; j < cols; ++j)
        at(i, j) = exact_div(at(i, j) * piv - mic * at(r, j), prev);
      at(i, c) = 0;
    }
    prev = piv;
    res.last_pivot = piv;
    ++r;
  }
  res.rank = r;
  return res;
}

}  // namespace

int RationalMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<Int> m = integer_copy(*this, nullptr);
  return bareiss(m, rows_, cols_).rank;
}

Rat RationalMatrix::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  if (rows_ == 0) return Rat(1);
  Rat scale;
  std::vector<Int> m = integer_copy(*this, &scale);
  BareissResult res = bareiss(m, rows_, cols_);
  if (res.rank < rows_) return Rat(0);
  Rat det(res.last_pivot);
  det *= res.sign;
  det /= scale;
  det.canonicalize();
  return det;
}

std::optional<std::vector<Rat>> RationalMatrix::solve(const std::vector<Rat>& rhs) const {
  if (rows_ != cols_ || static_cast<int>(rhs.size()) != rows_)
    throw DomainError("solve: shape mismatch");
  const int n = rows_;
  // Gauss-Jordan over the rationals on the augmented matrix.
  std::vector<Rat> m(std::size_t(n) * (n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[std::size_t(i) * (n + 1) + j] = at(i, j);
    m[std::size_t(i) * (n + 1) + n] = rhs[i];
  }
  auto at2 = [&](int i, int j) -> Rat& { return m[std::size_t(i) * (n + 1) + j]; };
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (at2(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;
    if (p != c)
      for (int j = 0; j <= n; ++j) std::swap(at2(p, j), at2(c, j));
    const Rat piv = at2(c, c);
    for (int j = 0; j <= n; ++j) at2(c, j) /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == c || at2(i, c) == 0) continue;
      const Rat f = at2(i, c);
      for (int j = 0; j <= n; ++j) at2(i, j) -= f * at2(c, j);
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = at2(i, n);
  return x;
}

RationalMatrix RationalMatrix::h_stack(const RationalMatrix& other) const {
  if (rows_ != other.rows_) throw DomainError("h_stack: row count mismatch");
  RationalMatrix out(rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

bool RowEchelon::add_row(SparseVec row) {
  while (!row.empty()) {
    const int pivot = row.begin()->first;
    auto it = pivot_to_row_.find(pivot);
    if (it == pivot_to_row_.end()) {
      const Rat lead = row.begin()->second;
      for (auto& [j, v] : row) v /= lead;
      pivot_to_row_[pivot] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    const Rat f = row.begin()->second;
    axpy(row, -f, rows_[it->second]);
  }
  return false;
}

}  // namespace parcon
