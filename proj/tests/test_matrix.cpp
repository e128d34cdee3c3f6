#include <doctest.h>

#include <random>

#include "parcon/errors.hpp"
#include "parcon/matrix.hpp"

using namespace parcon;

namespace {

// Independent oracle: cofactor expansion, correct by construction for small n.
Rat cofactor_det(const RationalMatrix& m, std::vector<int> rows, std::vector<int> cols) {
  if (rows.empty()) return Rat(1);
  Rat acc(0);
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Rat& pivot = m.at(rows[0], cols[k]);
    if (pivot != 0) {
      std::vector<int> sub_rows(rows.begin() + 1, rows.end());
      std::vector<int> sub_cols;
      for (std::size_t l = 0; l < cols.size(); ++l)
        if (l != k) sub_cols.push_back(cols[l]);
      acc += Rat(sign) * pivot * cofactor_det(m, sub_rows, sub_cols);
    }
    sign = -sign;
  }
  return acc;
}

Rat cofactor_det(const RationalMatrix& m) {
  std::vector<int> idx;
  for (int i = 0; i < m.rows(); ++i) idx.push_back(i);
  return cofactor_det(m, idx, idx);
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + int(rng() % 5);
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = Rat(long(rng() % 19) - 9, 1 + long(rng() % 3));
    CHECK(m.determinant() == cofactor_det(m));
  }
}

TEST_CASE("rank of products of rectangular matrices is bounded by inner size") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int a = 2 + int(rng() % 4), b = 1 + int(rng() % 3), c = 2 + int(rng() % 4);
    RationalMatrix x(a, b), y(b, c), z(a, c);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) x.at(i, j) = Rat(long(rng() % 7) - 3);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < c; ++j) y.at(i, j) = Rat(long(rng() % 7) - 3);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < c; ++j) {
        Rat acc(0);
        for (int k = 0; k < b; ++k) acc += x.at(i, k) * y.at(k, j);
        z.at(i, j) = acc;
      }
    CHECK(z.rank() <= b);
  }
}

TEST_CASE("solve returns the exact solution and rejects singular systems") {
  RationalMatrix m(2, 2);
  m.at(0, 0) = -1;
  m.at(0, 1) = 0;
  m.at(1, 0) = 1;
  m.at(1, 1) = 2;
  auto x = m.solve({Rat(1), Rat(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(-1));
  CHECK((*x)[1] == Rat(1));

  RationalMatrix sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 2;
  sing.at(1, 0) = 2;
  sing.at(1, 1) = 4;
  CHECK(!sing.solve({Rat(1), Rat(0)}).has_value());
  CHECK(sing.rank() == 1);
  CHECK(sing.determinant() == 0);
}

TEST_CASE("h_stack extends the column space") {
  RationalMatrix m(3, 1);
  m.at(0, 0) = 1;
  RationalMatrix e(3, 2);
  e.at(1, 0) = 1;
  e.at(2, 1) = 1;
  CHECK(m.rank() == 1);
  CHECK(m.h_stack(e).rank() == 3);
}

TEST_CASE("row echelon accumulates rank and ignores dependent rows") {
  RowEchelon ech(4);
  CHECK(ech.add_row({{0, Rat(2)}, {2, Rat(1)}}));
  CHECK(ech.add_row({{1, Rat(1)}}));
  CHECK(!ech.add_row({{0, Rat(4)}, {1, Rat(3)}, {2, Rat(2)}}));
  CHECK(ech.rank() == 2);
  CHECK(ech.add_row({{3, Rat(-5)}}));
  CHECK(ech.rank() == 3);
}

TEST_CASE("floor division follows the floor convention on negatives") {
  CHECK(floor_div(-1, 2) == -1);
  CHECK(floor_div(1, 2) == 0);
  CHECK(floor_div(-4, 2) == -2);
  CHECK(floor_div(-3, 2) == -2);
  CHECK(floor_div(5, 3) == 1);
}
