#include <doctest.h>

#include <random>

#include "parcon/chevalley.hpp"
#include "parcon/matrix.hpp"

using namespace parcon;

namespace {

SparseVec jacobi_residual(const LieAlgebra& g, int a, int b, int c) {
  SparseVec acc = g.bracket({{a, Rat(1)}}, g.bracket_basis(b, c));
  axpy(acc, Rat(1), g.bracket({{b, Rat(1)}}, g.bracket_basis(c, a)));
  axpy(acc, Rat(1), g.bracket({{c, Rat(1)}}, g.bracket_basis(a, b)));
  return acc;
}

}  // namespace

TEST_CASE("dimension and A2-chain structure constant") {
  const LieAlgebra g(3);
  CHECK(g.dim() == 3 * 7);
  const SparseVec v = g.bracket_basis(g.root_label(Root::pair(3, 1, +1, 2, -1)),
                                      g.root_label(Root::pair(3, 2, +1, 3, -1)));
  REQUIRE(v.size() == 1);
  CHECK(v.begin()->first == g.root_label(Root::pair(3, 1, +1, 3, -1)));
  CHECK(abs(v.begin()->second) == 1);
}

TEST_CASE("antisymmetry and grading") {
  const LieAlgebra g(3);
  for (int a = 0; a < g.dim(); ++a) CHECK(g.bracket_basis(a, a).empty());

  // [h, x_gamma] = gamma(h) x_gamma
  for (int i = 1; i <= 3; ++i)
    for (const Root& r : g.roots()) {
      const SparseVec v = g.bracket_basis(g.cartan_label(i), g.root_label(r));
      const Rat expect(r.coeff(i));
      if (expect == 0)
        CHECK(v.empty());
      else {
        REQUIRE(v.size() == 1);
        CHECK(v.begin()->first == g.root_label(r));
        CHECK(v.begin()->second == expect);
      }
    }

  // [g_a, g_b] lands in g_{a+b} (or the Cartan for b = -a).
  for (const Root& a : g.roots())
    for (const Root& b : g.roots()) {
      const SparseVec v = g.bracket_basis(g.root_label(a), g.root_label(b));
      auto sum = Root::try_make(a.plus(b));
      for (const auto& [lab, coef] : v) {
        (void)coef;
        if (g.is_root_label(lab)) {
          REQUIRE(sum.has_value());
          CHECK(g.root_at(lab) == *sum);
        } else {
          CHECK(b == -a);
        }
      }
    }
}

TEST_CASE("short coroot bracket acts as e_2 pairing") {
  const LieAlgebra g(3);
  const SparseVec h = g.bracket_basis(g.root_label(Root::e(3, 2)), g.root_label(-Root::e(3, 2)));
  REQUIRE(!h.empty());
  // ad-action on x_{e1-e2} must scale by (e1-e2)(h) = -coefficient of h_2.
  const SparseVec act = g.bracket(h, {{g.root_label(Root::pair(3, 1, +1, 2, -1)), Rat(1)}});
  REQUIRE(act.size() == 1);
  CHECK(act.begin()->second == Rat(-1));
}

TEST_CASE("full Jacobi identity for small ranks") {
  for (int n : {2, 3, 4}) {
    const LieAlgebra g(n);
    bool ok = true;
    for (int a = 0; a < g.dim() && ok; ++a)
      for (int b = a + 1; b < g.dim() && ok; ++b)
        for (int c = b + 1; c < g.dim() && ok; ++c)
          ok = jacobi_residual(g, a, b, c).empty();
    CHECK(ok);
  }
}

TEST_CASE("sampled Jacobi identity for larger ranks") {
  for (int n : {5, 6}) {
    const LieAlgebra g(n);
    std::mt19937_64 rng(17 + n);
    bool ok = true;
    for (int t = 0; t < 10000 && ok; ++t) {
      const int a = int(rng() % g.dim());
      const int b = int(rng() % g.dim());
      const int c = int(rng() % g.dim());
      ok = jacobi_residual(g, a, b, c).empty();
    }
    CHECK(ok);
  }
}

TEST_CASE("trace form orthogonality and nondegeneracy") {
  const LieAlgebra g(3);
  for (const Root& a : g.roots())
    for (const Root& b : g.roots()) {
      const Rat v = g.trace_pairing_basis(g.root_label(a), g.root_label(b));
      if (b == -a)
        CHECK(v != 0);
      else
        CHECK(v == 0);
    }
  for (const Root& a : g.roots())
    for (int i = 1; i <= 3; ++i)
      CHECK(g.trace_pairing_basis(g.root_label(a), g.cartan_label(i)) == 0);

  RationalMatrix gram(g.dim(), g.dim());
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b) gram.at(a, b) = g.trace_pairing_basis(a, b);
  CHECK(gram.rank() == g.dim());
}

TEST_CASE("trace form invariance on random triples") {
  const LieAlgebra g(4);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    SparseVec x, y, z;
    for (int k = 0; k < 4; ++k) {
      add_term(x, int(rng() % g.dim()), Rat(long(rng() % 7) - 3));
      add_term(y, int(rng() % g.dim()), Rat(long(rng() % 7) - 3));
      add_term(z, int(rng() % g.dim()), Rat(long(rng() % 7) - 3));
    }
    CHECK(g.trace_pairing(g.bracket(x, y), z) == g.trace_pairing(x, g.bracket(y, z)));
  }
}

TEST_CASE("coroot pairings reproduce the Cartan integers") {
  const LieAlgebra g(4);
  for (int i = 1; i <= 4; ++i) {
    const Root alpha = (i < 4) ? Root::pair(4, i, +1, i + 1, -1) : Root::e(4, i);
    const SparseVec act = g.bracket(g.coroot(i), {{g.root_label(alpha), Rat(1)}});
    REQUIRE(act.size() == 1);
    CHECK(act.begin()->second == Rat(2));  // <alpha, alpha^vee> = 2
  }
}
