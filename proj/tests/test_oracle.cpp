#include <doctest.h>

#include <set>

#include "parcon/adapted_pair.hpp"
#include "parcon/errors.hpp"
#include "parcon/oracle.hpp"

using namespace parcon;

namespace {

struct Case {
  ParabolicContext ctx;
  LieAlgebra g;
  ContractionAlgebra derived;
  SPartition sp;
  std::vector<Root> S;
  std::vector<Root> T;
  std::vector<Root> O;
  Case(int n, int s)
      : ctx(build_context(n, s)), g(n), derived(ctx, g, false), sp(build_S(ctx)), S(sp.all()) {
    if (n > s) {
      const HeisenbergData fam = build_heisenberg_family(ctx, sp);
      T = build_T(ctx, &fam);
      O = fam.O;
    } else {
      T = build_T(ctx, nullptr);
    }
  }
};

}  // namespace

TEST_CASE("generic index of an abelian algebra is its dimension") {
  for (int d : {1, 4, 9}) {
    const IndexEstimate est =
        generic_index(d, [](int, int) { return SparseVec{}; }, 5, 123);
    CHECK(est.index == d);
    CHECK(est.agreeing == 5);
  }
}

TEST_CASE("generic index of the derived contraction") {
  {
    const Case c(3, 2);
    const IndexEstimate est = generic_index(
        c.derived.dim(), [&](int i, int j) { return c.derived.bracket_basis(i, j); }, 5, 7);
    CHECK(est.index == 3);
    CHECK(est.agreeing >= 3);
  }
  {
    const Case c(6, 4);
    const IndexEstimate est = generic_index(
        c.derived.dim(), [&](int i, int j) { return c.derived.bracket_basis(i, j); }, 5, 7);
    CHECK(est.index == 5);
    CHECK(est.agreeing >= 3);
  }
}

TEST_CASE("index agrees between the parabolic and its contraction") {
  for (auto [n, s] : {std::pair{3, 2}, {4, 4}, {6, 4}}) {
    const Case c(n, s);
    const IndexEstimate contracted = generic_index(
        c.derived.dim(), [&](int i, int j) { return c.derived.bracket_basis(i, j); }, 5, 11);
    const IndexEstimate plain = generic_index(
        c.derived.dim(), [&](int i, int j) { return c.derived.parabolic_bracket_basis(i, j); },
        5, 11);
    CHECK(contracted.index == n - s / 2 + 1);
    CHECK(plain.index == contracted.index);
  }
}

TEST_CASE("index estimates are seed-reproducible") {
  const Case c(4, 2);
  const auto run = [&](std::uint64_t seed) {
    return generic_index(
        c.derived.dim(), [&](int i, int j) { return c.derived.bracket_basis(i, j); }, 4, seed);
  };
  CHECK(run(99).ranks == run(99).ranks);
  CHECK(run(99).index == 4 - 1 + 1 - 0);  // n - s/2 + 1 = 4
}

TEST_CASE("regularity and complement on the worked cases") {
  {
    const Case c(3, 2);
    const RegularityResult r = regularity_and_complement(c.derived, c.S, c.T);
    CHECK(r.rank == 10);
    CHECK(r.stacked_rank == 13);
    CHECK(r.rank_ok);
    CHECK(r.direct_sum_ok);
  }
  {
    const Case c(2, 2);
    const RegularityResult r = regularity_and_complement(c.derived, c.S, c.T);
    CHECK(r.rank == 4);
    CHECK(r.stacked_rank == 6);
    CHECK(r.rank_ok);
    CHECK(r.direct_sum_ok);
  }
}

TEST_CASE("removing one support term destroys regularity") {
  const Case c(3, 2);
  std::vector<Root> chopped(c.S.begin(), c.S.end() - 1);
  const RegularityResult r = regularity_and_complement(c.derived, chopped, c.T);
  CHECK(!r.rank_ok);
}

TEST_CASE("restricted skew form on the worked cases") {
  {
    const Case c(3, 2);
    REQUIRE(c.O.size() == 6);
    CHECK(phi_restricted_det(c.derived, c.O, c.S) != 0);
    CHECK(phi_restricted_det(c.derived, c.O, {}) == 0);  // zero functional
  }
  for (auto [n, s] : {std::pair{6, 4}, {7, 6}}) {
    const Case c(n, s);
    CHECK(phi_restricted_det(c.derived, c.O, c.S) != 0);
  }
}

TEST_CASE("odd-dimensional restriction is rejected") {
  const Case c(3, 2);
  std::vector<Root> odd(c.O.begin(), c.O.end() - 1);
  CHECK_THROWS_AS(phi_restricted_det(c.derived, odd, c.S), OddDimensionError);
}

TEST_CASE("entry pattern of the restricted form") {
  const Case c(6, 4);
  const RationalMatrix phi = phi_restricted_matrix(c.derived, c.O, c.S);
  const std::set<Root> Sset(c.S.begin(), c.S.end());
  for (std::size_t a = 0; a < c.O.size(); ++a)
    for (std::size_t b = 0; b < c.O.size(); ++b) {
      if (phi.at(int(a), int(b)) == 0) continue;
      const auto sum = Root::try_make(c.O[a].plus(c.O[b]));
      REQUIRE(sum.has_value());
      CHECK(Sset.count(*sum) == 1);
      CHECK(!(c.ctx.in_radical(c.O[a]) && c.ctx.in_radical(c.O[b])));
    }
}
