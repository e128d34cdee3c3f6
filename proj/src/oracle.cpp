#include "parcon/oracle.hpp"

#include <algorithm>
#include <random>

#include "parcon/errors.hpp"

namespace parcon {

namespace {

// Bias-free enough for genericity and, unlike std::uniform_int_distribution,
// identical on every platform.
long draw_in(std::mt19937_64& rng, long bound) {
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  return static_cast<long>(rng() % span) - bound;
}

}  // namespace

IndexEstimate generic_index(int dim, const std::function<SparseVec(int, int)>& bracket,
                            int trials, std::uint64_t seed, long bound) {
  if (trials < 1) throw DomainError("trials must be at least 1");
  IndexEstimate est;

  // Structure data gathered once: nonzero brackets with their coordinates.
  std::vector<std::tuple<int, int, int, Rat>> entries;  // (i, j, k, c^k_{ij}) for i < j
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (const auto& [k, v] : bracket(i, j)) entries.emplace_back(i, j, k, v);

  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(mix_seed(seed, 0x0f, static_cast<std::uint64_t>(t)));
    std::vector<Rat> f(dim);
    for (int k = 0; k < dim; ++k) f[k] = Rat(draw_in(rng, bound));
    RationalMatrix m(dim, dim);
    for (const auto& [i, j, k, c] : entries) {
      const Rat v = c * f[k];
      m.at(i, j) += v;
      m.at(j, i) -= v;
    }
    est.ranks.push_back(m.rank());
  }
  est.best_rank = *std::max_element(est.ranks.begin(), est.ranks.end());
  est.agreeing = static_cast<int>(std::count(est.ranks.begin(), est.ranks.end(), est.best_rank));
  est.index = dim - est.best_rank;
  return est;
}

RegularityResult regularity_and_complement(const ContractionAlgebra& ca,
                                           const std::vector<Root>& S,
                                           const std::vector<Root>& T) {
  RegularityResult res;
  const RationalMatrix m = ca.coadjoint_matrix(S);
  res.rank = m.rank();
  res.rank_ok = res.rank == ca.dim() - static_cast<int>(T.size());

  RationalMatrix slice(ca.dim(), static_cast<int>(T.size()));
  for (std::size_t k = 0; k < T.size(); ++k)
    slice.at(ca.root_label(T[k]), static_cast<int>(k)) = 1;
  res.stacked_rank = m.h_stack(slice).rank();
  res.direct_sum_ok = res.stacked_rank == ca.dim();
  return res;
}

RationalMatrix phi_restricted_matrix(const ContractionAlgebra& ca, const std::vector<Root>& O,
                                     const std::vector<Root>& support) {
  const SparseVec y = ca.dual_from_support(support);
  const int m = static_cast<int>(O.size());
  RationalMatrix phi(m, m);
  for (int a = 0; a < m; ++a) {
    const int la = ca.root_label(O[a]);
    for (int b = a + 1; b < m; ++b) {
      const Rat v = ca.pair_dual_primal(y, ca.bracket_basis(la, ca.root_label(O[b])));
      phi.at(a, b) = v;
      phi.at(b, a) = -v;
    }
  }
  return phi;
}

Rat phi_restricted_det(const ContractionAlgebra& ca, const std::vector<Root>& O,
                       const std::vector<Root>& support) {
  if (O.size() % 2 != 0)
    throw OddDimensionError("skew form on an odd-dimensional space is degenerate");
  return phi_restricted_matrix(ca, O, support).determinant();
}

}  // namespace parcon
