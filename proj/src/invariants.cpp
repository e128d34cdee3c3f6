#include "parcon/invariants.hpp"

#include <algorithm>

#include "parcon/errors.hpp"
#include "parcon/matrix.hpp"

namespace parcon {

GeneratorData solve_s_of_gamma(const Root& gamma, const std::vector<Root>& S,
                               const ParabolicContext& ctx) {
  const int m = static_cast<int>(S.size());
  // sum_a q_a <a, coroot_i> = -<gamma, coroot_i> for every Levi coroot.
  RationalMatrix mat(m, m);
  for (int col = 0; col < m; ++col) {
    std::vector<Rat> wc = weight_coordinates(Weight(S[col]), ctx);
    for (int row = 0; row < m; ++row) mat.at(row, col) = wc[row];
  }
  std::vector<Rat> rhs = weight_coordinates(Weight(gamma), ctx);
  for (Rat& x : rhs) x = -x;
  auto q = mat.solve(rhs);
  if (!q) throw SingularError("S does not restrict to a basis");

  GeneratorData out;
  out.gamma = gamma;
  out.weight = Weight(gamma);
  out.degree = 1;
  for (int k = 0; k < m; ++k) {
    const Rat& qa = (*q)[k];
    if (qa.get_den() != 1 || qa < 0)
      throw NonIntegralError("q coefficient " + rat_to_string(qa) + " at " +
                             S[k].to_string() + " for " + gamma.to_string());
    out.q.push_back(qa.get_num());
    out.weight.add_scaled(qa, S[k]);
    out.degree += qa.get_num().get_si();
  }
  if (out.weight.is_zero())
    throw ZeroWeightError("gamma + s(gamma) = 0 at " + gamma.to_string());
  return out;
}

std::map<Root, long> leading_monomial(const GeneratorData& gen, const std::vector<Root>& S) {
  std::map<Root, long> mono;
  mono[gen.gamma] = 1;
  for (std::size_t k = 0; k < S.size(); ++k) {
    const long e = gen.q[k].get_si();
    if (e != 0) mono[S[k]] += e;
  }
  return mono;
}

void CharacterProduct::add(const Weight& w, int mult) {
  if (w.is_zero()) throw ZeroWeightError("character factor with zero weight");
  if (mult != 0) factors[w] += mult;
}

CharacterProduct upper_character(const std::vector<GeneratorData>& gens) {
  CharacterProduct p;
  for (const auto& g : gens) p.add(g.weight);
  return p;
}

CharacterProduct lower_character(const ParabolicContext& ctx) {
  if (ctx.n == ctx.s)
    throw RegimeError("closed-form character bound is defined only for n > s");
  CharacterProduct p;
  const Weight w = fundamental_weight_s(ctx);
  p.add(w, 2);
  p.add(w * Rat(2), ctx.n - 1 - ctx.s / 2);
  return p;
}

CountData index_and_c(const ParabolicContext& ctx, const std::vector<long>& degrees) {
  const long n = ctx.n, s = ctx.s;
  CountData out;
  out.index = n - s / 2 + 1;
  out.dim = n * n + s * (s - 1) / 2 + (n - s) * (n - s) + n - 1;
  out.c = (out.dim + out.index) / 2;
  if ((out.dim + out.index) % 2 != 0)
    throw ArithmeticError("dim + index is odd");
  const long closed = n * n + n + 3 * s * s / 4 - n * s - s / 2;
  if (out.c != closed)
    throw ArithmeticError("c mismatch: " + std::to_string(out.c) + " vs " +
                          std::to_string(closed));
  for (long d : degrees) out.sum_degrees += d;
  out.fundamental_degree = out.c - out.sum_degrees;
  return out;
}

}  // namespace parcon
