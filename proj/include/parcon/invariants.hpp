#pragma once

#include <map>
#include <vector>

#include "parcon/root_system.hpp"

namespace parcon {

// Data of one homogeneous generator attached to gamma in T: the multiplicity
// vector q over S solving gamma + sum q_a a = 0 on h_{pi'}, the resulting
// weight gamma + s(gamma), and the degree 1 + |q|.
struct GeneratorData {
  Root gamma;
  std::vector<Int> q;  // over S in lex order
  Weight weight;
  long degree = 0;
};

// Solves the (n-1)x(n-1) system exactly. NonIntegralError if some q is
// negative or fractional, ZeroWeightError if gamma + s(gamma) = 0.
GeneratorData solve_s_of_gamma(const Root& gamma, const std::vector<Root>& S,
                               const ParabolicContext& ctx);

// Exponent map of the leading monomial x_gamma * prod x_a^{q_a}.
std::map<Root, long> leading_monomial(const GeneratorData& gen, const std::vector<Root>& S);

// Finite product prod (1 - e^{weight})^{-exponent} represented by its factor
// multiset; factors with zero weight are rejected.
struct CharacterProduct {
  std::map<Weight, int> factors;

  void add(const Weight& w, int mult = 1);
  bool operator==(const CharacterProduct& o) const { return factors == o.factors; }
};

CharacterProduct upper_character(const std::vector<GeneratorData>& gens);
// (1-e^{w_s})^{-2} (1-e^{2 w_s})^{-(n-1-s/2)}; RegimeError when n == s.
CharacterProduct lower_character(const ParabolicContext& ctx);

struct CountData {
  long index = 0;
  long dim = 0;
  long c = 0;
  long sum_degrees = 0;
  long fundamental_degree = 0;  // c - sum_degrees, expected 0
};

// index = n - s/2 + 1, dim = dim of the derived contraction, c = (dim+index)/2
// cross-checked against n^2 + n + 3s^2/4 - ns - s/2 (ArithmeticError on
// mismatch).
CountData index_and_c(const ParabolicContext& ctx, const std::vector<long>& degrees);

}  // namespace parcon
