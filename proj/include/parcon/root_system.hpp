#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parcon/rational.hpp"

namespace parcon {

// A type-B root in coordinates over the orthonormal basis e_1..e_n:
// either +-e_i (short) or +-e_i +- e_j with i != j (long).
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs);  // throws StructureError if invalid

  static std::optional<Root> try_make(std::vector<int> coeffs);
  // +-e_i ;  1-based index.
  static Root e(int n, int i, int sign = +1);
  // si*e_i + sj*e_j ; 1-based indices, signs +-1.
  static Root pair(int n, int i, int si, int j, int sj);

  int n() const { return static_cast<int>(c_.size()); }
  int coeff(int i) const { return c_[i - 1]; }  // 1-based
  const std::vector<int>& coeffs() const { return c_; }

  bool is_short() const;
  bool is_long() const { return !is_short(); }
  bool is_positive() const;  // first nonzero coefficient is +1

  Root operator-() const;
  std::vector<int> plus(const Root& other) const;  // coefficient sum, may be non-root

  bool operator==(const Root& o) const { return c_ == o.c_; }
  bool operator!=(const Root& o) const { return c_ != o.c_; }
  bool operator<(const Root& o) const { return c_ < o.c_; }  // lexicographic

  std::string to_string() const;  // e.g. "e1+e3", "e2-e5", "-e4"

 private:
  std::vector<int> c_;
};

// Weight vector over the e-basis with exact rational coordinates.
struct Weight {
  std::vector<Rat> c;

  Weight() = default;
  explicit Weight(int n) : c(n, Rat(0)) {}
  explicit Weight(const Root& r);

  int n() const { return static_cast<int>(c.size()); }
  bool is_zero() const;
  Weight& operator+=(const Weight& o);
  Weight& add_scaled(const Rat& k, const Root& r);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  Weight operator*(const Rat& k) const;
  bool operator==(const Weight& o) const { return c == o.c; }
  bool operator<(const Weight& o) const { return c < o.c; }

  std::string to_string() const;
};

enum class Regime { N_EQ_S, LE, GT };

std::string to_string(Regime r);

// All root data derived from the pair (n, s): the B_n positive roots, the
// Levi subsets for pi' = pi \ {alpha_s}, and the coroot basis of h_{pi'}.
struct ParabolicContext {
  int n = 0;
  int s = 0;
  Regime regime = Regime::N_EQ_S;

  std::vector<Root> positive_roots;  // |.| = n^2, lex sorted
  std::vector<Root> levi_positive;   // Delta+_{pi'}
  std::vector<Root> levi_negative;   // Delta-_{pi'}
  std::vector<Root> delta_pi_prime;  // Delta(pi') = Delta+ u Delta-_{pi'}, lex sorted

  std::vector<int> levi_simple;  // simple indices of pi' ascending: {1..n} \ {s}
  // coroot_basis[k] = coordinates of alpha_{levi_simple[k]}^vee over e_1..e_n
  // (2a/(a,a) as a vector, so <w, a^vee> is the plain dot product).
  std::vector<std::vector<Rat>> coroot_basis;

  // alpha_s coefficient of a root gamma in the simple-root expansion; equals
  // the sum of the first s e-coordinates.
  int radical_level(const Root& r) const;
  bool in_levi(const Root& r) const { return radical_level(r) == 0; }
  // gamma in Delta+ \ Delta+_{pi'}
  bool in_radical(const Root& r) const { return r.is_positive() && radical_level(r) > 0; }
  bool in_delta_pi_prime(const Root& r) const;
};

// Validates (n, s) and populates every derived field; DomainError on bad input.
ParabolicContext build_context(int n, int s);

// <w, alpha_i^vee> for each alpha_i in pi', ascending i; length n-1.
std::vector<Rat> weight_coordinates(const Weight& w, const ParabolicContext& ctx);

// The fundamental weight attached to alpha_s: e_1+..+e_s for s < n and
// (e_1+..+e_n)/2 for s = n.
Weight fundamental_weight_s(const ParabolicContext& ctx);

}  // namespace parcon
