#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "parcon/contraction.hpp"
#include "parcon/matrix.hpp"
#include "parcon/root_system.hpp"

namespace parcon {

// The support of y, partitioned by the sign pattern of the attached
// Heisenberg families: mixed / positive-only / negative-only.
struct SPartition {
  std::vector<Root> mixed, plus, minus;
  std::vector<Root> all() const;  // lex sorted
};

SPartition build_S(const ParabolicContext& ctx);

// Rows are weight_coordinates of the elements of S (lex order).
RationalMatrix s_basis_matrix(const std::vector<Root>& S, const ParabolicContext& ctx);
// True iff S restricted to h_{pi'} is a basis (exact determinant nonzero).
bool check_S_basis(const std::vector<Root>& S, const ParabolicContext& ctx);

struct HeisenbergFamily {
  Root centre;
  char sign_type = '?';  // '+', '-', 'm'
  std::vector<Root> members;  // includes the centre; lex sorted
};

struct HeisenbergData {
  std::vector<HeisenbergFamily> families;  // ordered by centre, lex
  std::map<Root, Root> theta;              // involution on O
  std::map<Root, Root> centre_of;          // O-root -> centre of its family
  std::vector<Root> O;                     // union of punctured families, lex
  char sign_of(const Root& alpha) const;   // sign type of alpha's family
};

// Builds the seven family shapes for n > s and validates each as a Heisenberg
// set (unique complement summing to the centre). RegimeError when n == s;
// StructureError on any structural violation.
HeisenbergData build_heisenberg_family(const ParabolicContext& ctx, const SPartition& sp);

// n > s: complement of the family union inside Delta(pi').
// n == s: the explicit list {e_{s-1}+e_s} u {e_{2i-1}-e_{2i}}.
// CardinalityError if |T| != n - s/2 + 1.
std::vector<Root> build_T(const ParabolicContext& ctx, const HeisenbergData* fam);

// Exact solution of gamma(h) = 1 for all gamma in S, over the coroot basis of
// pi'; SingularError when the system is singular.
std::vector<Rat> solve_h(const std::vector<Root>& S, const ParabolicContext& ctx);

struct OInfo {
  int cls = 0;                  // |S_alpha| in {1,2,3}
  std::vector<Root> s_alpha;    // lex sorted
  std::optional<Root> tilde;    // O2: theta(alpha); O3: the chosen witness
};

struct OClassification {
  std::map<Root, OInfo> info;
  std::vector<Root> o3;      // lex
  std::set<Root> excluded;   // witnesses and their partners (never sequenced)
};

// Bulk classification of every root of O. Does not throw; structural
// violations surface through classify_root / verify_conditions.
OClassification classify_O(const ParabolicContext& ctx, const HeisenbergData& fam,
                           const std::vector<Root>& S);

// Single-root view with the error contract: ConditionCError when
// {alpha, theta(alpha)} lies entirely in the radical, ConditionCPrimeError
// when |S_alpha| is not in {1,2,3} or the O3 witness is missing.
OInfo classify_root(const Root& alpha, const ParabolicContext& ctx,
                    const HeisenbergData& fam, const OClassification& cls);

struct StationaryResult {
  bool stationary = false;
  bool cyclic = false;
  int rank_direct = -1;    // rank of the sequence started at alpha
  int rank_partner = -1;   // rank of the sequence started at theta(alpha)
  int cycle_length = -1;
  bool ambiguous = false;  // a step had more than one admissible successor
};

// Runs both sequences attached to alpha. Requires alpha not to be a witness
// or a witness partner of an O3 root (StructureError otherwise);
// SequenceError if a step has no admissible successor.
StationaryResult is_stationary(const Root& alpha, const ParabolicContext& ctx,
                               const HeisenbergData& fam, const OClassification& cls);

// One step of the sequence engine: the term following cur.
Root sequence_step(const Root& cur, const ParabolicContext& ctx,
                   const HeisenbergData& fam, const OClassification& cls,
                   bool* ambiguous);

struct CheckOutcome {
  bool pass = true;
  std::vector<std::string> counterexamples;
  void fail(const std::string& s) {
    pass = false;
    if (counterexamples.size() < 8) counterexamples.push_back(s);
  }
};

struct ConditionReport {
  CheckOutcome condition_C;
  CheckOutcome condition_Cprime;
  CheckOutcome o_plus_locality;
  CheckOutcome o_minus_locality;
  CheckOutcome stationarity;   // every root of O^m stationary
  CheckOutcome witness_shape;  // O3 witnesses match the e_u+e_v pattern
  int o3_count = 0;
  int cyclic_count = 0;        // cyclic roots seen anywhere in O
  int ambiguous_count = 0;
};

ConditionReport verify_conditions(const ParabolicContext& ctx, const HeisenbergData& fam,
                                  const std::vector<Root>& S, const OClassification& cls);

struct ChainGraph {
  std::vector<Root> vertices;               // chain and attached witnesses, lex
  std::vector<std::pair<int, int>> edges;   // i < j index pairs
  std::vector<std::pair<int, int>> theta_edges;
};

// The chain through alpha together with the witness pendants of its O3
// members; alpha must be stationary.
ChainGraph chain_of(const Root& alpha, const ParabolicContext& ctx,
                    const HeisenbergData& fam, const OClassification& cls);

struct MatchingResult {
  int matchings = 0;       // counted with early exit at 2
  bool unique_theta = false;
};

// True result iff the pairing by theta is the unique perfect matching of the
// chain graph.
MatchingResult verify_chain_matching(const Root& alpha, const ParabolicContext& ctx,
                                     const HeisenbergData& fam, const OClassification& cls);

struct ChainSweep {
  CheckOutcome all_unique;
  int chains = 0;
  int cyclic_chains = 0;
  std::vector<ChainGraph> graphs;  // one per processed chain
};

// Runs the matching check over every stationary chain (each chain once).
ChainSweep sweep_chains(const ParabolicContext& ctx, const HeisenbergData& fam,
                        const OClassification& cls);

std::string chain_to_dot(const ChainGraph& g, const std::string& name);

}  // namespace parcon
