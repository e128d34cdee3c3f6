#pragma once

#include <vector>

#include "parcon/chevalley.hpp"
#include "parcon/matrix.hpp"
#include "parcon/root_system.hpp"

namespace parcon {

// The contracted algebra attached to a parabolic context: the Levi action is
// unchanged while the nilpotent radical becomes an abelian ideal.
//
// Two variants share the construction:
//   * full Cartan (h_1..h_n): the whole contraction, used for the centre
//     self-test;
//   * Levi coroots only: the derived contraction, which carries the
//     coadjoint action on its dual realized inside the opposite parabolic.
//
// Primal basis: x_gamma for gamma in Delta(pi') (lex order), then the Cartan
// block. Dual basis: x_{-gamma} in the same order, then the same Cartan block;
// the two sides pair via the trace form.
class ContractionAlgebra {
 public:
  ContractionAlgebra(const ParabolicContext& ctx, const LieAlgebra& g,
                     bool full_cartan);

  const ParabolicContext& ctx() const { return *ctx_; }
  const LieAlgebra& g() const { return *g_; }

  int dim() const { return num_roots() + num_cartan(); }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_cartan() const { return static_cast<int>(cartan_h_.size()); }
  int cartan_offset() const { return num_roots(); }

  const std::vector<Root>& roots() const { return roots_; }
  int root_label(const Root& r) const;
  bool is_root_label(int lab) const { return lab < num_roots(); }
  const Root& root_at(int lab) const { return roots_[lab]; }
  // x_gamma with gamma in Delta+ \ Delta+_{pi'}
  bool label_in_radical(int lab) const;

  // Contracted bracket.
  const SparseVec& bracket_basis(int a, int b) const;
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

  // Bracket of the (uncontracted) parabolic subalgebra on the same basis.
  SparseVec parabolic_bracket_basis(int a, int b) const;

  // --- dual side -----------------------------------------------------------

  // y = sum over the support of x_{-gamma}; SupportError if any root is
  // outside Delta(pi').
  SparseVec dual_from_support(const std::vector<Root>& support) const;

  // Coadjoint action of the basis element lab on a dual element.
  SparseVec coadjoint_basis(int lab, const SparseVec& y_dual) const;

  // Matrix of b -> ad^* b (y): columns over the primal basis, rows over the
  // dual basis.
  RationalMatrix coadjoint_matrix(const std::vector<Root>& support) const;
  RationalMatrix coadjoint_matrix_dual(const SparseVec& y_dual) const;

  // Trace-form pairing between a dual element and a primal element.
  Rat pair_dual_primal(const SparseVec& dual, const SparseVec& primal) const;

  // Dimension of the kernel of the adjoint representation.
  int centre_dimension() const;

 private:
  SparseVec to_g(int lab) const;  // basis element as a g element
  // Expand a g element whose root part lies in Delta(pi') and whose Cartan
  // part lies in the span of the Cartan block; StructureError otherwise.
  SparseVec from_g_exact(const SparseVec& gv) const;
  // Cartan h-coordinate vector -> coordinates over the Cartan block
  // (exact; StructureError when outside the span).
  std::vector<Rat> expand_cartan(const std::vector<Rat>& h) const;
  // Component of an h vector in the Levi-coroot span, discarding the
  // h^{pi \ pi'} part.
  std::vector<Rat> project_cartan(const std::vector<Rat>& h) const;

  const ParabolicContext* ctx_;
  const LieAlgebra* g_;
  bool full_cartan_;
  std::vector<Root> roots_;  // Delta(pi'), lex
  std::map<Root, int> root_idx_;
  std::vector<bool> radical_;
  std::vector<std::vector<Rat>> cartan_h_;  // Cartan block over h_1..h_n
  RationalMatrix cartan_solver_;            // [cartan block | h^{pi\pi'}] square
  std::vector<SparseVec> table_;            // contracted bracket table
  std::vector<Rat> dual_root_pairing_;      // K(x_{-gamma}, x_gamma) per slot
  RationalMatrix cartan_gram_;              // trace form on the Cartan block
};

}  // namespace parcon
