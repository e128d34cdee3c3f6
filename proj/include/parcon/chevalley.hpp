#pragma once

#include <map>
#include <vector>

#include "parcon/root_system.hpp"

namespace parcon {

// so(2n+1) realized as matrices preserving the symmetric form
// <v_a, v_b> = delta_{a,-b} on the index set {n,...,1,0,-1,...,-n}.
// Designated root vectors:
//   x_{e_i - e_j} = E_{i,j} - E_{-j,-i}
//   x_{e_i + e_j} = E_{i,-j} - E_{j,-i}        (i < j)
//   x_{-e_i - e_j} = E_{-j,i} - E_{-i,j}       (i < j)
//   x_{e_i} = E_{i,0} - E_{0,-i},   x_{-e_i} = E_{0,i} - E_{-i,0}
// Cartan generators h_i = E_{i,i} - E_{-i,-i}.
// Structure constants are extracted by expanding matrix commutators in this
// basis; the invariant form is the defining-representation trace form.
class LieAlgebra {
 public:
  explicit LieAlgebra(int n);

  int n() const { return n_; }
  int dim() const { return num_roots() + n_; }  // n(2n+1)
  int num_roots() const { return static_cast<int>(roots_.size()); }

  // Basis labels: [0, num_roots) root vectors in lex order of coefficients,
  // then cartan_label(1..n) for h_1..h_n.
  int root_label(const Root& r) const;
  int cartan_label(int i) const { return num_roots() + (i - 1); }
  bool is_root_label(int lab) const { return lab < num_roots(); }
  const Root& root_at(int lab) const { return roots_[lab]; }
  const std::vector<Root>& roots() const { return roots_; }

  const SparseVec& bracket_basis(int a, int b) const;
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

  Rat trace_pairing_basis(int a, int b) const;
  Rat trace_pairing(const SparseVec& x, const SparseVec& y) const;

  // Coroot of the simple root alpha_i as an element in basis coordinates.
  SparseVec coroot(int i) const;
  // Same element over the h_1..h_n coordinates only.
  std::vector<Rat> coroot_h_coords(int i) const;

 private:
  struct Entry {
    int r, c;
    long v;
  };
  using Mat = std::vector<Entry>;

  int idx(int a) const { return n_ - a; }  // index a in {n..-n} -> row 0..2n
  Mat matrix_of_root(const Root& r) const;
  SparseVec expand(const std::map<std::pair<int, int>, long>& entries) const;

  int n_;
  std::vector<Root> roots_;       // all 2n^2 roots, lex sorted
  std::map<Root, int> root_idx_;
  std::vector<Mat> mats_;         // per basis label
  std::vector<SparseVec> table_;  // bracket table, dim*dim
};

}  // namespace parcon
