#include "parcon/chevalley.hpp"

#include <algorithm>
#include <cstdlib>

#include "parcon/errors.hpp"

namespace parcon {

namespace {

// (i, si, j, sj) with i < j for a long root, j = 0 for a short one.
struct RootShape {
  int i = 0, si = 0, j = 0, sj = 0;
};

RootShape shape_of(const Root& r) {
  RootShape sh;
  for (int k = 1; k <= r.n(); ++k) {
    if (r.coeff(k) == 0) continue;
    if (sh.i == 0) {
      sh.i = k;
      sh.si = r.coeff(k);
    } else {
      sh.j = k;
      sh.sj = r.coeff(k);
    }
  }
  return sh;
}

}  // namespace

LieAlgebra::LieAlgebra(int n) : n_(n) {
  for (int i = 1; i <= n; ++i) {
    for (int sgn : {+1, -1}) roots_.push_back(Root::e(n, i, sgn));
    for (int j = i + 1; j <= n; ++j)
      for (int si : {+1, -1})
        for (int sj : {+1, -1}) roots_.push_back(Root::pair(n, i, si, j, sj));
  }
  std::sort(roots_.begin(), roots_.end());
  for (int k = 0; k < num_roots(); ++k) root_idx_[roots_[k]] = k;

  mats_.resize(dim());
  for (int k = 0; k < num_roots(); ++k) mats_[k] = matrix_of_root(roots_[k]);
  for (int i = 1; i <= n; ++i)
    mats_[cartan_label(i)] = Mat{{i, i, 1}, {-i, -i, -1}};

  table_.resize(std::size_t(dim()) * dim());
  for (int a = 0; a < dim(); ++a) {
    for (int b = a + 1; b < dim(); ++b) {
      std::map<std::pair<int, int>, long> acc;
      for (const Entry& ea : mats_[a])
        for (const Entry& eb : mats_[b]) {
          if (ea.c == eb.r) acc[{ea.r, eb.c}] += ea.v * eb.v;
          if (eb.c == ea.r) acc[{eb.r, ea.c}] -= eb.v * ea.v;
        }
      for (auto it = acc.begin(); it != acc.end();)
        it = (it->second == 0) ? acc.erase(it) : std::next(it);
      SparseVec v = expand(acc);
      table_[std::size_t(a) * dim() + b] = v;
      SparseVec neg;
      axpy(neg, Rat(-1), v);
      table_[std::size_t(b) * dim() + a] = std::move(neg);
    }
  }
}

LieAlgebra::Mat LieAlgebra::matrix_of_root(const Root& r) const {
  const RootShape sh = shape_of(r);
  if (sh.j == 0) {
    if (sh.si > 0) return Mat{{sh.i, 0, 1}, {0, -sh.i, -1}};
    return Mat{{0, sh.i, 1}, {-sh.i, 0, -1}};
  }
  if (sh.si > 0 && sh.sj < 0) return Mat{{sh.i, sh.j, 1}, {-sh.j, -sh.i, -1}};
  if (sh.si < 0 && sh.sj > 0) return Mat{{sh.j, sh.i, 1}, {-sh.i, -sh.j, -1}};
  if (sh.si > 0 && sh.sj > 0) return Mat{{sh.i, -sh.j, 1}, {sh.j, -sh.i, -1}};
  return Mat{{-sh.j, sh.i, 1}, {-sh.i, sh.j, -1}};
}

int LieAlgebra::root_label(const Root& r) const {
  auto it = root_idx_.find(r);
  if (it == root_idx_.end()) throw StructureError("unknown root: " + r.to_string());
  return it->second;
}

SparseVec LieAlgebra::expand(const std::map<std::pair<int, int>, long>& entries) const {
  std::map<std::pair<int, int>, long> rem = entries;
  SparseVec out;

  // Peel off root-vector components; each off-diagonal entry determines the
  // unique root vector whose matrix touches it.
  while (true) {
    auto it = std::find_if(rem.begin(), rem.end(),
                           [](const auto& kv) { return kv.first.first != kv.first.second; });
    if (it == rem.end()) break;
    const int a = it->first.first, b = it->first.second;
    Root cand;
    if (a > 0 && b > 0) cand = Root::pair(n_, std::min(a, b), a < b ? 1 : -1, std::max(a, b), a < b ? -1 : 1);
    else if (a < 0 && b < 0) cand = Root::pair(n_, std::min(-a, -b), -b < -a ? 1 : -1, std::max(-a, -b), -b < -a ? -1 : 1);
    else if (a > 0 && b < 0) cand = Root::pair(n_, std::min(a, -b), 1, std::max(a, -b), 1);
    else if (a < 0 && b > 0) cand = Root::pair(n_, std::min(-a, b), -1, std::max(-a, b), -1);
    else if (a > 0 && b == 0) cand = Root::e(n_, a);
    else if (a == 0 && b > 0) cand = Root::e(n_, b, -1);
    else if (a == 0 && b < 0) cand = Root::e(n_, -b);
    else cand = Root::e(n_, -a, -1);

    const int lab = root_label(cand);
    const Mat& m = mats_[lab];
    // Coefficient read at the first (defining) entry of the matrix.
    auto def = rem.find({m[0].r, m[0].c});
    if (def == rem.end()) throw StructureError("commutator expansion failed");
    const long coeff = def->second / m[0].v;
    for (const Entry& e : m) {
      rem[{e.r, e.c}] -= coeff * e.v;
      if (rem[{e.r, e.c}] == 0) rem.erase({e.r, e.c});
    }
    add_term(out, lab, Rat(coeff));
  }

  // Remaining entries must be the diagonal of a Cartan element.
  for (int i = 1; i <= n_; ++i) {
    auto it = rem.find({i, i});
    if (it == rem.end()) continue;
    const long ai = it->second;
    rem.erase(it);
    auto it2 = rem.find({-i, -i});
    if (it2 == rem.end() || it2->second != -ai)
      throw StructureError("commutator expansion: Cartan part not of h-type");
    rem.erase(it2);
    add_term(out, cartan_label(i), Rat(ai));
  }
  if (!rem.empty()) throw StructureError("commutator expansion: residual entries");
  return out;
}

const SparseVec& LieAlgebra::bracket_basis(int a, int b) const {
  return table_[std::size_t(a) * dim() + b];
}

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) axpy(out, ca * cb, bracket_basis(a, b));
  return out;
}

Rat LieAlgebra::trace_pairing_basis(int a, int b) const {
  long tr = 0;
  for (const Entry& ea : mats_[a])
    for (const Entry& eb : mats_[b])
      if (ea.c == eb.r && eb.c == ea.r) tr += ea.v * eb.v;
  return Rat(tr);
}

Rat LieAlgebra::trace_pairing(const SparseVec& x, const SparseVec& y) const {
  Rat out(0);
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out += ca * cb * trace_pairing_basis(a, b);
  return out;
}

SparseVec LieAlgebra::coroot(int i) const {
  SparseVec v;
  if (i < n_) {
    add_term(v, cartan_label(i), Rat(1));
    add_term(v, cartan_label(i + 1), Rat(-1));
  } else {
    add_term(v, cartan_label(n_), Rat(2));
  }
  return v;
}

std::vector<Rat> LieAlgebra::coroot_h_coords(int i) const {
  std::vector<Rat> v(n_, Rat(0));
  if (i < n_) {
    v[i - 1] = 1;
    v[i] = -1;
  } else {
    v[n_ - 1] = 2;
  }
  return v;
}

}  // namespace parcon
