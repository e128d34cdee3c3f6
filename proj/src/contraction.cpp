#include "parcon/contraction.hpp"

#include <algorithm>

#include "parcon/errors.hpp"

namespace parcon {

ContractionAlgebra::ContractionAlgebra(const ParabolicContext& ctx, const LieAlgebra& g,
                                       bool full_cartan)
    : ctx_(&ctx), g_(&g), full_cartan_(full_cartan) {
  roots_ = ctx.delta_pi_prime;
  for (int k = 0; k < num_roots(); ++k) root_idx_[roots_[k]] = k;
  radical_.resize(num_roots());
  for (int k = 0; k < num_roots(); ++k) radical_[k] = ctx.in_radical(roots_[k]);

  const int n = ctx.n;
  if (full_cartan_) {
    for (int i = 1; i <= n; ++i) {
      std::vector<Rat> v(n, Rat(0));
      v[i - 1] = 1;
      cartan_h_.push_back(std::move(v));
    }
  } else {
    for (int i : ctx.levi_simple) cartan_h_.push_back(g.coroot_h_coords(i));
    // Square system [coroot block | generator of h^{pi \ pi'}]; inverted once.
    RationalMatrix m(n, n);
    for (int col = 0; col < num_cartan(); ++col)
      for (int row = 0; row < n; ++row) m.at(row, col) = cartan_h_[col][row];
    for (int i = 1; i <= n; ++i) m.at(i - 1, n - 1) = (i <= ctx.s) ? 1 : 0;
    // Store the inverse column by column.
    cartan_solver_ = RationalMatrix(n, n);
    for (int col = 0; col < n; ++col) {
      std::vector<Rat> rhs(n, Rat(0));
      rhs[col] = 1;
      auto x = m.solve(rhs);
      if (!x) throw StructureError("Cartan splitting is singular");
      for (int row = 0; row < n; ++row) cartan_solver_.at(row, col) = (*x)[row];
    }
  }

  // Trace-form data for the dual pairing.
  dual_root_pairing_.resize(num_roots());
  for (int k = 0; k < num_roots(); ++k)
    dual_root_pairing_[k] =
        g.trace_pairing_basis(g.root_label(-roots_[k]), g.root_label(roots_[k]));
  cartan_gram_ = RationalMatrix(num_cartan(), num_cartan());
  for (int a = 0; a < num_cartan(); ++a)
    for (int b = 0; b < num_cartan(); ++b) {
      Rat acc(0);
      for (int i = 1; i <= n; ++i)
        acc += cartan_h_[a][i - 1] * cartan_h_[b][i - 1] *
               g.trace_pairing_basis(g.cartan_label(i), g.cartan_label(i));
      cartan_gram_.at(a, b) = acc;
    }

  // Contracted bracket table: the radical is abelian, everything else is the
  // ambient bracket.
  table_.resize(std::size_t(dim()) * dim());
  for (int a = 0; a < dim(); ++a)
    for (int b = a + 1; b < dim(); ++b) {
      if (!(label_in_radical(a) && label_in_radical(b)))
        table_[std::size_t(a) * dim() + b] = from_g_exact(g.bracket(to_g(a), to_g(b)));
      SparseVec neg;
      axpy(neg, Rat(-1), table_[std::size_t(a) * dim() + b]);
      table_[std::size_t(b) * dim() + a] = std::move(neg);
    }
}

int ContractionAlgebra::root_label(const Root& r) const {
  auto it = root_idx_.find(r);
  if (it == root_idx_.end())
    throw StructureError("root not in Delta(pi'): " + r.to_string());
  return it->second;
}

bool ContractionAlgebra::label_in_radical(int lab) const {
  return lab < num_roots() && radical_[lab];
}

SparseVec ContractionAlgebra::to_g(int lab) const {
  SparseVec v;
  if (is_root_label(lab)) {
    add_term(v, g_->root_label(roots_[lab]), Rat(1));
    return v;
  }
  const auto& h = cartan_h_[lab - cartan_offset()];
  for (int i = 1; i <= ctx_->n; ++i) add_term(v, g_->cartan_label(i), h[i - 1]);
  return v;
}

std::vector<Rat> ContractionAlgebra::expand_cartan(const std::vector<Rat>& h) const {
  if (full_cartan_) return h;
  const int n = ctx_->n;
  std::vector<Rat> x(n, Rat(0));
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) x[row] += cartan_solver_.at(row, col) * h[col];
  if (x[n - 1] != 0)
    throw StructureError("Cartan element outside the Levi coroot span");
  x.pop_back();
  return x;
}

std::vector<Rat> ContractionAlgebra::project_cartan(const std::vector<Rat>& h) const {
  if (full_cartan_) return h;
  const int n = ctx_->n;
  std::vector<Rat> x(n, Rat(0));
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) x[row] += cartan_solver_.at(row, col) * h[col];
  x.pop_back();  // discard the h^{pi \ pi'} coefficient
  return x;
}

SparseVec ContractionAlgebra::from_g_exact(const SparseVec& gv) const {
  SparseVec out;
  std::vector<Rat> h(ctx_->n, Rat(0));
  bool has_h = false;
  for (const auto& [lab, c] : gv) {
    if (g_->is_root_label(lab)) {
      add_term(out, root_label(g_->root_at(lab)), c);
    } else {
      h[lab - g_->cartan_label(1)] += c;
      has_h = true;
    }
  }
  if (has_h) {
    std::vector<Rat> coords = expand_cartan(h);
    for (int k = 0; k < num_cartan(); ++k) add_term(out, cartan_offset() + k, coords[k]);
  }
  return out;
}

const SparseVec& ContractionAlgebra::bracket_basis(int a, int b) const {
  return table_[std::size_t(a) * dim() + b];
}

SparseVec ContractionAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) axpy(out, ca * cb, bracket_basis(a, b));
  return out;
}

SparseVec ContractionAlgebra::parabolic_bracket_basis(int a, int b) const {
  return from_g_exact(g_->bracket(to_g(a), to_g(b)));
}

SparseVec ContractionAlgebra::dual_from_support(const std::vector<Root>& support) const {
  SparseVec y;
  for (const Root& r : support) {
    if (!ctx_->in_delta_pi_prime(r))
      throw SupportError("support root outside Delta(pi'): " + r.to_string());
    add_term(y, root_label(r), Rat(1));
  }
  return y;
}

SparseVec ContractionAlgebra::coadjoint_basis(int lab, const SparseVec& y_dual) const {
  SparseVec out;
  const bool lab_is_root = is_root_label(lab);
  const bool lab_radical = label_in_radical(lab);

  for (const auto& [slot, cy] : y_dual) {
    if (slot < num_roots()) {
      const Root& gamma = roots_[slot];
      if (lab_is_root) {
        const SparseVec gb =
            g_->bracket_basis(g_->root_label(roots_[lab]), g_->root_label(-gamma));
        std::vector<Rat> h(ctx_->n, Rat(0));
        bool has_h = false;
        for (const auto& [glab, v] : gb) {
          if (g_->is_root_label(glab)) {
            const Root& mu = g_->root_at(glab);
            if (lab_radical && !ctx_->in_levi(mu)) continue;  // pr onto the Levi
            auto it = root_idx_.find(-mu);
            if (it == root_idx_.end())
              throw StructureError("coadjoint image left the dual space");
            add_term(out, it->second, cy * v);
          } else {
            h[glab - g_->cartan_label(1)] += v;
            has_h = true;
          }
        }
        if (has_h) {
          std::vector<Rat> coords = lab_radical ? project_cartan(h) : expand_cartan(h);
          for (int k = 0; k < num_cartan(); ++k)
            add_term(out, cartan_offset() + k, cy * coords[k]);
        }
      } else {
        // [H, x_{-gamma}] = -gamma(H) x_{-gamma}
        const auto& h = cartan_h_[lab - cartan_offset()];
        Rat gh(0);
        for (int i = 1; i <= ctx_->n; ++i) gh += h[i - 1] * gamma.coeff(i);
        add_term(out, slot, -cy * gh);
      }
    } else {
      // Cartan component of y.
      if (lab_is_root) {
        if (lab_radical) continue;  // projected away
        const Root& delta = roots_[lab];
        const auto& h = cartan_h_[slot - cartan_offset()];
        Rat dh(0);
        for (int i = 1; i <= ctx_->n; ++i) dh += h[i - 1] * delta.coeff(i);
        // [x_delta, H] = -delta(H) x_delta, and x_delta occupies slot -delta.
        auto it = root_idx_.find(-delta);
        if (it == root_idx_.end())
          throw StructureError("coadjoint image left the dual space");
        add_term(out, it->second, -cy * dh);
      }
      // Cartan on Cartan: zero.
    }
  }
  return out;
}

RationalMatrix ContractionAlgebra::coadjoint_matrix_dual(const SparseVec& y_dual) const {
  RationalMatrix m(dim(), dim());
  for (int b = 0; b < dim(); ++b) {
    SparseVec col = coadjoint_basis(b, y_dual);
    for (const auto& [row, v] : col) m.at(row, b) = v;
  }
  return m;
}

RationalMatrix ContractionAlgebra::coadjoint_matrix(const std::vector<Root>& support) const {
  return coadjoint_matrix_dual(dual_from_support(support));
}

Rat ContractionAlgebra::pair_dual_primal(const SparseVec& dual, const SparseVec& primal) const {
  Rat acc(0);
  for (const auto& [slot, cd] : dual) {
    if (slot < num_roots()) {
      auto it = primal.find(slot);
      if (it != primal.end()) acc += cd * it->second * dual_root_pairing_[slot];
    } else {
      for (int l = 0; l < num_cartan(); ++l) {
        auto it = primal.find(cartan_offset() + l);
        if (it != primal.end())
          acc += cd * it->second * cartan_gram_.at(slot - cartan_offset(), l);
      }
    }
  }
  return acc;
}

int ContractionAlgebra::centre_dimension() const {
  RowEchelon ech(dim());
  // Cartan columns first: their rows are singletons and knock out every
  // root-vector coordinate immediately.
  std::vector<int> order;
  for (int b = cartan_offset(); b < dim(); ++b) order.push_back(b);
  for (int b = 0; b < cartan_offset(); ++b) order.push_back(b);

  for (int b : order) {
    std::map<int, SparseVec> rows;  // output coordinate -> row over inputs
    for (int i = 0; i < dim(); ++i) {
      const SparseVec& br = bracket_basis(i, b);
      for (const auto& [k, v] : br) add_term(rows[k], i, v);
    }
    for (auto& [k, row] : rows) {
      ech.add_row(std::move(row));
      if (ech.rank() == dim()) return 0;
    }
  }
  return dim() - ech.rank();
}

}  // namespace parcon
