#include "parcon/adapted_pair.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "parcon/errors.hpp"

namespace parcon {

namespace {

Root ep(const ParabolicContext& ctx, int i, int sign = +1) { return Root::e(ctx.n, i, sign); }
Root rp(const ParabolicContext& ctx, int i, int si, int j, int sj) {
  return Root::pair(ctx.n, i, si, j, sj);
}

}  // namespace

std::vector<Root> SPartition::all() const {
  std::vector<Root> out = mixed;
  out.insert(out.end(), plus.begin(), plus.end());
  out.insert(out.end(), minus.begin(), minus.end());
  std::sort(out.begin(), out.end());
  return out;
}

SPartition build_S(const ParabolicContext& ctx) {
  const int n = ctx.n, s = ctx.s;
  SPartition sp;

  if (n > s && 3 * s <= 2 * n) {
    sp.mixed.push_back(ep(ctx, s));
    for (int k = 1; k <= (s - 2) / 2; ++k) {
      sp.mixed.push_back(rp(ctx, s - (2 * k - 1), +1, s + k, +1));
      sp.mixed.push_back(rp(ctx, s - 2 * k, +1, s + k, -1));
    }
    sp.plus.push_back(rp(ctx, 1, +1, 3 * s / 2, +1));
    for (int i = 1; i <= s / 2 - 1; ++i) sp.plus.push_back(rp(ctx, 2 * i - 1, +1, 2 * i, +1));
    if ((s / 2) % 2 == 0) {
      for (long j = s / 4; j <= floor_div(n - 2 - s, 2); ++j)
        sp.plus.push_back(rp(ctx, s + 2 * j + 1, +1, s + 2 * j + 2, +1));
      for (long j = s / 4; j <= floor_div(n - 1 - s, 2); ++j)
        sp.minus.push_back(rp(ctx, s + 2 * j, -1, s + 2 * j + 1, -1));
    } else {
      for (long j = (s - 2) / 4; j <= floor_div(n - 3 - s, 2); ++j)
        sp.plus.push_back(rp(ctx, s + 2 * j + 2, +1, s + 2 * j + 3, +1));
      for (long j = (s - 2) / 4; j <= floor_div(n - 2 - s, 2); ++j)
        sp.minus.push_back(rp(ctx, s + 2 * j + 1, -1, s + 2 * j + 2, -1));
    }
  } else if (n > s) {
    sp.mixed.push_back(ep(ctx, s));
    for (int k = 1; k <= n - s; ++k) {
      sp.mixed.push_back(rp(ctx, s - (2 * k - 1), +1, s + k, +1));
      sp.mixed.push_back(rp(ctx, s - 2 * k, +1, s + k, -1));
    }
    for (int i = 1; i <= s / 2 - 1; ++i) sp.plus.push_back(rp(ctx, 2 * i - 1, +1, 2 * i, +1));
    for (int k = 1; k <= 3 * s / 2 - n - 1; ++k)
      sp.minus.push_back(rp(ctx, 3 * s - 2 * n - k, +1, k, -1));
  } else {
    sp.mixed.push_back(ep(ctx, s));
    for (int i = 1; i <= s / 2 - 1; ++i) sp.plus.push_back(rp(ctx, 2 * i - 1, +1, 2 * i, +1));
    for (int k = 1; k <= s / 2 - 1; ++k) sp.minus.push_back(rp(ctx, s - k, +1, k, -1));
  }

  std::sort(sp.mixed.begin(), sp.mixed.end());
  std::sort(sp.plus.begin(), sp.plus.end());
  std::sort(sp.minus.begin(), sp.minus.end());

  std::vector<Root> all = sp.all();
  if (static_cast<int>(all.size()) != n - 1 ||
      std::adjacent_find(all.begin(), all.end()) != all.end())
    throw StructureError("support set S has the wrong size");
  for (const Root& r : all)
    if (!ctx.in_delta_pi_prime(r)) throw StructureError("S element outside Delta(pi')");
  return sp;
}

RationalMatrix s_basis_matrix(const std::vector<Root>& S, const ParabolicContext& ctx) {
  const int m = static_cast<int>(S.size());
  RationalMatrix out(m, static_cast<int>(ctx.coroot_basis.size()));
  for (int r = 0; r < m; ++r) {
    std::vector<Rat> wc = weight_coordinates(Weight(S[r]), ctx);
    for (int c = 0; c < out.cols(); ++c) out.at(r, c) = wc[c];
  }
  return out;
}

bool check_S_basis(const std::vector<Root>& S, const ParabolicContext& ctx) {
  if (S.size() != ctx.coroot_basis.size()) return false;
  return s_basis_matrix(S, ctx).determinant() != 0;
}

char HeisenbergData::sign_of(const Root& alpha) const {
  const Root& c = centre_of.at(alpha);
  for (const auto& f : families)
    if (f.centre == c) return f.sign_type;
  throw StructureError("family lookup failed");
}

HeisenbergData build_heisenberg_family(const ParabolicContext& ctx, const SPartition& sp) {
  const int n = ctx.n, s = ctx.s;
  if (n == s) throw RegimeError("Heisenberg families are constructed only for n > s");

  std::vector<HeisenbergFamily> fams;
  auto add_family = [&](const Root& centre, std::vector<Root> members) {
    members.push_back(centre);
    std::sort(members.begin(), members.end());
    fams.push_back(HeisenbergFamily{centre, '?', std::move(members)});
  };

  // Families with centre e_{2i-1}+e_{2i} inside the first s coordinates.
  for (int i = 1; i <= s / 2 - 1; ++i) {
    std::vector<Root> m;
    for (int j = 2 * i + 1; j <= s; ++j) {
      m.push_back(rp(ctx, 2 * i - 1, +1, j, +1));
      m.push_back(rp(ctx, 2 * i, +1, j, -1));
      m.push_back(rp(ctx, 2 * i - 1, +1, j, -1));
      m.push_back(rp(ctx, 2 * i, +1, j, +1));
    }
    add_family(rp(ctx, 2 * i - 1, +1, 2 * i, +1), std::move(m));
  }

  if (3 * s <= 2 * n) {
    // Centre e_1 + e_{3s/2}.
    {
      std::vector<Root> m;
      for (int k = 1; k <= n - 3 * s / 2; ++k) {
        m.push_back(rp(ctx, 1, +1, 3 * s / 2 + k, +1));
        m.push_back(rp(ctx, 3 * s / 2, +1, 3 * s / 2 + k, -1));
        m.push_back(rp(ctx, 1, +1, 3 * s / 2 + k, -1));
        m.push_back(rp(ctx, 3 * s / 2, +1, 3 * s / 2 + k, +1));
      }
      add_family(rp(ctx, 1, +1, 3 * s / 2, +1), std::move(m));
    }
    const int u = ((s / 2) % 2 == 0) ? 0 : 1;  // index shift for odd s/2
    const long j_lo = (u == 0) ? s / 4 : (s - 2) / 4;
    // Positive tail families.
    for (long j = j_lo; j <= floor_div(n - 2 - s - u, 2); ++j) {
      const int a = static_cast<int>(s + 2 * j + 1 + u);
      std::vector<Root> m;
      for (int k = a + 2; k <= n; ++k) {
        m.push_back(rp(ctx, a, +1, k, +1));
        m.push_back(rp(ctx, a + 1, +1, k, -1));
        m.push_back(rp(ctx, a, +1, k, -1));
        m.push_back(rp(ctx, a + 1, +1, k, +1));
      }
      add_family(rp(ctx, a, +1, a + 1, +1), std::move(m));
    }
    // Negative tail families.
    for (long j = j_lo; j <= floor_div(n - 1 - s - u, 2); ++j) {
      const int a = static_cast<int>(s + 2 * j + u);
      std::vector<Root> m;
      for (int k = a + 2; k <= n; ++k) {
        m.push_back(rp(ctx, a, -1, k, +1));
        m.push_back(rp(ctx, a + 1, -1, k, -1));
        m.push_back(rp(ctx, a, -1, k, -1));
        m.push_back(rp(ctx, a + 1, -1, k, +1));
      }
      add_family(rp(ctx, a, -1, a + 1, -1), std::move(m));
    }
  } else {
    // Centres e_{3s-2n-j} - e_j in the negative Levi part.
    for (int j = 1; j <= 3 * s / 2 - n - 1; ++j) {
      std::vector<Root> m;
      for (int k = j + 1; k <= 3 * s - 2 * n - j - 1; ++k) {
        m.push_back(rp(ctx, k, +1, j, -1));
        m.push_back(rp(ctx, 3 * s - 2 * n - j, +1, k, -1));
      }
      add_family(rp(ctx, 3 * s - 2 * n - j, +1, j, -1), std::move(m));
    }
  }

  // Mixed families with centres e_{s-(2k-1)}+e_{s+k} and e_{s-2k}-e_{s+k}.
  for (int k = 1; k <= std::min((s - 2) / 2, n - s); ++k) {
    {
      std::vector<Root> m;
      for (int i = 1; i <= n - s - k; ++i) {
        m.push_back(rp(ctx, s - (2 * k - 1), +1, s + k + i, +1));
        m.push_back(rp(ctx, s + k, +1, s + k + i, -1));
        m.push_back(rp(ctx, s - (2 * k - 1), +1, s + k + i, -1));
        m.push_back(rp(ctx, s + k, +1, s + k + i, +1));
      }
      for (int j = 1; j <= s - 2 * k; ++j) {
        m.push_back(rp(ctx, s + k, +1, s - (2 * k - 1) - j, +1));
        m.push_back(rp(ctx, s - (2 * k - 1), +1, s - (2 * k - 1) - j, -1));
      }
      add_family(rp(ctx, s - (2 * k - 1), +1, s + k, +1), std::move(m));
    }
    {
      std::vector<Root> m;
      for (int i = 1; i <= n - s - k; ++i) {
        m.push_back(rp(ctx, s - 2 * k, +1, s + k + i, -1));
        m.push_back(rp(ctx, s + k, -1, s + k + i, +1));
        m.push_back(rp(ctx, s - 2 * k, +1, s + k + i, +1));
        m.push_back(rp(ctx, s + k, -1, s + k + i, -1));
      }
      for (int j = 1; j <= s - 2 * k - 1; ++j) {
        m.push_back(rp(ctx, s + k, -1, s - 2 * k - j, +1));
        m.push_back(rp(ctx, s - 2 * k, +1, s - 2 * k - j, -1));
      }
      add_family(rp(ctx, s - 2 * k, +1, s + k, -1), std::move(m));
    }
  }

  // Family with centre e_s.
  {
    std::vector<Root> m;
    for (int i = s + 1; i <= n; ++i) {
      m.push_back(ep(ctx, i, +1));
      m.push_back(rp(ctx, s, +1, i, -1));
      m.push_back(ep(ctx, i, -1));
      m.push_back(rp(ctx, s, +1, i, +1));
    }
    for (int j = 1; j <= s - 1; ++j) {
      m.push_back(ep(ctx, j, +1));
      m.push_back(rp(ctx, s, +1, j, -1));
    }
    add_family(ep(ctx, s), std::move(m));
  }

  std::sort(fams.begin(), fams.end(),
            [](const HeisenbergFamily& a, const HeisenbergFamily& b) { return a.centre < b.centre; });

  HeisenbergData out;
  std::set<Root> seen;
  for (HeisenbergFamily& f : fams) {
    bool any_pos = false, any_neg = false;
    for (const Root& r : f.members) {
      if (!ctx.in_delta_pi_prime(r))
        throw StructureError("family member outside Delta(pi'): " + r.to_string());
      if (!seen.insert(r).second)
        throw StructureError("families overlap at " + r.to_string());
      (r.is_positive() ? any_pos : any_neg) = true;
    }
    f.sign_type = (any_pos && any_neg) ? 'm' : (any_pos ? '+' : '-');

    // Heisenberg property: unique complement summing to the centre.
    std::set<Root> punctured(f.members.begin(), f.members.end());
    punctured.erase(f.centre);
    for (const Root& a : punctured) {
      Root partner;
      int found = 0;
      for (const Root& b : punctured) {
        if (b == a) continue;
        if (a.plus(b) == f.centre.coeffs()) {
          partner = b;
          ++found;
        }
      }
      if (found != 1)
        throw StructureError("not a Heisenberg set at " + a.to_string() + " (centre " +
                             f.centre.to_string() + ")");
      out.theta[a] = partner;
      out.centre_of[a] = f.centre;
      out.O.push_back(a);
    }
  }
  std::sort(out.O.begin(), out.O.end());
  out.O.erase(std::unique(out.O.begin(), out.O.end()), out.O.end());

  // Centres must be exactly S and the sign split must agree with it.
  auto expect = [&](const std::vector<Root>& part, char sign) {
    for (const Root& c : part) {
      auto it = std::find_if(fams.begin(), fams.end(),
                             [&](const HeisenbergFamily& f) { return f.centre == c; });
      if (it == fams.end()) throw StructureError("missing family for " + c.to_string());
      if (it->sign_type != sign)
        throw StructureError("family sign mismatch at centre " + c.to_string());
    }
  };
  expect(sp.mixed, 'm');
  expect(sp.plus, '+');
  expect(sp.minus, '-');
  if (fams.size() != sp.all().size()) throw StructureError("family/centre count mismatch");

  out.families = std::move(fams);
  return out;
}

std::vector<Root> build_T(const ParabolicContext& ctx, const HeisenbergData* fam) {
  const int n = ctx.n, s = ctx.s;
  std::vector<Root> T;
  if (n == s) {
    T.push_back(rp(ctx, s - 1, +1, s, +1));
    for (int i = 1; i <= s / 2; ++i) T.push_back(rp(ctx, 2 * i - 1, +1, 2 * i, -1));
    std::sort(T.begin(), T.end());
  } else {
    if (fam == nullptr) throw RegimeError("families required to build T when n > s");
    std::set<Root> covered;
    for (const auto& f : fam->families) covered.insert(f.members.begin(), f.members.end());
    for (const Root& r : ctx.delta_pi_prime)
      if (covered.count(r) == 0) T.push_back(r);
  }
  if (static_cast<long>(T.size()) != n - s / 2 + 1)
    throw CardinalityError("|T| != n - s/2 + 1");
  return T;
}

std::vector<Rat> solve_h(const std::vector<Root>& S, const ParabolicContext& ctx) {
  RationalMatrix m = s_basis_matrix(S, ctx);
  std::vector<Rat> ones(S.size(), Rat(1));
  auto x = m.solve(ones);
  if (!x) throw SingularError("S does not restrict to a basis; h is not determined");
  return *x;
}

OClassification classify_O(const ParabolicContext& ctx, const HeisenbergData& fam,
                           const std::vector<Root>& S) {
  OClassification out;
  std::set<Root> Sset(S.begin(), S.end());
  std::set<Root> Oset(fam.O.begin(), fam.O.end());

  for (const Root& alpha : fam.O) {
    OInfo inf;
    const bool alpha_rad = ctx.in_radical(alpha);
    for (const Root& gamma : S) {
      std::vector<int> diff = gamma.coeffs();
      for (int i = 0; i < ctx.n; ++i) diff[i] -= alpha.coeff(i + 1);
      auto beta = Root::try_make(std::move(diff));
      if (!beta || Oset.count(*beta) == 0) continue;
      if (alpha_rad && ctx.in_radical(*beta)) continue;  // bracket vanishes
      inf.s_alpha.push_back(*beta);
    }
    std::sort(inf.s_alpha.begin(), inf.s_alpha.end());
    inf.cls = static_cast<int>(inf.s_alpha.size());
    out.info[alpha] = std::move(inf);
  }

  for (const Root& alpha : fam.O) {
    OInfo& inf = out.info[alpha];
    if (inf.cls == 2) {
      inf.tilde = fam.theta.at(alpha);
    } else if (inf.cls == 3) {
      out.o3.push_back(alpha);
      const Root th = fam.theta.at(alpha);
      for (const Root& b : inf.s_alpha) {
        if (b == th) continue;
        auto itb = out.info.find(b);
        if (itb == out.info.end() || itb->second.cls != 2) continue;
        auto itt = out.info.find(fam.theta.at(b));
        if (itt == out.info.end() || itt->second.cls != 1) continue;
        inf.tilde = b;  // lexicographically first admissible witness
        break;
      }
      if (inf.tilde) {
        out.excluded.insert(*inf.tilde);
        out.excluded.insert(fam.theta.at(*inf.tilde));
      }
    }
  }
  return out;
}

OInfo classify_root(const Root& alpha, const ParabolicContext& ctx,
                    const HeisenbergData& fam, const OClassification& cls) {
  const Root th = fam.theta.at(alpha);
  if (ctx.in_radical(alpha) && ctx.in_radical(th))
    throw ConditionCError("pair {" + alpha.to_string() + ", " + th.to_string() +
                          "} lies in the radical");
  const OInfo& inf = cls.info.at(alpha);
  if (inf.cls < 1 || inf.cls > 3)
    throw ConditionCPrimeError("|S_alpha| = " + std::to_string(inf.cls) + " at " +
                               alpha.to_string());
  if (inf.cls == 3 && !inf.tilde)
    throw ConditionCPrimeError("no admissible witness for " + alpha.to_string());
  return inf;
}

namespace {

std::optional<Root> tilde_of(const Root& r, const HeisenbergData& fam,
                             const OClassification& cls) {
  const OInfo& inf = cls.info.at(r);
  if (inf.cls == 2) return fam.theta.at(r);
  if (inf.cls == 3) return inf.tilde;
  return std::nullopt;
}

}  // namespace

Root sequence_step(const Root& cur, const ParabolicContext& ctx, const HeisenbergData& fam,
                   const OClassification& cls, bool* ambiguous) {
  (void)ctx;
  const Root th = fam.theta.at(cur);
  const OInfo& thin = cls.info.at(th);
  if (thin.cls == 1) return cur;
  std::optional<Root> tld = tilde_of(th, fam, cls);
  if (thin.cls == 3 && !tld)
    throw SequenceError("step through " + th.to_string() + " has no marked witness");
  std::vector<Root> cand;
  for (const Root& b : thin.s_alpha) {
    if (b == cur) continue;
    if (tld && b == *tld) continue;
    cand.push_back(b);
  }
  if (cand.empty())
    throw SequenceError("no admissible successor after " + cur.to_string());
  if (cand.size() > 1 && ambiguous) *ambiguous = true;
  return *std::min_element(cand.begin(), cand.end());
}

namespace {

struct SeqRun {
  bool stationary = false;
  bool cyclic = false;
  int rank = -1;
  int cycle_length = -1;
  bool ambiguous = false;
  std::vector<Root> path;  // terms visited, starting at the seed
};

SeqRun run_sequence(const Root& start, const ParabolicContext& ctx, const HeisenbergData& fam,
                    const OClassification& cls) {
  SeqRun out;
  const int cap = 2 * ctx.n * ctx.n + 4;
  Root cur = start;
  out.path.push_back(cur);
  for (int step = 1; step <= cap; ++step) {
    const Root nxt = sequence_step(cur, ctx, fam, cls, &out.ambiguous);
    if (nxt == cur) {
      out.stationary = true;
      out.rank = step - 1;
      return out;
    }
    if (nxt == start) {
      out.cyclic = true;
      out.cycle_length = step;
      return out;
    }
    out.path.push_back(nxt);
    cur = nxt;
  }
  throw SequenceError("sequence from " + start.to_string() + " did not terminate");
}

}  // namespace

StationaryResult is_stationary(const Root& alpha, const ParabolicContext& ctx,
                               const HeisenbergData& fam, const OClassification& cls) {
  if (cls.excluded.count(alpha))
    throw StructureError("sequences are not defined for witness roots: " + alpha.to_string());
  const SeqRun direct = run_sequence(alpha, ctx, fam, cls);
  const SeqRun partner = run_sequence(fam.theta.at(alpha), ctx, fam, cls);
  StationaryResult r;
  r.stationary = direct.stationary && partner.stationary;
  r.cyclic = direct.cyclic || partner.cyclic;
  r.rank_direct = direct.rank;
  r.rank_partner = partner.rank;
  r.cycle_length = direct.cyclic ? direct.cycle_length : partner.cycle_length;
  r.ambiguous = direct.ambiguous || partner.ambiguous;
  return r;
}

ConditionReport verify_conditions(const ParabolicContext& ctx, const HeisenbergData& fam,
                                  const std::vector<Root>& S, const OClassification& cls) {
  (void)S;
  ConditionReport rep;
  rep.o3_count = static_cast<int>(cls.o3.size());

  for (const Root& alpha : fam.O) {
    const Root th = fam.theta.at(alpha);
    if (ctx.in_radical(alpha) && ctx.in_radical(th))
      rep.condition_C.fail(alpha.to_string() + "," + th.to_string());

    const OInfo& inf = cls.info.at(alpha);
    if (inf.cls < 1 || inf.cls > 3)
      rep.condition_Cprime.fail(alpha.to_string() + ": |S_a|=" + std::to_string(inf.cls));
    else if (inf.cls == 3 && !inf.tilde)
      rep.condition_Cprime.fail(alpha.to_string() + ": no witness");

    const char sign = fam.sign_of(alpha);
    if (sign == '+' || sign == '-') {
      std::vector<Root> same;
      for (const Root& b : inf.s_alpha)
        if (fam.sign_of(b) == sign) same.push_back(b);
      if (!(same.size() == 1 && same[0] == th))
        (sign == '+' ? rep.o_plus_locality : rep.o_minus_locality)
            .fail(alpha.to_string());
    }
  }

  // Every root of a mixed family must be stationary.
  for (const Root& alpha : fam.O) {
    if (fam.sign_of(alpha) != 'm') continue;
    if (cls.excluded.count(alpha)) {
      rep.stationarity.fail(alpha.to_string() + ": is a witness root");
      continue;
    }
    try {
      const StationaryResult r = is_stationary(alpha, ctx, fam, cls);
      if (!r.stationary) rep.stationarity.fail(alpha.to_string());
      if (r.cyclic) ++rep.cyclic_count;
      if (r.ambiguous) ++rep.ambiguous_count;
    } catch (const Error& e) {
      rep.stationarity.fail(alpha.to_string() + ": " + e.what());
    }
  }

  // Witness pattern: tilde = e_u + e_v with u <= 3s/2 - n - 1 < v <= s - 2.
  for (const Root& alpha : cls.o3) {
    const auto& inf = cls.info.at(alpha);
    if (!inf.tilde) continue;
    const Root& t = *inf.tilde;
    int u = 0, v = 0;
    bool shape = t.is_long();
    for (int i = 1; i <= ctx.n && shape; ++i) {
      if (t.coeff(i) == 1) (u == 0 ? u : v) = i;
      else if (t.coeff(i) != 0) shape = false;
    }
    const long bound = 3L * ctx.s / 2 - ctx.n - 1;
    if (!shape || v == 0 || u > bound || v <= bound || v > ctx.s - 2)
      rep.witness_shape.fail(alpha.to_string() + " ~ " + t.to_string());
  }
  return rep;
}

ChainGraph chain_of(const Root& alpha, const ParabolicContext& ctx, const HeisenbergData& fam,
                    const OClassification& cls) {
  const SeqRun direct = run_sequence(alpha, ctx, fam, cls);
  const SeqRun partner = run_sequence(fam.theta.at(alpha), ctx, fam, cls);
  if (!direct.stationary || !partner.stationary)
    throw StructureError("chain requested for a non-stationary root");

  std::set<Root> verts;
  for (const SeqRun* run : {&direct, &partner})
    for (const Root& r : run->path) {
      verts.insert(r);
      verts.insert(fam.theta.at(r));
    }
  std::set<Root> chain = verts;
  for (const Root& r : chain) {
    const OInfo& inf = cls.info.at(r);
    if (inf.cls == 3 && inf.tilde) {
      verts.insert(*inf.tilde);
      verts.insert(fam.theta.at(*inf.tilde));
    }
  }

  ChainGraph g;
  g.vertices.assign(verts.begin(), verts.end());
  std::set<Root> Sset;
  for (const auto& f : fam.families) Sset.insert(f.centre);
  const int m = static_cast<int>(g.vertices.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Root &a = g.vertices[i], &b = g.vertices[j];
      auto sum = Root::try_make(a.plus(b));
      if (!sum || Sset.count(*sum) == 0) continue;
      if (ctx.in_radical(a) && ctx.in_radical(b)) continue;
      g.edges.emplace_back(i, j);
      if (fam.theta.at(a) == b) g.theta_edges.emplace_back(i, j);
    }
  return g;
}

MatchingResult verify_chain_matching(const Root& alpha, const ParabolicContext& ctx,
                                     const HeisenbergData& fam, const OClassification& cls) {
  const ChainGraph g = chain_of(alpha, ctx, fam, cls);
  const int m = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> adj(m);
  for (auto [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }

  MatchingResult res;
  std::vector<int> match(m, -1);
  std::vector<std::pair<int, int>> found_first;
  std::function<void(int)> rec = [&](int used) {
    if (res.matchings >= 2) return;
    if (used == m) {
      ++res.matchings;
      if (res.matchings == 1)
        for (int i = 0; i < m; ++i)
          if (match[i] > i) found_first.emplace_back(i, match[i]);
      return;
    }
    // Lowest-degree unmatched vertex; forced edges propagate first.
    int u = -1, best = m + 1;
    for (int i = 0; i < m; ++i) {
      if (match[i] != -1) continue;
      int d = 0;
      for (int v : adj[i]) d += (match[v] == -1);
      if (d == 0) return;  // dead end
      if (d < best) {
        best = d;
        u = i;
      }
    }
    for (int v : adj[u]) {
      if (match[v] != -1) continue;
      match[u] = v;
      match[v] = u;
      rec(used + 2);
      match[u] = -1;
      match[v] = -1;
      if (res.matchings >= 2) return;
    }
  };
  if (m % 2 == 0) rec(0);

  if (res.matchings == 1) {
    std::set<std::pair<int, int>> theta_set(g.theta_edges.begin(), g.theta_edges.end());
    res.unique_theta =
        theta_set.size() == found_first.size() &&
        std::all_of(found_first.begin(), found_first.end(),
                    [&](const std::pair<int, int>& e) { return theta_set.count(e) > 0; });
  }
  return res;
}

ChainSweep sweep_chains(const ParabolicContext& ctx, const HeisenbergData& fam,
                        const OClassification& cls) {
  ChainSweep out;
  std::set<Root> visited;
  for (const Root& alpha : fam.O) {
    if (cls.excluded.count(alpha) || visited.count(alpha)) continue;
    SeqRun direct, partner;
    try {
      direct = run_sequence(alpha, ctx, fam, cls);
      partner = run_sequence(fam.theta.at(alpha), ctx, fam, cls);
    } catch (const Error& e) {
      out.all_unique.fail(alpha.to_string() + ": " + e.what());
      continue;
    }
    for (const SeqRun* run : {&direct, &partner})
      for (const Root& r : run->path) {
        visited.insert(r);
        visited.insert(fam.theta.at(r));
      }
    if (!(direct.stationary && partner.stationary)) {
      ++out.cyclic_chains;
      continue;
    }
    ++out.chains;
    try {
      const MatchingResult m = verify_chain_matching(alpha, ctx, fam, cls);
      if (m.matchings != 1 || !m.unique_theta)
        out.all_unique.fail(alpha.to_string() + ": matchings=" + std::to_string(m.matchings));
      out.graphs.push_back(chain_of(alpha, ctx, fam, cls));
    } catch (const Error& e) {
      out.all_unique.fail(alpha.to_string() + ": " + e.what());
    }
  }
  return out;
}

std::string chain_to_dot(const ChainGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n  node [shape=ellipse];\n";
  std::set<std::pair<int, int>> theta_set(g.theta_edges.begin(), g.theta_edges.end());
  for (auto [i, j] : g.edges) {
    os << "  \"" << g.vertices[i].to_string() << "\" -- \"" << g.vertices[j].to_string()
       << "\"";
    if (theta_set.count({i, j})) os << " [style=bold]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace parcon
