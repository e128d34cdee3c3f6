#include "parcon/root_system.hpp"

#include <algorithm>
#include <cstdlib>

#include "parcon/errors.hpp"

namespace parcon {

namespace {

bool valid_pattern(const std::vector<int>& c) {
  int units = 0;
  for (int x : c) {
    if (x == 0) continue;
    if (x != 1 && x != -1) return false;
    ++units;
  }
  return units == 1 || units == 2;
}

}  // namespace

Root::Root(std::vector<int> coeffs) : c_(std::move(coeffs)) {
  if (!valid_pattern(c_))
    throw StructureError("not a type-B root pattern");
}

std::optional<Root> Root::try_make(std::vector<int> coeffs) {
  if (!valid_pattern(coeffs)) return std::nullopt;
  Root r;
  r.c_ = std::move(coeffs);
  return r;
}

Root Root::e(int n, int i, int sign) {
  std::vector<int> c(n, 0);
  c[i - 1] = sign;
  return Root(std::move(c));
}

Root Root::pair(int n, int i, int si, int j, int sj) {
  std::vector<int> c(n, 0);
  c[i - 1] = si;
  c[j - 1] = sj;
  return Root(std::move(c));
}

bool Root::is_short() const {
  int units = 0;
  for (int x : c_) units += (x != 0);
  return units == 1;
}

bool Root::is_positive() const {
  for (int x : c_) {
    if (x == 0) continue;
    return x > 0;
  }
  return false;
}

Root Root::operator-() const {
  Root r;
  r.c_ = c_;
  for (int& x : r.c_) x = -x;
  return r;
}

std::vector<int> Root::plus(const Root& other) const {
  std::vector<int> out(c_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += other.c_[k];
  return out;
}

std::string Root::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (c_[k] > 0 && !out.empty()) out += '+';
    if (c_[k] < 0) out += '-';
    out += 'e';
    out += std::to_string(k + 1);
  }
  return out;
}

Weight::Weight(const Root& r) : c(r.n(), Rat(0)) {
  for (int i = 1; i <= r.n(); ++i) c[i - 1] = r.coeff(i);
}

bool Weight::is_zero() const {
  for (const Rat& x : c)
    if (x != 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
  return *this;
}

Weight& Weight::add_scaled(const Rat& k, const Root& r) {
  for (int i = 1; i <= r.n(); ++i) c[i - 1] += k * r.coeff(i);
  return *this;
}

Weight Weight::operator*(const Rat& k) const {
  Weight w = *this;
  for (Rat& x : w.c) x *= k;
  return w;
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (c[k] > 0 && !out.empty()) out += '+';
    if (c[k] < 0) out += '-';
    Rat a = abs(c[k]);
    if (a != 1) out += rat_to_string(a);
    out += 'e';
    out += std::to_string(k + 1);
  }
  if (out.empty()) out = "0";
  return out;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::N_EQ_S: return "N_EQ_S";
    case Regime::LE: return "LE";
    case Regime::GT: return "GT";
  }
  return "?";
}

int ParabolicContext::radical_level(const Root& r) const {
  int lvl = 0;
  for (int i = 1; i <= s; ++i) lvl += r.coeff(i);
  return lvl;
}

bool ParabolicContext::in_delta_pi_prime(const Root& r) const {
  return std::binary_search(delta_pi_prime.begin(), delta_pi_prime.end(), r);
}

ParabolicContext build_context(int n, int s) {
  if (n < 2) throw DomainError("n must be at least 2");
  if (s % 2 != 0) throw DomainError("s must be even");
  if (s < 2 || s > n) throw DomainError("s must satisfy 2 <= s <= n");

  ParabolicContext ctx;
  ctx.n = n;
  ctx.s = s;
  if (n == s)
    ctx.regime = Regime::N_EQ_S;
  else
    ctx.regime = (3 * s <= 2 * n) ? Regime::LE : Regime::GT;

  for (int i = 1; i <= n; ++i) {
    ctx.positive_roots.push_back(Root::e(n, i));
    for (int j = i + 1; j <= n; ++j) {
      ctx.positive_roots.push_back(Root::pair(n, i, +1, j, -1));
      ctx.positive_roots.push_back(Root::pair(n, i, +1, j, +1));
    }
  }
  std::sort(ctx.positive_roots.begin(), ctx.positive_roots.end());

  for (const Root& r : ctx.positive_roots) {
    if (ctx.radical_level(r) == 0) {
      ctx.levi_positive.push_back(r);
      ctx.levi_negative.push_back(-r);
    }
  }
  std::sort(ctx.levi_negative.begin(), ctx.levi_negative.end());

  ctx.delta_pi_prime = ctx.positive_roots;
  ctx.delta_pi_prime.insert(ctx.delta_pi_prime.end(), ctx.levi_negative.begin(),
                            ctx.levi_negative.end());
  std::sort(ctx.delta_pi_prime.begin(), ctx.delta_pi_prime.end());

  for (int i = 1; i <= n; ++i) {
    if (i == s) continue;
    ctx.levi_simple.push_back(i);
    std::vector<Rat> v(n, Rat(0));
    if (i < n) {
      // alpha_i = e_i - e_{i+1}, long: coroot vector is the root itself.
      v[i - 1] = 1;
      v[i] = -1;
    } else {
      // alpha_n = e_n, short: coroot vector is 2 e_n.
      v[n - 1] = 2;
    }
    ctx.coroot_basis.push_back(std::move(v));
  }
  return ctx;
}

std::vector<Rat> weight_coordinates(const Weight& w, const ParabolicContext& ctx) {
  std::vector<Rat> out;
  out.reserve(ctx.coroot_basis.size());
  for (const auto& cv : ctx.coroot_basis) {
    Rat acc(0);
    for (int k = 0; k < ctx.n; ++k) acc += w.c[k] * cv[k];
    out.push_back(acc);
  }
  return out;
}

Weight fundamental_weight_s(const ParabolicContext& ctx) {
  Weight w(ctx.n);
  if (ctx.s < ctx.n) {
    for (int i = 1; i <= ctx.s; ++i) w.c[i - 1] = 1;
  } else {
    for (int i = 1; i <= ctx.n; ++i) w.c[i - 1] = Rat(1, 2);
  }
  return w;
}

}  // namespace parcon
