#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

namespace parcon {

using Rat = mpq_class;
using Int = mpz_class;

// Sparse coordinate vector over a fixed basis: index -> coefficient.
// Invariant: no explicit zero entries.
using SparseVec = std::map<int, Rat>;

inline void add_term(SparseVec& v, int idx, const Rat& c) {
  if (c == 0) return;
  auto it = v.find(idx);
  if (it == v.end()) {
    v.emplace(idx, c);
    return;
  }
  it->second += c;
  if (it->second == 0) v.erase(it);
}

// dst += c * src
inline void axpy(SparseVec& dst, const Rat& c, const SparseVec& src) {
  if (c == 0) return;
  for (const auto& [i, x] : src) add_term(dst, i, c * x);
}

inline Rat coeff_of(const SparseVec& v, int idx) {
  auto it = v.find(idx);
  return it == v.end() ? Rat(0) : it->second;
}

std::string rat_to_string(const Rat& r);

// Floor division with the convention [x] <= x < [x]+1, also for negatives.
long floor_div(long a, long b);

// SplitMix64 step; used to derive independent per-case RNG streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

}  // namespace parcon
