#ifndef SDW_TESTS_CORPUS_HPP
#define SDW_TESTS_CORPUS_HPP

#include <random>
#include <vector>

#include "sdw/code.hpp"
#include "sdw/gf2.hpp"

namespace sdw::testing {

inline LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
  const int n = a.length() + b.length();
  std::vector<BitVec> rows;
  rows.reserve(static_cast<std::size_t>(a.dim() + b.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    BitVec r(n);
    for (int j : a.generator().row(i).support0()) r.set(j, true);
    rows.push_back(std::move(r));
  }
  for (int i = 0; i < b.dim(); ++i) {
    BitVec r(n);
    for (int j : b.generator().row(i).support0()) r.set(a.length() + j, true);
    rows.push_back(std::move(r));
  }
  return LinearCode(BitMat(std::move(rows)));
}

// n/2 copies of {00, 11}.
inline LinearCode i2_power(int n) {
  BitMat m(0, n);
  for (int i = 0; i + 1 < n; i += 2) {
    BitVec r(n);
    r.set(i, true);
    r.set(i + 1, true);
    m.append_row(std::move(r));
  }
  return LinearCode(m);
}

// One neighbor step: pick a random even-weight x outside C and pass to
// <x> + {c in C : c.x = 0}. Keeps self-duality.
inline LinearCode neighbor_step(const LinearCode& c, std::mt19937& rng) {
  const int n = c.length();
  for (;;) {
    BitVec x(n);
    for (int i = 0; i < n; ++i)
      if (rng() & 1) x.set(i, true);
    if (x.weight() % 2 != 0) x.flip(static_cast<int>(rng() % n));
    if (c.contains(x)) continue;
    BitMat rows(0, n);
    rows.append_row(x);
    BitVec star;
    bool have_star = false;
    for (int i = 0; i < c.dim(); ++i) {
      const BitVec& g = c.generator().row(i);
      if (inner(x, g) == 0) {
        rows.append_row(g);
      } else if (!have_star) {
        star = g;
        have_star = true;
      } else {
        rows.append_row(g ^ star);
      }
    }
    return LinearCode(rows);
  }
}

// Self-dual codes of length n reached from the direct-sum baseline by
// `steps` random neighbor moves.
inline LinearCode random_self_dual(int n, int steps, std::mt19937& rng) {
  LinearCode c = i2_power(n);
  for (int s = 0; s < steps; ++s) c = neighbor_step(c, rng);
  return c;
}

}  // namespace sdw::testing

#endif
