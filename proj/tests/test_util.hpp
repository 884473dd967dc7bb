#pragma once

// Test-only reference implementations, kept independent of the search code
// they check.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "dav/abelian.hpp"
#include "dav/monoid.hpp"

namespace davtest {

// Multiset of element orders of C_{m1} x ... x C_{mk}, by direct enumeration.
inline std::map<long long, long long> order_histogram(const std::vector<long long>& ms) {
  long long total = 1;
  for (long long m : ms) total *= m;
  std::map<long long, long long> hist;
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx, ord = 1;
    for (long long m : ms) {
      const long long x = rest % m;
      rest /= m;
      ord = std::lcm(ord, m / std::gcd(m, x));
    }
    ++hist[ord];
  }
  return hist;
}

// Longest zero-sum-free sequence by DFS over *ordered* sequences with no
// canonical-order or symmetry restriction. The reference for permutation
// invariance of the production search.
inline int longest_zsf_unordered(const std::vector<long long>& factors) {
  long long order = 1;
  for (long long f : factors) order *= f;
  const int n = static_cast<int>(order);
  std::vector<int> add(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      long long ra = a, rb = b, s = 0, mult = 1;
      for (long long f : factors) {
        s += ((ra % f) + (rb % f)) % f * mult;
        mult *= f;
        ra /= f;
        rb /= f;
      }
      add[a * n + b] = static_cast<int>(s);
    }
  int best = 0;
  std::vector<std::set<int>> stack{{}};
  // iterative DFS over (sums-set, depth); elements tried in arbitrary order
  struct Frame {
    std::set<int> sums;
    int next = 1;
  };
  std::vector<Frame> frames{{{}, 1}};
  int depth = 0;
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.next >= n) {
      frames.pop_back();
      --depth;
      continue;
    }
    const int e = f.next++;
    std::set<int> sums = f.sums;
    bool zero = false;
    std::set<int> add_set{e};
    for (int s : f.sums) add_set.insert(add[s * n + e]);
    for (int s : add_set) {
      if (s == 0) zero = true;
      sums.insert(s);
    }
    if (zero) continue;
    ++depth;
    best = std::max(best, depth);
    frames.push_back({std::move(sums), 1});
  }
  return best;
}

// Definitional Davenport constant: smallest k such that every size-k
// multiset is reducible, reducibility checked by enumerating all proper
// sub-multisets directly.
inline bool reducible_by_subsets(const dav::CayleyMonoid& s, const std::vector<int>& seq) {
  int full = s.identity();
  for (int e : seq) full = s.mul(full, e);
  const int k = static_cast<int>(seq.size());
  for (int mask = 0; mask < (1 << k) - 1; ++mask) {
    int p = s.identity();
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) p = s.mul(p, seq[i]);
    if (p == full) return true;
  }
  return false;
}

inline long long davenport_by_definition(const dav::CayleyMonoid& s) {
  const int m = s.size();
  for (int k = 1; k <= m + 1; ++k) {
    std::vector<int> seq(k, 0);
    bool all_reducible = true;
    while (true) {
      if (!reducible_by_subsets(s, seq)) {
        all_reducible = false;
        break;
      }
      int i = k - 1;
      while (i >= 0 && seq[i] == m - 1) --i;
      if (i < 0) break;
      ++seq[i];
      for (int j = i + 1; j < k; ++j) seq[j] = seq[i];
    }
    if (all_reducible) return k;
  }
  return m + 2;
}

// Brute-force monoid isomorphism for very small tables.
inline bool monoids_isomorphic(const dav::CayleyMonoid& a, const dav::CayleyMonoid& b) {
  if (a.size() != b.size()) return false;
  const int m = a.size();
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[a.identity()] != b.identity()) continue;
    if (a.zero().has_value() != b.zero().has_value()) return false;
    if (a.zero() && perm[*a.zero()] != *b.zero()) continue;
    bool ok = true;
    for (int x = 0; x < m && ok; ++x)
      for (int y = 0; y < m && ok; ++y)
        if (perm[a.mul(x, y)] != b.mul(perm[x], perm[y])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace davtest
