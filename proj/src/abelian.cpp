#include "dav/abelian.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dav/bitset.hpp"
#include "dav/numeric.hpp"

namespace dav {

AbelianGroup::AbelianGroup(std::vector<long long> canonical_factors)
    : f_(std::move(canonical_factors)) {
  for (std::size_t i = 0; i < f_.size(); ++i) {
    if (f_[i] < 2) throw std::invalid_argument("invariant factor < 2");
    if (i + 1 < f_.size() && f_[i + 1] % f_[i] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

long long AbelianGroup::order() const {
  long long o = 1;
  for (long long d : f_) o *= d;
  return o;
}

std::string AbelianGroup::to_string() const {
  if (f_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < f_.size(); ++i) {
    if (i) os << " x ";
    os << "C" << f_[i];
  }
  return os.str();
}

AbelianGroup normalize(const std::vector<long long>& cyclic_orders) {
  std::map<long long, std::vector<int>> exps;  // prime -> exponent per entry
  for (long long m : cyclic_orders) {
    if (m < 1) throw std::invalid_argument("cyclic order must be >= 1");
    if (m == 1) continue;
    for (auto [p, e] : factor_integer(m)) exps[p].push_back(e);
  }
  std::size_t r = 0;
  for (auto& [p, v] : exps) {
    std::sort(v.begin(), v.end(), std::greater<>());
    r = std::max(r, v.size());
  }
  std::vector<long long> inv(r, 1);
  for (auto& [p, v] : exps)
    for (std::size_t j = 0; j < v.size(); ++j) inv[j] *= ipow(p, v[j]);
  std::reverse(inv.begin(), inv.end());
  return AbelianGroup(std::move(inv));
}

AbelianGroup direct_product(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<long long> all = a.invariant_factors();
  all.insert(all.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return normalize(all);
}

long long m_star(const AbelianGroup& g) {
  long long m = 1;
  for (long long d : g.invariant_factors()) m += d - 1;
  return m;
}

namespace {

long long max_prime_factor(long long n) {
  long long mp = 1;
  for (auto [p, e] : factor_integer(n)) mp = std::max(mp, p);
  return mp;
}

bool is_p_group(const AbelianGroup& g) {
  const auto& f = g.invariant_factors();
  if (f.empty()) return true;
  auto fact = factor_integer(f.back());
  return fact.size() == 1;  // d_r a prime power forces all d_i | d_r likewise
}

}  // namespace

std::optional<long long> davenport_formula(const AbelianGroup& g) {
  const auto& f = g.invariant_factors();
  if (g.rank() <= 2) return m_star(g);
  if (is_p_group(g)) return m_star(g);
  // C2 x C2n x C2kn, n and k odd, largest prime of n below 11
  if (g.rank() == 3 && f[0] == 2 && f[1] % 2 == 0 && (f[1] / 2) % 2 == 1 &&
      f[2] % f[1] == 0 && (f[2] / f[1]) % 2 == 1) {
    long long n = f[1] / 2;
    if (n == 1 || max_prime_factor(n) < 11) return m_star(g);
  }
  // C2^3 x C2n, n odd
  if (g.rank() == 4 && f[0] == 2 && f[1] == 2 && f[2] == 2 && f[3] % 2 == 0 &&
      (f[3] / 2) % 2 == 1)
    return m_star(g);
  return std::nullopt;
}

std::vector<long long> group_element_of_index(const AbelianGroup& g, long long idx) {
  std::vector<long long> x(g.invariant_factors().size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    long long d = g.invariant_factors()[i];
    x[i] = idx % d;
    idx /= d;
  }
  return x;
}

long long group_element_order(const AbelianGroup& g, long long idx) {
  auto x = group_element_of_index(g, idx);
  long long o = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    long long d = g.invariant_factors()[i];
    o = std::lcm(o, d / std::gcd(d, x[i]));
  }
  return o;
}

namespace {

// Flat addition/negation tables over mixed-radix element indices.
struct GroupTables {
  int n = 1;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> neg;

  explicit GroupTables(const AbelianGroup& g) {
    n = static_cast<int>(g.order());
    const auto& f = g.invariant_factors();
    const int r = static_cast<int>(f.size());
    add.resize(static_cast<std::size_t>(n) * n);
    neg.resize(n);
    std::vector<long long> xa(r), xb(r);
    for (int a = 0; a < n; ++a) {
      long long t = a;
      for (int i = 0; i < r; ++i) {
        xa[i] = t % f[i];
        t /= f[i];
      }
      long long nidx = 0;
      for (int i = r - 1; i >= 0; --i) nidx = nidx * f[i] + (f[i] - xa[i]) % f[i];
      neg[a] = static_cast<std::uint16_t>(nidx);
      for (int b = 0; b < n; ++b) {
        long long u = b;
        long long s = 0;
        long long mult = 1;
        for (int i = 0; i < r; ++i) {
          long long xi = (xa[i] + u % f[i]) % f[i];
          u /= f[i];
          s += xi * mult;
          mult *= f[i];
        }
        add[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(s);
      }
    }
  }
};

// Orbit representatives of the nonzero elements under a subgroup of Aut(G):
// coordinate permutations between equal factors, unit scalings of each
// coordinate, and unipotent transvections between coordinates. Any subgroup
// is sound here: a maximal zero-sum-free multiset can be mapped so that it
// contains a representative.
std::vector<int> automorphism_orbit_reps(const AbelianGroup& g) {
  const auto& f = g.invariant_factors();
  const int r = static_cast<int>(f.size());
  const int n = static_cast<int>(g.order());

  auto encode = [&](const std::vector<long long>& x) {
    long long idx = 0;
    for (int i = r - 1; i >= 0; --i) idx = idx * f[i] + x[i];
    return static_cast<int>(idx);
  };

  std::vector<std::vector<int>> gens;
  auto add_gen = [&](auto&& fn) {
    std::vector<int> perm(n);
    for (int a = 0; a < n; ++a) {
      auto x = group_element_of_index(g, a);
      fn(x);
      for (int i = 0; i < r; ++i) x[i] = ((x[i] % f[i]) + f[i]) % f[i];
      perm[a] = encode(x);
    }
    gens.push_back(std::move(perm));
  };

  for (int i = 0; i < r; ++i) {
    // unit scalings: generators of U(Z/d) (all units is overkill; use each)
    for (long long u = 2; u < f[i]; ++u) {
      if (std::gcd(u, f[i]) != 1) continue;
      add_gen([&, i, u](std::vector<long long>& x) { x[i] = x[i] * u % f[i]; });
    }
    if (i + 1 < r && f[i] == f[i + 1])
      add_gen([&, i](std::vector<long long>& x) { std::swap(x[i], x[i + 1]); });
    for (int j = 0; j < r; ++j) {
      if (j == i) continue;
      if (f[i] <= f[j]) {
        // x_j += (d_j/d_i) * x_i  and  x_i += x_j mod d_i
        add_gen([&, i, j](std::vector<long long>& x) {
          x[j] = (x[j] + (f[j] / f[i]) * x[i]) % f[j];
        });
        add_gen([&, i, j](std::vector<long long>& x) {
          x[i] = (x[i] + x[j]) % f[i];
        });
      }
    }
  }

  std::vector<int> orbit(n, -1);
  std::vector<int> reps;
  std::vector<int> queue;
  for (int a = 1; a < n; ++a) {
    if (orbit[a] >= 0) continue;
    reps.push_back(a);
    orbit[a] = a;
    queue.assign(1, a);
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (const auto& perm : gens) {
        int y = perm[x];
        if (orbit[y] < 0) {
          orbit[y] = a;
          queue.push_back(y);
        }
      }
    }
  }
  return reps;
}

struct ZsfSearch {
  const GroupTables& tab;
  int n;
  int words;
  int depth_cap;
  int target_len;
  std::uint64_t node_cap;

  std::uint64_t nodes = 0;
  int best = 0;
  std::vector<int> best_seq;
  std::vector<int> seq;
  std::vector<std::vector<std::uint64_t>> pool;
  std::vector<std::vector<std::pair<int, int>>> cand_pool;
  bool stop = false;
  bool budget_hit = false;

  ZsfSearch(const GroupTables& t, int cap, int target, std::uint64_t ncap)
      : tab(t),
        n(t.n),
        words((t.n + 63) / 64),
        depth_cap(cap),
        target_len(target),
        node_cap(ncap) {
    pool.assign(depth_cap + 2, std::vector<std::uint64_t>(words, 0));
    if (target_len > 0) cand_pool.assign(depth_cap + 2, {});
    seq.reserve(depth_cap + 1);
  }

  void record(int depth) {
    if (depth > best) {
      best = depth;
      best_seq = seq;
      if (target_len > 0 && best >= target_len) stop = true;
    }
  }

  // nxt := cur ∪ {e} ∪ (cur + e); returns popcount of nxt.
  int extend(const std::uint64_t* cur, int e, std::uint64_t* nxt) const {
    std::memcpy(nxt, cur, static_cast<std::size_t>(words) * 8);
    word_set(nxt, e);
    const std::uint16_t* row = tab.add.data() + static_cast<std::size_t>(e) * n;
    for (int wi = 0; wi < words; ++wi) {
      std::uint64_t w = cur[wi];
      while (w) {
        word_set(nxt, row[wi * 64 + std::countr_zero(w)]);
        w &= w - 1;
      }
    }
    return word_popcount(nxt, words);
  }

  void dfs(int depth, int min_idx, const std::uint64_t* cur) {
    record(depth);
    if (stop || depth >= depth_cap) return;
    std::uint64_t* nxt = pool[depth + 1].data();
    if (target_len > 0) {
      // Probe mode: visit children whose sum set grows slowest first; they
      // keep the most room for deep extensions. The child set is unchanged,
      // so exhaustion stays complete if the target is never reached.
      auto& cand = cand_pool[depth + 1];
      cand.clear();
      for (int e = min_idx; e < n; ++e) {
        if (word_test(cur, tab.neg[e])) continue;
        const int pop = extend(cur, e, nxt);
        if (depth + 1 + (n - 1 - pop) <= best) continue;
        cand.emplace_back(pop, e);
      }
      std::stable_sort(cand.begin(), cand.end());
      for (auto [pop, e] : cand) {
        if (++nodes > node_cap) {
          budget_hit = true;
          stop = true;
          return;
        }
        const int pop2 = extend(cur, e, nxt);
        if (depth + 1 + (n - 1 - pop2) <= best) continue;
        seq.push_back(e);
        dfs(depth + 1, e, nxt);
        seq.pop_back();
        if (stop) return;
      }
      return;
    }
    for (int e = min_idx; e < n; ++e) {
      if (word_test(cur, tab.neg[e])) continue;  // appending e closes a zero sum
      if (++nodes > node_cap) {
        budget_hit = true;
        stop = true;
        return;
      }
      const int pop = extend(cur, e, nxt);
      if (depth + 1 + (n - 1 - pop) <= best) continue;
      seq.push_back(e);
      dfs(depth + 1, e, nxt);
      seq.pop_back();
      if (stop) return;
    }
  }
};

// Checks a candidate sequence and returns true iff it is zero-sum free.
bool verify_zero_sum_free(const GroupTables& tab, const std::vector<int>& seq) {
  DynBitset sums(tab.n);
  for (int e : seq) {
    if (e <= 0 || e >= tab.n) return false;
    DynBitset next = sums;
    next.set(e);
    const std::uint16_t* row = tab.add.data() + static_cast<std::size_t>(e) * tab.n;
    sums.for_each([&](int s) { next.set(row[s]); });
    if (next.test(0)) return false;
    sums = next;
  }
  return true;
}

// The standard construction of length M(G)-1: (di - 1) copies of each
// coordinate generator. Always zero-sum free.
std::vector<int> m_star_construction(const AbelianGroup& g) {
  std::vector<int> seq;
  long long mult = 1;
  for (long long d : g.invariant_factors()) {
    for (long long c = 1; c < d; ++c) seq.push_back(static_cast<int>(mult));
    mult *= d;
  }
  return seq;
}

// Candidate sequences of length M(G) for C2^4 x C2n shapes (n odd >= 3),
// which beat the standard construction by one: 2n-3 copies of the C2n
// generator h, one e1 + c1*h, and six elements v_j + k*h whose F2^4 parts
// have zero-sum subsets only of size 4 and e1-sum subsets only of size 3.
// Every candidate is verified before use, so this list is allowed to contain
// misses.
std::vector<std::vector<int>> plus_one_candidates(const AbelianGroup& g) {
  const auto& f = g.invariant_factors();
  if (f.size() != 5 || f[0] != 2 || f[1] != 2 || f[2] != 2 || f[3] != 2) return {};
  const long long d = f[4];
  if (d % 2 != 0 || (d / 2) % 2 == 0 || d < 6) return {};

  auto idx = [&](int x1, int x2, int x3, int x4, long long c) {
    return static_cast<int>(x1 + 2 * x2 + 4 * x3 + 8 * x4 + 16 * c);
  };
  static constexpr int kVecs[6][4] = {{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0},
                                      {0, 0, 0, 1}, {1, 1, 0, 1}, {1, 0, 1, 1}};
  std::vector<std::vector<int>> out;
  for (long long k = 1; k < d; ++k) {
    if ((4 * k) % d > 2) continue;
    for (long long c1 = 1; c1 < d; ++c1) {
      std::vector<int> seq;
      for (long long a = 0; a < d - 3; ++a) seq.push_back(idx(0, 0, 0, 0, 1));
      seq.push_back(idx(1, 0, 0, 0, c1));
      for (const auto& v : kVecs) seq.push_back(idx(v[0], v[1], v[2], v[3], k));
      out.push_back(std::move(seq));
    }
  }
  return out;
}

}  // namespace

GroupSearchResult davenport_search(const AbelianGroup& g, const SearchBudget& budget) {
  const long long order = g.order();
  if (order > max_group_order())
    throw std::invalid_argument("group order " + std::to_string(order) +
                                " exceeds DAV_MAX_GROUP");
  GroupSearchResult res;
  if (g.is_trivial()) {
    res.davenport = 1;
    res.exact = true;
    return res;
  }

  GroupTables tab(g);
  const int default_cap = static_cast<int>(m_star(g)) + 8;
  const int depth_cap =
      budget.max_depth > 0 ? budget.max_depth : std::min<long long>(default_cap, order - 1);
  ZsfSearch s(tab, depth_cap, budget.target_length, budget.max_nodes);

  // Warm start: seed the incumbent with known constructions so the capacity
  // bound prunes from the first node.
  auto try_seed = [&](const std::vector<int>& seed) {
    if (static_cast<int>(seed.size()) > s.best && verify_zero_sum_free(tab, seed)) {
      s.best = static_cast<int>(seed.size());
      s.best_seq = seed;
      return true;
    }
    return false;
  };
  try_seed(m_star_construction(g));
  for (const auto& cand : plus_one_candidates(g))
    if (try_seed(cand)) break;
  if (!(budget.target_length > 0 && s.best >= budget.target_length)) {
    // Root elements are restricted to automorphism-orbit minima: the multiset
    // with lexicographically minimal sorted index sequence in each Aut-orbit
    // starts with such an element, so canonical (nondecreasing) enumeration
    // over these roots still reaches a maximum-length sequence.
    std::vector<std::uint64_t> root(s.words, 0);
    for (int rep : automorphism_orbit_reps(g)) {
      s.seq.assign(1, rep);
      std::fill(root.begin(), root.end(), 0);
      word_set(root.data(), rep);
      s.record(1);
      if (!s.stop) s.dfs(1, rep, root.data());
      if (s.stop) break;
    }
    s.seq.clear();
  } else {
    s.stop = true;
  }

  res.nodes = s.nodes;
  res.davenport = s.best + 1;
  res.witness = s.best_seq;
  res.target_reached = budget.target_length > 0 && s.best >= budget.target_length;
  // |sums| grows strictly along any zero-sum-free sequence and excludes the
  // identity, so order-1 is an unconditional upper bound on the length;
  // hitting a cap below that leaves exactness unknown.
  const bool cap_binding = s.best >= depth_cap && depth_cap < order - 1;
  res.exact = !s.budget_hit && !res.target_reached && !cap_binding;
  return res;
}

long long davenport_exact(const AbelianGroup& g, const SearchBudget& budget) {
  SearchBudget b = budget;
  b.target_length = 0;
  GroupSearchResult r = davenport_search(g, b);
  if (!r.exact)
    throw BudgetExceededError("davenport_exact: search budget exceeded for " +
                                  g.to_string(),
                              r.davenport);
  return r.davenport;
}

DavenportValue davenport(const AbelianGroup& g, const SearchBudget& budget) {
  if (auto v = davenport_formula(g)) return {*v, DavenportVia::formula};
  return {davenport_exact(g, budget), DavenportVia::search};
}

}  // namespace dav
