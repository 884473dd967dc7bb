#include "dav/monoid.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dav/numeric.hpp"
#include "json.hpp"

namespace dav {

CayleyMonoid::CayleyMonoid(int size, int identity, std::optional<int> zero,
                           std::vector<std::uint16_t> table, std::string label)
    : m_(size), id_(identity), zero_(zero), table_(std::move(table)), lbl_(std::move(label)) {
  if (m_ < 1) throw std::invalid_argument("monoid size must be >= 1");
  if (m_ > kValidationCap)
    throw std::invalid_argument("monoid size exceeds validation cap");
  if (table_.size() != static_cast<std::size_t>(m_) * m_)
    throw std::invalid_argument("monoid table has wrong shape");
  for (auto v : table_)
    if (v >= m_) throw std::invalid_argument("monoid table entry out of range");
  if (id_ < 0 || id_ >= m_) throw std::invalid_argument("identity out of range");
  for (int x = 0; x < m_; ++x)
    if (mul(id_, x) != x) throw std::invalid_argument("identity row is not the identity");
  if (zero_) {
    if (*zero_ < 0 || *zero_ >= m_) throw std::invalid_argument("zero out of range");
    for (int x = 0; x < m_; ++x)
      if (mul(*zero_, x) != *zero_) throw std::invalid_argument("zero row is not absorbing");
  }
  for (int a = 0; a < m_; ++a)
    for (int b = a + 1; b < m_; ++b)
      if (mul(a, b) != mul(b, a)) throw std::invalid_argument("table is not commutative");
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < m_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw std::invalid_argument("table is not associative");
    }
}

CayleyMonoid CayleyMonoid::trivial() {
  return CayleyMonoid(1, 0, std::nullopt, {0}, "1");
}

int CayleyMonoid::element_order_power(int a) const {
  int x = a;
  int t = 1;
  while (x != id_) {
    x = mul(x, a);
    ++t;
    if (t > m_ + 1) return 0;  // not a unit: powers never return to identity
  }
  return t;
}

namespace {

std::optional<int> detect_absorbing(int m, const std::vector<std::uint16_t>& table) {
  for (int z = 0; z < m; ++z) {
    bool ok = true;
    for (int x = 0; x < m && ok; ++x)
      if (table[static_cast<std::size_t>(z) * m + x] != z) ok = false;
    if (ok) return z;
  }
  return std::nullopt;
}

}  // namespace

CayleyMonoid submonoid_of_zmod(long long n, const std::set<long long>& generators) {
  if (n < 1) throw std::invalid_argument("submonoid_of_zmod: n must be >= 1");
  std::set<long long> elems{1 % n};
  std::vector<long long> queue(elems.begin(), elems.end());
  for (long long g : generators) {
    long long r = ((g % n) + n) % n;
    if (elems.insert(r).second) queue.push_back(r);
  }
  while (!queue.empty()) {
    long long x = queue.back();
    queue.pop_back();
    for (long long y : std::vector<long long>(elems.begin(), elems.end())) {
      long long p = x * y % n;
      if (elems.insert(p).second) queue.push_back(p);
    }
  }
  std::vector<long long> list(elems.begin(), elems.end());  // sorted
  const int m = static_cast<int>(list.size());
  std::map<long long, int> idx;
  for (int i = 0; i < m; ++i) idx[list[i]] = i;
  std::vector<std::uint16_t> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] =
          static_cast<std::uint16_t>(idx[list[i] * list[j] % n]);
  std::ostringstream label;
  label << "zmod:" << n << ":{";
  bool first = true;
  for (long long g : generators) {
    if (!first) label << ",";
    label << g;
    first = false;
  }
  label << "}";
  const std::optional<int> zero = detect_absorbing(m, table);
  return CayleyMonoid(m, idx[1 % n], zero, std::move(table), label.str());
}

CayleyMonoid direct_product(const CayleyMonoid& a, const CayleyMonoid& b) {
  const long long m = static_cast<long long>(a.size()) * b.size();
  if (m > CayleyMonoid::kValidationCap)
    throw std::invalid_argument("direct_product: size cap exceeded");
  const int ma = a.size(), mb = b.size(), mm = static_cast<int>(m);
  std::vector<std::uint16_t> table(static_cast<std::size_t>(mm) * mm);
  for (int i = 0; i < mm; ++i) {
    const int i1 = i / mb, i2 = i % mb;
    for (int j = 0; j < mm; ++j) {
      const int j1 = j / mb, j2 = j % mb;
      table[static_cast<std::size_t>(i) * mm + j] =
          static_cast<std::uint16_t>(a.mul(i1, j1) * mb + b.mul(i2, j2));
    }
  }
  std::optional<int> zero;
  if (a.zero() && b.zero()) zero = *a.zero() * mb + *b.zero();
  std::string label = a.label().empty() || b.label().empty()
                          ? ""
                          : a.label() + " x " + b.label();
  return CayleyMonoid(mm, a.identity() * mb + b.identity(), zero, std::move(table),
                      std::move(label));
}

std::pair<CayleyMonoid, std::vector<int>> restrict_to(const CayleyMonoid& s,
                                                      const DynBitset& subset) {
  if (!subset.test(s.identity()))
    throw std::invalid_argument("restrict_to: subset must contain the identity");
  std::vector<int> old_of;
  subset.for_each([&](int e) { old_of.push_back(e); });
  const int m = static_cast<int>(old_of.size());
  std::vector<int> new_of(s.size(), -1);
  for (int i = 0; i < m; ++i) new_of[old_of[i]] = i;
  std::vector<std::uint16_t> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int p = s.mul(old_of[i], old_of[j]);
      if (new_of[p] < 0) throw std::invalid_argument("restrict_to: subset not closed");
      table[static_cast<std::size_t>(i) * m + j] = static_cast<std::uint16_t>(new_of[p]);
    }
  const std::optional<int> zero = detect_absorbing(m, table);
  CayleyMonoid sub(m, new_of[s.identity()], zero, std::move(table));
  return {std::move(sub), std::move(old_of)};
}

CayleyMonoid monoid_from_json(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  const int m = j.at("size").get<int>();
  const int id = j.at("identity").get<int>();
  std::optional<int> zero;
  if (j.contains("zero") && !j["zero"].is_null()) zero = j["zero"].get<int>();
  std::vector<std::uint16_t> table;
  for (const auto& v : j.at("table")) table.push_back(v.get<std::uint16_t>());
  return CayleyMonoid(m, id, zero, std::move(table));
}

std::string monoid_to_json(const CayleyMonoid& s) {
  nlohmann::json j;
  j["size"] = s.size();
  j["identity"] = s.identity();
  if (s.zero()) j["zero"] = *s.zero();
  j["table"] = s.table();
  return j.dump();
}

CayleyMonoid parse_monoid(const std::string& text) {
  if (text.rfind("zmod:", 0) == 0) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw std::invalid_argument("expected zmod:<n>:{...}");
    const long long n = std::stoll(text.substr(c1 + 1, c2 - c1 - 1));
    std::string rest = text.substr(c2 + 1);
    if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
      throw std::invalid_argument("expected {r1,r2,...} generator set");
    rest = rest.substr(1, rest.size() - 2);
    std::set<long long> gens;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) gens.insert(std::stoll(tok));
    return submonoid_of_zmod(n, gens);
  }
  return monoid_from_json(text);
}

IdealSubset::IdealSubset(const CayleyMonoid& owner, DynBitset members)
    : owner_(&owner), members_(std::move(members)) {
  if (members_.size() != owner.size())
    throw std::invalid_argument("ideal bitset has wrong size");
  bool ok = true;
  members_.for_each([&](int t) {
    for (int x = 0; x < owner.size(); ++x)
      if (!members_.test(owner.mul(x, t))) ok = false;
  });
  if (!ok) throw std::invalid_argument("subset is not an ideal (S*T not in T)");
}

IdealSubset IdealSubset::empty(const CayleyMonoid& s) {
  return IdealSubset(s, DynBitset(s.size()));
}

IdealSubset IdealSubset::full(const CayleyMonoid& s) {
  DynBitset b(s.size());
  for (int i = 0; i < s.size(); ++i) b.set(i);
  return IdealSubset(s, std::move(b));
}

IdealSubset IdealSubset::zero(const CayleyMonoid& s) {
  if (!s.zero()) throw std::invalid_argument("monoid has no zero element");
  DynBitset b(s.size());
  b.set(*s.zero());
  return IdealSubset(s, std::move(b));
}

IdealSubset IdealSubset::of(const CayleyMonoid& s, const std::vector<int>& elems) {
  DynBitset b(s.size());
  for (int e : elems) b.set(e);
  return IdealSubset(s, std::move(b));
}

IdealSubset product_ideal(const CayleyMonoid& product, const CayleyMonoid& s1,
                          const IdealSubset& t1, const CayleyMonoid& s2,
                          const IdealSubset& t2) {
  if (product.size() != s1.size() * s2.size())
    throw std::invalid_argument("product_ideal: monoid is not the product of the sides");
  DynBitset b(product.size());
  t1.members().for_each([&](int i) {
    t2.members().for_each([&](int j) { b.set(i * s2.size() + j); });
  });
  return IdealSubset(product, std::move(b));
}

UnitGroupView units(const CayleyMonoid& s) {
  const int m = s.size();
  UnitGroupView view;
  view.unit_elements = DynBitset(m);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      if (s.mul(u, v) == s.identity()) {
        view.unit_elements.set(u);
        break;
      }

  std::vector<int> unit_list;
  view.unit_elements.for_each([&](int u) { unit_list.push_back(u); });
  std::vector<long long> ord(unit_list.size());
  for (std::size_t i = 0; i < unit_list.size(); ++i)
    ord[i] = s.element_order_power(unit_list[i]);

  // Structure recovery by order counting: for each prime p dividing |U|, the
  // counts #{x : ord(x) | p^i} determine the p-component type.
  const long long u_count = static_cast<long long>(unit_list.size());
  std::vector<long long> prime_powers;
  if (u_count > 1) {
    for (auto [p, e_max] : factor_integer(u_count)) {
      std::vector<int> parts_ge;  // parts_ge[i-1] = #parts >= i
      long long prev_log = 0;
      for (int i = 1; i <= e_max; ++i) {
        const long long pi = ipow(p, i);
        long long c = 0;  // #{x in U : x^(p^i) = identity}
        for (long long o : ord)
          if (pi % o == 0) ++c;
        long long lg = 0;
        long long t = c;
        while (t > 1) {
          if (t % p) throw std::logic_error("unit count not a power of the prime");
          t /= p;
          ++lg;
        }
        parts_ge.push_back(static_cast<int>(lg - prev_log));
        prev_log = lg;
      }
      for (int j = 1; j <= (parts_ge.empty() ? 0 : parts_ge[0]); ++j) {
        int e = 0;
        for (std::size_t i = 0; i < parts_ge.size(); ++i)
          if (parts_ge[i] >= j) e = static_cast<int>(i) + 1;
        prime_powers.push_back(ipow(p, e));
      }
    }
  }
  view.structure = normalize(prime_powers);

  // Order-matching bijection between concrete units and abstract elements.
  std::vector<std::pair<long long, int>> by_ord;
  for (std::size_t i = 0; i < unit_list.size(); ++i)
    by_ord.emplace_back(ord[i], unit_list[i]);
  std::sort(by_ord.begin(), by_ord.end());
  std::vector<std::pair<long long, long long>> abstract_by_ord;
  for (long long idx = 0; idx < u_count; ++idx)
    abstract_by_ord.emplace_back(group_element_order(view.structure, idx), idx);
  std::sort(abstract_by_ord.begin(), abstract_by_ord.end());
  for (std::size_t i = 0; i < by_ord.size(); ++i) {
    if (by_ord[i].first != abstract_by_ord[i].first)
      throw std::logic_error("unit group structure inference: order mismatch");
    view.index_map.emplace_back(by_ord[i].second, abstract_by_ord[i].second);
  }
  return view;
}

std::pair<CayleyMonoid, std::vector<int>> unit_submonoid(const CayleyMonoid& s) {
  return restrict_to(s, units(s).unit_elements);
}

bool is_reducible(const CayleyMonoid& s, const std::vector<int>& a) {
  if (a.empty()) throw std::invalid_argument("is_reducible: sequence must be nonempty");
  DynBitset q(s.size());
  int p = s.identity();
  for (int e : a) {
    if (e < 0 || e >= s.size()) throw std::out_of_range("element index out of range");
    DynBitset q2 = q;
    q2.set(p);
    q.for_each([&](int x) { q2.set(s.mul(x, e)); });
    q = std::move(q2);
    p = s.mul(p, e);
  }
  return q.test(p);
}

DynBitset stabilizer(const CayleyMonoid& s, int a) {
  DynBitset st(s.size());
  units(s).unit_elements.for_each([&](int u) {
    if (s.mul(u, a) == a) st.set(u);
  });
  return st;
}

UnitStabilizedResult is_unit_stabilized_pair(const CayleyMonoid& s,
                                             const IdealSubset& t) {
  const int m = s.size();
  const DynBitset unit_set = units(s).unit_elements;
  std::vector<DynBitset> stab(m, DynBitset(m)), orbit(m, DynBitset(m));
  for (int a = 0; a < m; ++a)
    unit_set.for_each([&](int u) {
      const int ua = s.mul(u, a);
      orbit[a].set(ua);
      if (ua == a) stab[a].set(u);
    });
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int ab = s.mul(a, b);
      if (t.members().test(ab)) continue;
      if (stab[a] == stab[ab] && !orbit[a].test(ab))
        return {false, std::make_pair(a, b)};
    }
  return {true, std::nullopt};
}

bool is_almost_unit_stabilized(const CayleyMonoid& s) {
  if (!s.zero()) return false;
  return is_unit_stabilized_pair(s, IdealSubset::zero(s)).ok;
}

namespace {

struct MonoidSearch {
  const CayleyMonoid& s;
  int m;
  int words;
  int depth_cap;
  int target_len;
  std::uint64_t node_cap;
  std::vector<const DynBitset*> targets;  // nonempty ideals only

  std::uint64_t nodes = 0;
  int best = 0;
  std::vector<int> best_rel;  // parallel to targets
  std::vector<int> best_seq;
  std::vector<int> seq;
  std::vector<std::vector<std::uint64_t>> pool;
  bool stop = false;
  bool budget_hit = false;

  MonoidSearch(const CayleyMonoid& mono, int cap, int target, std::uint64_t ncap)
      : s(mono),
        m(mono.size()),
        words((mono.size() + 63) / 64),
        depth_cap(cap),
        target_len(target),
        node_cap(ncap) {
    pool.assign(depth_cap + 2, std::vector<std::uint64_t>(words, 0));
    seq.reserve(depth_cap + 1);
  }

  int prune_ref() const {
    int r = best;
    for (int b : best_rel) r = std::min(r, b);
    return r;
  }

  void record(int depth, int p) {
    if (depth > best) {
      best = depth;
      best_seq = seq;
      if (target_len > 0 && best >= target_len) stop = true;
    }
    for (std::size_t i = 0; i < targets.size(); ++i)
      if (targets[i]->test(p) && depth > best_rel[i]) best_rel[i] = depth;
  }

  void dfs(int depth, int min_idx, int p, const std::uint64_t* q) {
    if (stop || depth >= depth_cap) return;
    std::uint64_t* q2 = pool[depth + 1].data();
    for (int e = min_idx; e < m; ++e) {
      const int p2 = s.mul(p, e);
      if (p2 == p) continue;  // p in Q2 via {p}; appending e is always reducible
      if (++nodes > node_cap) {
        budget_hit = true;
        stop = true;
        return;
      }
      std::memcpy(q2, q, static_cast<std::size_t>(words) * 8);
      word_set(q2, p);
      const std::uint16_t* row = s.row(e);
      for (int wi = 0; wi < words; ++wi) {
        std::uint64_t w = q[wi];
        while (w) {
          word_set(q2, row[wi * 64 + std::countr_zero(w)]);
          w &= w - 1;
        }
      }
      if (word_test(q2, p2)) continue;  // reducible
      const int pop = word_popcount(q2, words);
      if (depth + 1 + (m - 1 - pop) <= prune_ref()) continue;
      seq.push_back(e);
      record(depth + 1, p2);
      if (!stop) dfs(depth + 1, e, p2, q2);
      seq.pop_back();
      if (stop) return;
    }
  }
};

}  // namespace

MonoidSearchResult davenport_search(const CayleyMonoid& s,
                                    std::span<const IdealSubset> ideals,
                                    const SearchBudget& budget) {
  const int m = s.size();
  if (m > max_monoid_size())
    throw std::invalid_argument("monoid size " + std::to_string(m) +
                                " exceeds DAV_MAX_MONOID");
  const int natural_cap = m - 1;  // |Q| grows strictly and avoids the product
  const int depth_cap =
      budget.max_depth > 0 ? std::min(budget.max_depth, natural_cap) : natural_cap;
  MonoidSearch ms(s, depth_cap, budget.target_length, budget.max_nodes);

  MonoidSearchResult res;
  res.relative.assign(ideals.size(), 1);
  std::vector<std::size_t> slot;  // targets index -> ideals index
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (&ideals[i].owner() != &s)
      throw std::invalid_argument("ideal does not belong to the searched monoid");
    if (!ideals[i].empty_set()) {
      ms.targets.push_back(&ideals[i].members());
      slot.push_back(i);
    }
  }
  ms.best_rel.assign(ms.targets.size(), 0);

  // Seed with single-element power runs: [x^k] is irreducible while x^k has
  // not been seen among earlier powers.
  for (int x = 0; x < m; ++x) {
    DynBitset seen(m);
    int p = s.identity();
    std::vector<int> run;
    for (int k = 1; k <= depth_cap + 1; ++k) {
      seen.set(p);
      p = s.mul(p, x);
      if (seen.test(p)) break;
      run.push_back(x);
      const int depth = static_cast<int>(run.size());
      if (depth > ms.best) {
        ms.best = depth;
        ms.best_seq = run;
      }
      for (std::size_t i = 0; i < ms.targets.size(); ++i)
        if (ms.targets[i]->test(p) && depth > ms.best_rel[i]) ms.best_rel[i] = depth;
    }
  }

  if (!(budget.target_length > 0 && ms.best >= budget.target_length)) {
    std::vector<std::uint64_t> q0(ms.words, 0);
    ms.seq.clear();
    ms.dfs(0, 0, s.identity(), q0.data());
  }

  res.nodes = ms.nodes;
  res.davenport = ms.best + 1;
  res.witness = ms.best_seq;
  for (std::size_t i = 0; i < ms.targets.size(); ++i)
    res.relative[slot[i]] = ms.best_rel[i] + 1;
  res.target_reached = budget.target_length > 0 && ms.best >= budget.target_length;
  const bool cap_binding = ms.best >= depth_cap && depth_cap < natural_cap;
  res.exact = !ms.budget_hit && !res.target_reached && !cap_binding;
  return res;
}

long long davenport(const CayleyMonoid& s, const SearchBudget& budget) {
  SearchBudget b = budget;
  b.target_length = 0;
  auto r = davenport_search(s, {}, b);
  if (!r.exact)
    throw BudgetExceededError("monoid davenport: search budget exceeded", r.davenport);
  return r.davenport;
}

long long davenport_relative(const CayleyMonoid& s, const IdealSubset& t,
                             const SearchBudget& budget) {
  if (t.empty_set()) return 1;
  SearchBudget b = budget;
  b.target_length = 0;
  std::vector<IdealSubset> ts{t};
  auto r = davenport_search(s, ts, b);
  if (!r.exact)
    throw BudgetExceededError("monoid davenport_relative: search budget exceeded",
                              r.relative[0]);
  return r.relative[0];
}

}  // namespace dav
