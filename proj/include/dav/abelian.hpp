#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dav/budget.hpp"

namespace dav {

/// A finite abelian group in invariant-factor form: factors d1 | d2 | ... | dr
/// with every di >= 2. The empty list is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<long long> canonical_factors);

  const std::vector<long long>& invariant_factors() const { return f_; }
  long long order() const;
  long long exponent() const { return f_.empty() ? 1 : f_.back(); }
  int rank() const { return static_cast<int>(f_.size()); }
  bool is_trivial() const { return f_.empty(); }

  bool operator==(const AbelianGroup& o) const { return f_ == o.f_; }

  std::string to_string() const;  // e.g. "C2 x C12", "1" for trivial

 private:
  std::vector<long long> f_;
};

/// Canonicalizes an arbitrary product of cyclic groups. Entries equal to 1
/// are dropped; rejects non-positive entries.
AbelianGroup normalize(const std::vector<long long>& cyclic_orders);

AbelianGroup direct_product(const AbelianGroup& a, const AbelianGroup& b);

/// M(G) = 1 + sum(di - 1); a universal lower bound for D(G).
long long m_star(const AbelianGroup& g);

/// Closed-form D(G) = M(G) where a proven case applies (p-groups, rank <= 2,
/// C2 x C2n x C2kn with n,k odd and max prime of n < 11, C2^3 x C2n with n
/// odd). Absent otherwise.
std::optional<long long> davenport_formula(const AbelianGroup& g);

// Element coding used by the exact search and by tests: mixed radix with the
// first invariant factor least significant. Index 0 is the identity.
std::vector<long long> group_element_of_index(const AbelianGroup& g, long long idx);
long long group_element_order(const AbelianGroup& g, long long idx);

struct GroupSearchResult {
  long long davenport = 0;    // best known (exact iff `exact`)
  bool exact = false;
  bool target_reached = false;
  std::uint64_t nodes = 0;
  std::vector<int> witness;   // element indices of the longest zero-sum-free
                              // sequence found
};

/// Branch-and-bound over zero-sum-free sequences. State is the bitset of all
/// nonempty subsequence sums; elements are explored in nondecreasing index
/// order. Deterministic. Respects budget.target_length and budget.max_nodes;
/// the result is exact unless one of those stopped the search early.
GroupSearchResult davenport_search(const AbelianGroup& g,
                                   const SearchBudget& budget = {});

/// Exact D(G); throws BudgetExceededError (carrying the best lower bound)
/// when the search budget runs out.
long long davenport_exact(const AbelianGroup& g, const SearchBudget& budget = {});

enum class DavenportVia { formula, search };

struct DavenportValue {
  long long value = 0;
  DavenportVia via = DavenportVia::formula;
};

/// Closed form when available, exact search otherwise.
DavenportValue davenport(const AbelianGroup& g, const SearchBudget& budget = {});

}  // namespace dav
