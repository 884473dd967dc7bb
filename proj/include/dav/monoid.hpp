#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dav/abelian.hpp"
#include "dav/bitset.hpp"
#include "dav/budget.hpp"

namespace dav {

/// A finite commutative monoid given by an explicit multiplication table.
/// Construction validates commutativity, associativity, the identity row and
/// (when present) the absorbing zero row.
class CayleyMonoid {
 public:
  static constexpr int kValidationCap = 4096;

  CayleyMonoid(int size, int identity, std::optional<int> zero,
               std::vector<std::uint16_t> table, std::string label = "");

  static CayleyMonoid trivial();

  int size() const { return m_; }
  int identity() const { return id_; }
  std::optional<int> zero() const { return zero_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * m_ + b]; }
  const std::uint16_t* row(int a) const {
    return table_.data() + static_cast<std::size_t>(a) * m_;
  }
  const std::vector<std::uint16_t>& table() const { return table_; }
  const std::string& label() const { return lbl_; }
  void set_label(std::string l) { lbl_ = std::move(l); }

  int element_order_power(int a) const;  // multiplicative order, or 0 if a is
                                         // not a unit

 private:
  int m_;
  int id_;
  std::optional<int> zero_;
  std::vector<std::uint16_t> table_;
  std::string lbl_;
};

/// Multiplicative closure of generators together with 1 inside Z/nZ, as a
/// monoid over the sorted residue list. An absorbing element, if one exists,
/// is detected and recorded as the zero.
CayleyMonoid submonoid_of_zmod(long long n, const std::set<long long>& generators);

/// Componentwise product; identity (1,1); zero present iff both factors have
/// one. Index of (a, b) is a * size(B) + b.
CayleyMonoid direct_product(const CayleyMonoid& a, const CayleyMonoid& b);

/// Restriction of S to a multiplicatively closed subset containing the
/// identity. Returns the submonoid and the list mapping new indices to old.
std::pair<CayleyMonoid, std::vector<int>> restrict_to(const CayleyMonoid& s,
                                                      const DynBitset& subset);

// Text/JSON ingestion: {"size": m, "identity": i, "zero": z?, "table": [...]}
// or the constructor syntax "zmod:<n>:{r1,r2,...}".
CayleyMonoid monoid_from_json(const std::string& json_text);
std::string monoid_to_json(const CayleyMonoid& s);
CayleyMonoid parse_monoid(const std::string& text);

/// Subset of a monoid closed under ambient multiplication; may be empty.
class IdealSubset {
 public:
  IdealSubset(const CayleyMonoid& owner, DynBitset members);

  static IdealSubset empty(const CayleyMonoid& s);
  static IdealSubset full(const CayleyMonoid& s);
  static IdealSubset zero(const CayleyMonoid& s);  // requires a zero element
  static IdealSubset of(const CayleyMonoid& s, const std::vector<int>& elems);

  const DynBitset& members() const { return members_; }
  const CayleyMonoid& owner() const { return *owner_; }
  bool empty_set() const { return members_.none(); }

 private:
  const CayleyMonoid* owner_;
  DynBitset members_;
};

/// T1 x T2 as an ideal of the product monoid built by direct_product(s1, s2).
IdealSubset product_ideal(const CayleyMonoid& product, const CayleyMonoid& s1,
                          const IdealSubset& t1, const CayleyMonoid& s2,
                          const IdealSubset& t2);

struct UnitGroupView {
  DynBitset unit_elements;
  AbelianGroup structure;
  // unit element index -> abstract element index (element orders match)
  std::vector<std::pair<int, long long>> index_map;
};

UnitGroupView units(const CayleyMonoid& s);

/// The unit group of S as a monoid (restriction of the table), plus the
/// new-to-old index map.
std::pair<CayleyMonoid, std::vector<int>> unit_submonoid(const CayleyMonoid& s);

/// True iff some proper sub-multiset of A has the same product as A.
bool is_reducible(const CayleyMonoid& s, const std::vector<int>& a);

/// Stab_{U(S)}(a) = { u in U(S) : u a = a }, as a bitset over all elements.
DynBitset stabilizer(const CayleyMonoid& s, int a);

struct UnitStabilizedResult {
  bool ok = false;
  std::optional<std::pair<int, int>> witness;  // (a, b) violating the condition
};

/// (S, T) is unit-stabilized when ab outside T with Stab(a) = Stab(ab)
/// forces ab into the unit orbit of a.
UnitStabilizedResult is_unit_stabilized_pair(const CayleyMonoid& s,
                                             const IdealSubset& t);

bool is_almost_unit_stabilized(const CayleyMonoid& s);

struct MonoidSearchResult {
  long long davenport = 0;
  std::vector<long long> relative;  // D(S, T_i) per requested ideal
  bool exact = false;
  bool target_reached = false;
  std::uint64_t nodes = 0;
  std::vector<int> witness;
};

/// Exact D(S) and, in the same traversal, D(S, T_i) for each requested ideal.
/// Explores irreducible multisets in nondecreasing element order with the
/// proper-subsequence-product bitset as state.
MonoidSearchResult davenport_search(const CayleyMonoid& s,
                                    std::span<const IdealSubset> ideals = {},
                                    const SearchBudget& budget = {});

long long davenport(const CayleyMonoid& s, const SearchBudget& budget = {});
long long davenport_relative(const CayleyMonoid& s, const IdealSubset& t,
                             const SearchBudget& budget = {});

}  // namespace dav
