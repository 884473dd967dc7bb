#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dav/abelian.hpp"
#include "dav/ring.hpp"

namespace dav {

/// D on abelian groups, injected so callers choose between closed forms and
/// exact search. Must be total on the groups it is asked about; may throw
/// BudgetExceededError.
using GroupDavenport = std::function<long long(const AbelianGroup&)>;

GroupDavenport group_davenport_dispatch(SearchBudget budget = {});
GroupDavenport group_davenport_search_only(SearchBudget budget = {});

struct Thm1Entry {
  int a = 0;
  int b = 0;
  long long value = 0;
};

struct Thm1Report {
  LocalDecomposition decomposition;
  AbelianGroup residual_units;  // U(R')
  long long value = 0;
  int argmax_a = 0;
  int argmax_b = 0;
  std::vector<Thm1Entry> table;
};

/// D(R) = max over 0<=a<=k2+k4, 0<=b<=k3 of
///   D(U(R') x C2^(k2+k4+2k3-a-2b)) + k1 + 2a + 3b,
/// evaluated over the full (a, b) grid.
Thm1Report davenport_ring_thm1(const LocalDecomposition& decomp,
                               const GroupDavenport& group_d);
Thm1Report davenport_ring_thm1(const RingSpec& spec, const GroupDavenport& group_d);

enum class Tightness { none, power_of_two_units, no_bad_factors };
std::string tightness_name(Tightness t);

struct BoundsReport {
  long long lower = 0;
  long long upper = 0;
  Tightness tight = Tightness::none;
};

/// D(U(R)) + k1 <= D(R) <= D(U(R)) + k1 + k2 + k3 + k4, tight on the right
/// when |U(R)| is a power of two or no bad factors beyond Z/2Z appear.
BoundsReport bounds_thm2(const LocalDecomposition& decomp, const GroupDavenport& group_d);

/// D(R) <= D(U(R)) + n2(R).
long long bound_thm3(const RingSpec& spec, const GroupDavenport& group_d);

/// Bounds on D(R) - D(U(R)) for R = F_2[x]/(f) with f = x^a (x+1)^b g:
/// [d_{a1}+d_{b1}, d_{a1}+d_{b1}+d_{a2}+d_{b2}] with Kronecker deltas.
BoundsReport poly_bounds(const PolyFp& f);

/// Satisfied zero-defect predicates, by case number:
///  1 odd order; 2 F_q algebra with q = 2^k > 2 (only on caller assertion);
///  3 Z/nZ with 16 | n; 4 F_2[x]/(f) with v_x, v_{x+1} outside {1,2};
///  5 one Z/4Z or F_2[x]/(x^2) factor with |U(R')| odd > 1 and certified
///    defect-free R'; 6 F_2[x]/(x^2 g) with g squarefree, coprime to x(x+1).
std::vector<int> delta_zero_cases(const RingSpec& spec, const GroupDavenport& group_d,
                                  bool assert_fq_algebra = false);

struct ZnDeltaResult {
  int delta = 0;
  std::string explanation;
};

/// Exact D(Z/nZ) - D(U(Z/nZ)) from the 2-adic valuation of n, using exact
/// group values for the 4b and 8b cases.
ZnDeltaResult zn_delta(long long n, const GroupDavenport& group_d);

/// Bounds on the defect of Z/n1Z x ... x Z/nrZ:
/// #{i : 2 || n_i} <= D(R) - D(U(R)) <= #{i : 2 | n_i, 16 ∤ n_i},
/// tight on the right when every n_i is a power of two.
BoundsReport zn_product_bounds(const std::vector<long long>& ns);

}  // namespace dav
