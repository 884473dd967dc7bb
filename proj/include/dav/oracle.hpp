#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dav/formulas.hpp"
#include "dav/monoid.hpp"
#include "dav/ring.hpp"

namespace dav {

struct OracleOptions {
  SearchBudget budget;
  int threads = 1;
  bool with_oracle = true;  // run the brute-force cross-check
};

/// D(R) by exhaustive irreducible-sequence search on the multiplicative
/// monoid. The independent reference the formula layer is checked against.
long long davenport_ring_bruteforce(const RingSpec& spec, const SearchBudget& budget = {});

/// Everything the sweeps assert about one ring: formula value, bounds,
/// zero-defect cases, and (optionally) the brute-force value with agreement
/// flags. `failures` lists each violated relation.
struct Thm1Verification {
  std::string spec;
  long long size = 0;
  long long du = 0;  // D(U(R)) by exact group search
  Thm1Report thm1;
  BoundsReport thm2;
  long long thm3 = 0;
  std::vector<int> cases;
  std::optional<ZnDeltaResult> zn;       // Z/nZ inputs
  std::optional<BoundsReport> poly_dlt;  // F_2[x]/(f) inputs: defect bounds
  std::optional<long long> oracle;
  std::optional<long long> oracle_lower_bound;  // when the oracle ran out of budget
  bool ok = true;
  std::vector<std::string> failures;
};

Thm1Verification verify_thm1(const RingSpec& spec, const OracleOptions& opts = {});

std::vector<Thm1Verification> run_thm1_zn_suite(long long n_min, long long n_max,
                                                const OracleOptions& opts = {});
std::vector<Thm1Verification> run_thm1_poly_suite(int max_degree,
                                                  const OracleOptions& opts = {});

struct LemmaCheck {
  std::string lemma;
  std::string instance;
  long long lhs = 0;
  long long rhs = 0;
  std::string relation;  // ">=", "=="
  bool ok = false;
};

/// Product/relative-constant identities checked with every quantity computed
/// by independent search over the documented instance family.
std::vector<LemmaCheck> run_lemma_suite(const OracleOptions& opts = {});

struct LocalClassRow {
  std::string spec;
  long long size = 0;
  long long residue_field_size = 0;
  bool unit_stabilized = false;
  bool almost_unit_stabilized = false;
  long long d_ring = 0;
  long long d_units = 0;
  long long delta = 0;
  BadClass bad = BadClass::none;
  bool ok = false;
  std::vector<std::string> failures;
};

/// Status of every local ring Z/p^kZ up to zmod_cap and F_2[x]/(q^e) of size
/// up to poly_size_cap against the stabilization and defect classification.
std::vector<LocalClassRow> run_local_classification(long long zmod_cap,
                                                    long long poly_size_cap,
                                                    const OracleOptions& opts = {});

struct RdRow {
  int d = 0;
  std::string spec;
  std::string group_a, group_b;
  long long d_a = 0;
  long long d_b = 0;           // exact or lower bound, see b_exact
  bool b_exact = false;
  long long d_ring = 0;        // max(d_a + 2, d_b)
  long long delta = 0;
  bool delta_exact = false;
  long long expected_delta = 0;
  std::optional<long long> ring_oracle;  // brute force on the ring, d = 2 only
  bool ok = false;
  std::vector<std::string> failures;
};

/// The F_2[x]/(x^2 f_d^2) family with f_d irreducible of degree d. The defect
/// is certified either by exhausting the second group or by a verified
/// length-witness that pins the maximum in the two-term formula.
RdRow verify_rd_example(int d, const OracleOptions& opts = {});
std::vector<RdRow> run_rd_suite(bool include_d4, const OracleOptions& opts = {});

// Deterministic JSON (no timings, no node counts) for reports; suites emit
// one line per instance.
std::string to_json(const Thm1Verification& v);
std::string to_json(const LemmaCheck& c);
std::string to_json(const LocalClassRow& r);
std::string to_json(const RdRow& r);

std::string csv_header_thm1();
std::string to_csv(const Thm1Verification& v);

}  // namespace dav
