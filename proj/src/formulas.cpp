#include "dav/formulas.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dav {

GroupDavenport group_davenport_dispatch(SearchBudget budget) {
  return [budget](const AbelianGroup& g) { return davenport(g, budget).value; };
}

GroupDavenport group_davenport_search_only(SearchBudget budget) {
  return [budget](const AbelianGroup& g) { return davenport_exact(g, budget); };
}

namespace {

AbelianGroup residual_unit_group(const LocalDecomposition& decomp) {
  std::vector<long long> orders;
  for (const auto& d : decomp.residual) {
    const AbelianGroup u = unit_group(d.spec);
    orders.insert(orders.end(), u.invariant_factors().begin(),
                  u.invariant_factors().end());
  }
  return normalize(orders);
}

AbelianGroup with_c2_power(const AbelianGroup& g, int k) {
  std::vector<long long> orders = g.invariant_factors();
  for (int i = 0; i < k; ++i) orders.push_back(2);
  return normalize(orders);
}

}  // namespace

Thm1Report davenport_ring_thm1(const LocalDecomposition& decomp,
                               const GroupDavenport& group_d) {
  Thm1Report rep;
  rep.decomposition = decomp;
  rep.residual_units = residual_unit_group(decomp);
  const int k1 = decomp.k1, k2 = decomp.k2, k3 = decomp.k3, k4 = decomp.k4;
  bool first = true;
  for (int a = 0; a <= k2 + k4; ++a)
    for (int b = 0; b <= k3; ++b) {
      const int c2_exp = k2 + k4 + 2 * k3 - a - 2 * b;
      const long long v =
          group_d(with_c2_power(rep.residual_units, c2_exp)) + k1 + 2 * a + 3 * b;
      rep.table.push_back({a, b, v});
      if (first || v > rep.value) {
        rep.value = v;
        rep.argmax_a = a;
        rep.argmax_b = b;
        first = false;
      }
    }
  return rep;
}

Thm1Report davenport_ring_thm1(const RingSpec& spec, const GroupDavenport& group_d) {
  return davenport_ring_thm1(decompose(spec), group_d);
}

std::string tightness_name(Tightness t) {
  switch (t) {
    case Tightness::none:
      return "none";
    case Tightness::power_of_two_units:
      return "power-of-two-units";
    case Tightness::no_bad_factors:
      return "no-bad-factors";
  }
  return "?";
}

BoundsReport bounds_thm2(const LocalDecomposition& decomp, const GroupDavenport& group_d) {
  const AbelianGroup ur = with_c2_power(residual_unit_group(decomp),
                                        decomp.k2 + decomp.k4 + 2 * decomp.k3);
  const long long du = group_d(ur);
  BoundsReport rep;
  rep.lower = du + decomp.k1;
  rep.upper = du + decomp.k1 + decomp.k2 + decomp.k3 + decomp.k4;
  const long long u_order = ur.order();
  if (decomp.k2 + decomp.k3 + decomp.k4 == 0)
    rep.tight = Tightness::no_bad_factors;
  else if ((u_order & (u_order - 1)) == 0)
    rep.tight = Tightness::power_of_two_units;
  return rep;
}

long long bound_thm3(const RingSpec& spec, const GroupDavenport& group_d) {
  return group_d(unit_group(spec)) + n2(spec);
}

BoundsReport poly_bounds(const PolyFp& f) {
  if (f.p != 2) throw std::invalid_argument("poly_bounds: defined over F_2");
  if (degree(f) < 1) throw std::invalid_argument("poly_bounds: f must be nonconstant");
  const int a = poly_valuation(f, poly_x(2));
  const int b = poly_valuation(f, poly_from_coeffs(2, {1, 1}));
  BoundsReport rep;
  rep.lower = (a == 1 ? 1 : 0) + (b == 1 ? 1 : 0);
  rep.upper = rep.lower + (a == 2 ? 1 : 0) + (b == 2 ? 1 : 0);
  return rep;
}

std::vector<int> delta_zero_cases(const RingSpec& spec, const GroupDavenport& group_d,
                                  bool assert_fq_algebra) {
  std::vector<int> cases;
  if (spec.size() % 2 == 1) cases.push_back(1);
  if (assert_fq_algebra) cases.push_back(2);
  if (spec.kind() == RingKind::zmod && spec.zmod_n() % 16 == 0) cases.push_back(3);
  if (spec.kind() == RingKind::poly_quotient && spec.poly_p() == 2) {
    const int vx = poly_valuation(spec.poly_modulus(), poly_x(2));
    const int vx1 = poly_valuation(spec.poly_modulus(), poly_from_coeffs(2, {1, 1}));
    if (vx != 1 && vx != 2 && vx1 != 1 && vx1 != 2) cases.push_back(4);
  }
  // Case 5: exactly one Z/4Z or F_2[x]/(x^2) local factor, the rest with an
  // odd nontrivial unit group and zero defect (certified by comparing the
  // residual's formula value against D of its unit group).
  {
    const LocalDecomposition d = decompose(spec);
    if (d.k1 == 0 && d.k3 == 0 && d.k2 + d.k4 == 1) {
      const AbelianGroup ur = residual_unit_group(d);
      if (ur.order() % 2 == 1 && ur.order() > 1) {
        LocalDecomposition residual_only;
        residual_only.factors = d.residual;
        residual_only.residual = d.residual;
        const Thm1Report r = davenport_ring_thm1(residual_only, group_d);
        if (r.value == group_d(ur)) cases.push_back(5);
      }
    }
  }
  if (spec.kind() == RingKind::poly_quotient && spec.poly_p() == 2) {
    const auto fact = factor_poly(spec.poly_modulus());
    bool x_sq = false, ok = true, has_other = false;
    for (const auto& [q, e] : fact) {
      const bool is_x = (q == poly_x(2));
      const bool is_x1 = (q == poly_from_coeffs(2, {1, 1}));
      if (is_x) {
        if (e != 2) ok = false;
        x_sq = true;
      } else if (is_x1) {
        ok = false;
      } else {
        if (e != 1) ok = false;
        has_other = true;
      }
    }
    if (ok && x_sq && has_other) cases.push_back(6);
  }
  std::sort(cases.begin(), cases.end());
  return cases;
}

ZnDeltaResult zn_delta(long long n, const GroupDavenport& group_d) {
  if (n < 2) throw std::invalid_argument("zn_delta: n must be >= 2");
  int v2 = 0;
  long long b = n;
  while (b % 2 == 0) {
    b /= 2;
    ++v2;
  }
  ZnDeltaResult res;
  if (v2 == 0) {
    res.delta = 0;
    res.explanation = "n odd";
  } else if (v2 >= 4) {
    res.delta = 0;
    res.explanation = "16 divides n";
  } else if (v2 == 1) {
    res.delta = 1;
    res.explanation = "n = 2b with b odd";
  } else if (v2 == 2) {
    const long long du_n = group_d(unit_group(RingSpec::zmod(n)));
    const long long du_b =
        b == 1 ? 1 : group_d(unit_group(RingSpec::zmod(b)));
    res.delta = (du_n == du_b + 1) ? 1 : 0;
    std::ostringstream os;
    os << "n = 4b: D(U(Z/n)) = " << du_n << ", D(U(Z/b)) = " << du_b
       << (res.delta ? " (+1 equality holds)" : " (+1 equality fails)");
    res.explanation = os.str();
  } else {
    const long long du_n = group_d(unit_group(RingSpec::zmod(n)));
    const long long du_b =
        b == 1 ? 1 : group_d(unit_group(RingSpec::zmod(b)));
    res.delta = (du_n == du_b + 2) ? 1 : 0;
    std::ostringstream os;
    os << "n = 8b: D(U(Z/n)) = " << du_n << ", D(U(Z/b)) = " << du_b
       << (res.delta ? " (+2 equality holds)" : " (+2 equality fails)");
    res.explanation = os.str();
  }
  return res;
}

BoundsReport zn_product_bounds(const std::vector<long long>& ns) {
  BoundsReport rep;
  bool all_pow2 = true;
  for (long long n : ns) {
    if (n < 2) throw std::invalid_argument("zn_product_bounds: entries must be >= 2");
    if (n % 4 == 2) ++rep.lower;
    if (n % 2 == 0 && n % 16 != 0) ++rep.upper;
    if (n & (n - 1)) all_pow2 = false;
  }
  if (all_pow2) rep.tight = Tightness::power_of_two_units;
  return rep;
}

}  // namespace dav
