#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dav {

/// Polynomial over F_p, coefficients ascending by degree with no trailing
/// zeros (empty vector = zero polynomial).
struct PolyFp {
  int p = 2;
  std::vector<int> c;

  bool operator==(const PolyFp& o) const { return p == o.p && c == o.c; }
};

PolyFp poly_zero(int p);
PolyFp poly_one(int p);
PolyFp poly_x(int p);
PolyFp poly_from_coeffs(int p, std::vector<int> ascending);

inline int degree(const PolyFp& f) { return static_cast<int>(f.c.size()) - 1; }
inline bool is_zero(const PolyFp& f) { return f.c.empty(); }
bool is_monic(const PolyFp& f);

PolyFp poly_add(const PolyFp& a, const PolyFp& b);
PolyFp poly_sub(const PolyFp& a, const PolyFp& b);
PolyFp poly_mul(const PolyFp& a, const PolyFp& b);
std::pair<PolyFp, PolyFp> poly_divmod(const PolyFp& a, const PolyFp& b);
PolyFp poly_mod(const PolyFp& a, const PolyFp& b);
PolyFp poly_gcd(PolyFp a, PolyFp b);  // monic gcd
PolyFp poly_make_monic(const PolyFp& f);
PolyFp poly_pow(const PolyFp& f, int e);

/// Monomials joined by '+', highest degree first: "x^3+2x+1".
std::string poly_to_string(const PolyFp& f);
PolyFp poly_parse(int p, const std::string& text);

// Integer coding of residues mod f: sum c_i p^i over coefficients of the
// canonical representative. Deterministic enumeration order for tables.
long long poly_code(const PolyFp& f);
PolyFp poly_from_code(int p, long long code);

bool poly_is_irreducible(const PolyFp& f);

/// Monic irreducibles of degree 1..max_degree, ordered by (degree, code).
std::vector<PolyFp> monic_irreducibles(int p, int max_degree);

/// Complete factorization over F_p by trial division against enumerated monic
/// irreducibles; factors ordered by (degree, code), paired with multiplicity.
std::vector<std::pair<PolyFp, int>> factor_poly(const PolyFp& f);

/// Multiplicity of the irreducible q in f (valuation).
int poly_valuation(const PolyFp& f, const PolyFp& q);

}  // namespace dav
