#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "dav/abelian.hpp"
#include "dav/monoid.hpp"
#include "dav/numeric.hpp"
#include "dav/poly.hpp"

namespace dav {

enum class RingKind { zmod, poly_quotient, product };

/// Symbolic description of a finite commutative ring: Z/nZ, F_p[x]/(f), or a
/// flattened product of those.
class RingSpec {
 public:
  RingSpec() = default;  // placeholder value; build real specs via the factories

  static RingSpec zmod(long long n);
  static RingSpec poly_quotient(int p, PolyFp modulus);
  static RingSpec product(std::vector<RingSpec> factors);  // flattens nesting

  /// Grammar: zmod:<n> | poly:<p>:<polynomial> | product:[<spec>,...]
  static RingSpec parse(const std::string& text);

  RingKind kind() const { return kind_; }
  long long size() const;
  long long zmod_n() const;
  int poly_p() const;
  const PolyFp& poly_modulus() const;
  const std::vector<RingSpec>& factors() const;

  std::string to_string() const;
  bool operator==(const RingSpec& o) const { return to_string() == o.to_string(); }

 private:
  RingKind kind_ = RingKind::zmod;
  long long n_ = 0;
  int p_ = 0;
  PolyFp modulus_;
  std::vector<RingSpec> factors_;
};

/// Ring element in canonical reduced form: residue in [0, n), coefficient
/// vector of length deg f, or a tuple of component elements.
struct RingElement {
  std::variant<long long, std::vector<int>, std::vector<RingElement>> rep;

  bool operator==(const RingElement& o) const { return rep == o.rep; }
};

RingElement ring_zero(const RingSpec& spec);
RingElement ring_one(const RingSpec& spec);
RingElement ring_add(const RingSpec& spec, const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingSpec& spec, const RingElement& a, const RingElement& b);

// Deterministic enumeration: residues ascending, polynomials by coefficient
// code, products lexicographic with the first component most significant.
long long ring_index(const RingSpec& spec, const RingElement& e);
RingElement ring_element(const RingSpec& spec, long long index);
std::string ring_element_to_string(const RingSpec& spec, const RingElement& e);

/// The semigroup of the ring under multiplication, over the enumeration
/// order; identity is 1, zero is 0. Size capped by DAV_MAX_MONOID.
CayleyMonoid multiplicative_monoid(const RingSpec& spec);

enum class BadClass { none, r1, r2, r3, r4 };
std::string bad_class_name(BadClass c);

struct LocalRingDescriptor {
  RingSpec spec;
  long long size = 0;
  long long residue_field_size = 0;
  BadClass bad_class = BadClass::none;
};

struct LocalDecomposition {
  std::vector<LocalRingDescriptor> factors;
  int k1 = 0, k2 = 0, k3 = 0, k4 = 0;
  std::vector<LocalRingDescriptor> residual;  // factors with bad_class none
};

/// Classification of a local ring (prime-power quotient form) against the
/// four rings with unit-group defect: Z/2Z, Z/4Z, Z/8Z, F_2[x]/(x^2).
BadClass classify_bad_local(const RingSpec& local_spec);

/// Unique local decomposition: Zmod via CRT on prime powers, polynomial
/// quotients via factorization of the modulus, products by concatenation.
LocalDecomposition decompose(const RingSpec& spec);

/// Structure of U(R), assembled from the local factors (closed form for
/// Z/p^kZ, order counting on the multiplicative monoid otherwise).
AbelianGroup unit_group(const RingSpec& spec);

/// Number of local factors with residue field F_2 (= index-two maximal
/// ideals).
int n2(const RingSpec& spec);

}  // namespace dav
