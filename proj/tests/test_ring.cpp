#include "dav/ring.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace dav;

TEST_CASE("poly arithmetic and parsing") {
  const PolyFp f = poly_parse(2, "x^2+x+1");
  CHECK(poly_to_string(f) == "x^2+x+1");
  CHECK(degree(f) == 2);
  CHECK(poly_to_string(poly_parse(2, "x")) == "x");
  CHECK(poly_to_string(poly_parse(2, "1")) == "1");
  CHECK(poly_to_string(poly_parse(3, "2x^2+1")) == "2x^2+1");
  CHECK_THROWS_AS(poly_parse(2, "y+1"), std::invalid_argument);
  const PolyFp g = poly_mul(poly_parse(2, "x+1"), poly_parse(2, "x+1"));
  CHECK(poly_to_string(g) == "x^2+1");  // (x+1)^2 over F_2
  const auto [q, r] = poly_divmod(poly_parse(2, "x^3+x"), poly_parse(2, "x+1"));
  CHECK(is_zero(r));
  CHECK(poly_to_string(q) == "x^2+x");
  CHECK(poly_to_string(poly_gcd(poly_parse(2, "x^2+x"), poly_parse(2, "x^2+1"))) ==
        "x+1");
}

TEST_CASE("factor_poly") {
  auto f1 = factor_poly(poly_parse(2, "x^2+x"));
  REQUIRE(f1.size() == 2);
  CHECK(poly_to_string(f1[0].first) == "x");
  CHECK(f1[0].second == 1);
  CHECK(poly_to_string(f1[1].first) == "x+1");
  CHECK(f1[1].second == 1);

  auto f2 = factor_poly(poly_parse(2, "x^2+x+1"));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].second == 1);

  auto f3 = factor_poly(poly_parse(2, "x^4+x^2"));  // x^2 (x+1)^2
  REQUIRE(f3.size() == 2);
  CHECK(poly_to_string(f3[0].first) == "x");
  CHECK(f3[0].second == 2);
  CHECK(poly_to_string(f3[1].first) == "x+1");
  CHECK(f3[1].second == 2);
  PolyFp prod = poly_one(2);
  for (const auto& [q, e] : f3) prod = poly_mul(prod, poly_pow(q, e));
  CHECK(prod == poly_parse(2, "x^4+x^2"));
}

TEST_CASE("irreducibility and enumeration") {
  CHECK(poly_is_irreducible(poly_parse(2, "x^2+x+1")));
  CHECK_FALSE(poly_is_irreducible(poly_parse(2, "x^2+1")));
  CHECK(monic_irreducibles(2, 1).size() == 2);  // x, x+1
  CHECK(monic_irreducibles(2, 2).size() == 3);
  CHECK(monic_irreducibles(2, 3).size() == 5);
}

TEST_CASE("ring spec parse and canonical emission") {
  CHECK(RingSpec::parse("zmod:24").to_string() == "zmod:24");
  CHECK(RingSpec::parse("poly:2:x+x^2").to_string() == "poly:2:x^2+x");
  CHECK(RingSpec::parse("product:[zmod:4,zmod:3]").to_string() ==
        "product:[zmod:4,zmod:3]");
  CHECK(RingSpec::parse("product:[zmod:2,product:[zmod:3,zmod:5]]").to_string() ==
        "product:[zmod:2,zmod:3,zmod:5]");
  CHECK_THROWS_AS(RingSpec::parse("zmod:1"), std::invalid_argument);
  CHECK_THROWS_AS(RingSpec::parse("ideal:3"), std::invalid_argument);
  CHECK(RingSpec::parse("product:[zmod:2,zmod:3]").size() == 6);
}

TEST_CASE("element arithmetic") {
  const auto z4 = RingSpec::zmod(4);
  CHECK(ring_index(z4, ring_mul(z4, ring_element(z4, 2), ring_element(z4, 2))) == 0);
  const auto fx2 = RingSpec::poly_quotient(2, poly_parse(2, "x^2"));
  const auto x = ring_element(fx2, 2);  // coefficient code of "x"
  CHECK(ring_index(fx2, ring_mul(fx2, x, x)) == 0);  // x^2 = 0
  const auto p = RingSpec::parse("product:[zmod:2,zmod:3]");
  const auto e = ring_element(p, ring_index(p, RingElement{std::vector<RingElement>{
                                                 RingElement{1ll}, RingElement{2ll}}}));
  const auto sq = ring_mul(p, e, e);
  CHECK(ring_element_to_string(p, sq) == "(1,1)");
  CHECK_THROWS_AS(ring_mul(z4, x, x), std::invalid_argument);  // shape mismatch
}

TEST_CASE("ring axioms hold on sampled elements") {
  for (const auto& spec :
       {RingSpec::zmod(12), RingSpec::poly_quotient(2, poly_parse(2, "x^3+x")),
        RingSpec::parse("product:[zmod:4,poly:2:x^2]")}) {
    const long long m = spec.size();
    for (long long a = 0; a < m; ++a)
      for (long long b = 0; b < m; b += 3)
        for (long long c = 1; c < m; c += 5) {
          const auto ea = ring_element(spec, a), eb = ring_element(spec, b),
                     ec = ring_element(spec, c);
          CHECK(ring_mul(spec, ea, ring_mul(spec, eb, ec)) ==
                ring_mul(spec, ring_mul(spec, ea, eb), ec));
          CHECK(ring_mul(spec, ea, ring_add(spec, eb, ec)) ==
                ring_add(spec, ring_mul(spec, ea, eb), ring_mul(spec, ea, ec)));
        }
  }
}

TEST_CASE("multiplicative monoid export") {
  const auto m2 = multiplicative_monoid(RingSpec::zmod(2));
  CHECK(davenport(m2) == 2);
  const auto m8 = multiplicative_monoid(RingSpec::zmod(8));
  CHECK(davenport(m8) == 4);
  const auto mx2 = multiplicative_monoid(RingSpec::poly_quotient(2, poly_parse(2, "x^2")));
  CHECK(davenport(mx2) == 3);
  CHECK(mx2.zero() == 0);
  CHECK(mx2.identity() == 1);
}

TEST_CASE("factor_integer") {
  using pairs = std::vector<std::pair<long long, int>>;
  CHECK(factor_integer(24) == pairs{{2, 3}, {3, 1}});
  CHECK(factor_integer(2) == pairs{{2, 1}});
  CHECK(factor_integer(360) == pairs{{2, 3}, {3, 2}, {5, 1}});
  CHECK_THROWS_AS(factor_integer(1), std::invalid_argument);
}

TEST_CASE("classify_bad_local") {
  CHECK(classify_bad_local(RingSpec::zmod(2)) == BadClass::r1);
  CHECK(classify_bad_local(RingSpec::zmod(4)) == BadClass::r2);
  CHECK(classify_bad_local(RingSpec::zmod(8)) == BadClass::r3);
  CHECK(classify_bad_local(RingSpec::zmod(16)) == BadClass::none);
  CHECK(classify_bad_local(RingSpec::zmod(3)) == BadClass::none);
  CHECK(classify_bad_local(RingSpec::poly_quotient(2, poly_parse(2, "x^2+x+1"))) ==
        BadClass::none);  // F_4
  CHECK(classify_bad_local(RingSpec::poly_quotient(2, poly_parse(2, "x^2"))) ==
        BadClass::r4);
  CHECK(classify_bad_local(RingSpec::poly_quotient(2, poly_parse(2, "x^3"))) ==
        BadClass::none);
  CHECK(classify_bad_local(RingSpec::poly_quotient(2, poly_parse(2, "x"))) ==
        BadClass::r1);  // F_2
  CHECK_THROWS_AS(classify_bad_local(RingSpec::zmod(6)), std::invalid_argument);
  CHECK_THROWS_AS(classify_bad_local(RingSpec::poly_quotient(2, poly_parse(2, "x^2+x"))),
                  std::invalid_argument);
}

TEST_CASE("F_2[y]/(y^2) in disguise is classified R4") {
  const auto disguised = RingSpec::poly_quotient(2, poly_parse(2, "x^2+1"));  // (x+1)^2
  CHECK(classify_bad_local(disguised) == BadClass::r4);
  CHECK(davtest::monoids_isomorphic(
      multiplicative_monoid(disguised),
      multiplicative_monoid(RingSpec::poly_quotient(2, poly_parse(2, "x^2")))));
}

TEST_CASE("decompose") {
  const auto d24 = decompose(RingSpec::zmod(24));
  CHECK(d24.k1 == 0);
  CHECK(d24.k2 == 0);
  CHECK(d24.k3 == 1);
  CHECK(d24.k4 == 0);
  REQUIRE(d24.residual.size() == 1);
  CHECK(d24.residual[0].spec.to_string() == "zmod:3");

  // x^2 (x+1) (x^2+x+1)
  const auto f = poly_mul(poly_mul(poly_parse(2, "x^2"), poly_parse(2, "x+1")),
                          poly_parse(2, "x^2+x+1"));
  const auto dp = decompose(RingSpec::poly_quotient(2, f));
  CHECK(dp.k1 == 1);
  CHECK(dp.k4 == 1);
  CHECK(dp.k2 == 0);
  CHECK(dp.k3 == 0);
  REQUIRE(dp.residual.size() == 1);
  CHECK(dp.residual[0].residue_field_size == 4);

  const auto d7 = decompose(RingSpec::zmod(7));
  CHECK(d7.factors.size() == 1);
  CHECK(d7.k1 + d7.k2 + d7.k3 + d7.k4 == 0);
}

namespace {

long long local_image(const RingSpec& spec, const RingElement& e,
                      const LocalRingDescriptor& local) {
  if (spec.kind() == RingKind::zmod)
    return std::get<long long>(e.rep) % local.spec.zmod_n();
  const PolyFp ep = poly_from_coeffs(spec.poly_p(), std::get<std::vector<int>>(e.rep));
  return poly_code(poly_mod(ep, local.spec.poly_modulus()));
}

// Natural map of a ring element to the product of the ring's local factors,
// as an element index; bijectivity plus multiplicativity verify decompose().
long long project_index(const RingSpec& spec, const RingElement& e,
                        const std::vector<LocalRingDescriptor>& locals,
                        std::size_t& cursor) {
  if (spec.kind() == RingKind::product) {
    long long idx = 0;
    const auto& comps = std::get<std::vector<RingElement>>(e.rep);
    for (std::size_t i = 0; i < spec.factors().size(); ++i) {
      const std::size_t before = cursor;
      const long long sub = project_index(spec.factors()[i], comps[i], locals, cursor);
      long long width = 1;
      for (std::size_t j = before; j < cursor; ++j) width *= locals[j].size;
      idx = idx * width + sub;
    }
    return idx;
  }
  long long idx = 0;
  const auto own = decompose(spec);
  for (const auto& local : own.factors) {
    idx = idx * local.size + local_image(spec, e, local);
    ++cursor;
  }
  return idx;
}

}  // namespace

TEST_CASE("decompose gives an isomorphic multiplicative monoid (size <= 64)") {
  for (const auto& text :
       {"zmod:24", "zmod:36", "zmod:60", "poly:2:x^4+x^2", "poly:2:x^5+x^4",
        "product:[zmod:4,poly:2:x^2]", "product:[zmod:6,zmod:10]"}) {
    const RingSpec spec = RingSpec::parse(text);
    REQUIRE(spec.size() <= 64);
    const auto locals = decompose(spec).factors;
    std::vector<RingSpec> local_specs;
    for (const auto& l : locals) local_specs.push_back(l.spec);
    const RingSpec prod = RingSpec::product(local_specs);
    REQUIRE(prod.size() == spec.size());
    std::vector<long long> image(spec.size(), -1);
    std::vector<char> hit(spec.size(), 0);
    for (long long i = 0; i < spec.size(); ++i) {
      std::size_t cursor = 0;
      image[i] = project_index(spec, ring_element(spec, i), locals, cursor);
      REQUIRE(image[i] >= 0);
      REQUIRE(image[i] < spec.size());
      CHECK_FALSE(hit[image[i]]);
      hit[image[i]] = 1;
    }
    const auto ms = multiplicative_monoid(spec);
    const auto mp = multiplicative_monoid(prod);
    for (int a = 0; a < ms.size(); ++a)
      for (int b = a; b < ms.size(); ++b)
        CHECK(image[ms.mul(a, b)] ==
              mp.mul(static_cast<int>(image[a]), static_cast<int>(image[b])));
  }
}

TEST_CASE("unit_group") {
  CHECK(unit_group(RingSpec::zmod(8)).invariant_factors() ==
        std::vector<long long>{2, 2});
  CHECK(unit_group(RingSpec::zmod(2)).is_trivial());
  const auto g = unit_group(RingSpec::poly_quotient(
      2, poly_mul(poly_parse(2, "x^2+x+1"), poly_parse(2, "x^2+x+1"))));
  CHECK(g.invariant_factors() == std::vector<long long>{2, 6});
  CHECK(g.order() == 12);
}

TEST_CASE("unit_group order counts invertible elements") {
  for (const auto& text : {"zmod:12", "zmod:45", "poly:2:x^3+x", "poly:3:x^2",
                           "product:[zmod:4,zmod:9]"}) {
    const RingSpec spec = RingSpec::parse(text);
    const auto mono = multiplicative_monoid(spec);
    CHECK(unit_group(spec).order() == units(mono).unit_elements.count());
    CHECK(unit_group(spec) == units(mono).structure);
  }
  CHECK(unit_group(RingSpec::zmod(12)).order() == 4);
  CHECK(unit_group(RingSpec::zmod(45)).order() == 24);
}

TEST_CASE("n2 counts index-two maximal ideals") {
  CHECK(n2(RingSpec::zmod(24)) == 1);
  CHECK(n2(RingSpec::zmod(15)) == 0);
  CHECK(n2(RingSpec::poly_quotient(2, poly_parse(2, "x^2+x"))) == 2);  // x (x+1)
  for (const auto& text :
       {"zmod:24", "zmod:40", "poly:2:x^4+x^2", "product:[zmod:2,zmod:8]"}) {
    const RingSpec spec = RingSpec::parse(text);
    const auto d = decompose(spec);
    CHECK(d.k1 + d.k2 + d.k3 + d.k4 <= n2(spec));
  }
}

TEST_CASE("enumeration order is deterministic and covers the ring") {
  const RingSpec spec = RingSpec::parse("product:[zmod:3,poly:2:x^2]");
  std::vector<std::string> seen;
  for (long long i = 0; i < spec.size(); ++i) {
    const auto e = ring_element(spec, i);
    CHECK(ring_index(spec, e) == i);
    seen.push_back(ring_element_to_string(spec, e));
  }
  CHECK(seen.front() == "(0,0)");
  CHECK(seen.size() == 12);
}
