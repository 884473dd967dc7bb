#include "dav/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dav/budget.hpp"

namespace dav {

RingSpec RingSpec::zmod(long long n) {
  if (n < 2) throw std::invalid_argument("zmod: n must be >= 2");
  RingSpec s;
  s.kind_ = RingKind::zmod;
  s.n_ = n;
  return s;
}

RingSpec RingSpec::poly_quotient(int p, PolyFp modulus) {
  if (degree(modulus) < 1)
    throw std::invalid_argument("poly_quotient: modulus degree must be >= 1");
  RingSpec s;
  s.kind_ = RingKind::poly_quotient;
  s.p_ = p;
  s.modulus_ = poly_make_monic(std::move(modulus));
  return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  std::vector<RingSpec> flat;
  for (auto& f : factors) {
    if (f.kind_ == RingKind::product)
      for (auto& g : f.factors_) flat.push_back(std::move(g));
    else
      flat.push_back(std::move(f));
  }
  if (flat.empty()) throw std::invalid_argument("product: needs at least one factor");
  if (flat.size() == 1) return flat.front();
  RingSpec s;
  s.kind_ = RingKind::product;
  s.factors_ = std::move(flat);
  return s;
}

long long RingSpec::size() const {
  switch (kind_) {
    case RingKind::zmod:
      return n_;
    case RingKind::poly_quotient:
      return ipow(p_, degree(modulus_));
    case RingKind::product: {
      long long s = 1;
      for (const auto& f : factors_) s *= f.size();
      return s;
    }
  }
  return 0;
}

long long RingSpec::zmod_n() const {
  if (kind_ != RingKind::zmod) throw std::logic_error("not a zmod spec");
  return n_;
}

int RingSpec::poly_p() const {
  if (kind_ != RingKind::poly_quotient) throw std::logic_error("not a poly spec");
  return p_;
}

const PolyFp& RingSpec::poly_modulus() const {
  if (kind_ != RingKind::poly_quotient) throw std::logic_error("not a poly spec");
  return modulus_;
}

const std::vector<RingSpec>& RingSpec::factors() const {
  if (kind_ != RingKind::product) throw std::logic_error("not a product spec");
  return factors_;
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case RingKind::zmod:
      return "zmod:" + std::to_string(n_);
    case RingKind::poly_quotient:
      return "poly:" + std::to_string(p_) + ":" + poly_to_string(modulus_);
    case RingKind::product: {
      std::string s = "product:[";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ",";
        s += factors_[i].to_string();
      }
      return s + "]";
    }
  }
  return "";
}

RingSpec RingSpec::parse(const std::string& text) {
  if (text.rfind("zmod:", 0) == 0) return zmod(std::stoll(text.substr(5)));
  if (text.rfind("poly:", 0) == 0) {
    const auto c = text.find(':', 5);
    if (c == std::string::npos)
      throw std::invalid_argument("expected poly:<p>:<polynomial>");
    const int p = std::stoi(text.substr(5, c - 5));
    return poly_quotient(p, poly_parse(p, text.substr(c + 1)));
  }
  if (text.rfind("product:[", 0) == 0) {
    if (text.back() != ']') throw std::invalid_argument("unterminated product:[...]");
    const std::string inner = text.substr(9, text.size() - 10);
    std::vector<RingSpec> parts;
    int depth = 0;
    std::string cur;
    for (char ch : inner) {
      if (ch == '[') ++depth;
      if (ch == ']') --depth;
      if (ch == ',' && depth == 0) {
        parts.push_back(parse(cur));
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) parts.push_back(parse(cur));
    return product(std::move(parts));
  }
  throw std::invalid_argument("unrecognized ring spec: " + text);
}

RingElement ring_zero(const RingSpec& spec) { return ring_element(spec, 0); }

RingElement ring_one(const RingSpec& spec) {
  switch (spec.kind()) {
    case RingKind::zmod:
      return RingElement{1ll};
    case RingKind::poly_quotient: {
      std::vector<int> c(degree(spec.poly_modulus()), 0);
      c[0] = 1;
      return RingElement{std::move(c)};
    }
    case RingKind::product: {
      std::vector<RingElement> comps;
      for (const auto& f : spec.factors()) comps.push_back(ring_one(f));
      return RingElement{std::move(comps)};
    }
  }
  throw std::logic_error("bad spec");
}

namespace {

const long long& zres(const RingElement& e) { return std::get<long long>(e.rep); }
const std::vector<int>& pcoef(const RingElement& e) {
  return std::get<std::vector<int>>(e.rep);
}
const std::vector<RingElement>& comps(const RingElement& e) {
  return std::get<std::vector<RingElement>>(e.rep);
}

void check_shape(const RingSpec& spec, const RingElement& e) {
  switch (spec.kind()) {
    case RingKind::zmod:
      if (!std::holds_alternative<long long>(e.rep) || zres(e) < 0 ||
          zres(e) >= spec.zmod_n())
        throw std::invalid_argument("element does not match zmod spec");
      return;
    case RingKind::poly_quotient:
      if (!std::holds_alternative<std::vector<int>>(e.rep) ||
          pcoef(e).size() != static_cast<std::size_t>(degree(spec.poly_modulus())))
        throw std::invalid_argument("element does not match poly spec");
      return;
    case RingKind::product:
      if (!std::holds_alternative<std::vector<RingElement>>(e.rep) ||
          comps(e).size() != spec.factors().size())
        throw std::invalid_argument("element does not match product spec");
      for (std::size_t i = 0; i < comps(e).size(); ++i)
        check_shape(spec.factors()[i], comps(e)[i]);
      return;
  }
}

RingElement poly_elem(const RingSpec& spec, const PolyFp& f) {
  std::vector<int> c(degree(spec.poly_modulus()), 0);
  for (std::size_t i = 0; i < f.c.size(); ++i) c[i] = f.c[i];
  return RingElement{std::move(c)};
}

PolyFp elem_poly(const RingSpec& spec, const RingElement& e) {
  return poly_from_coeffs(spec.poly_p(), pcoef(e));
}

}  // namespace

RingElement ring_add(const RingSpec& spec, const RingElement& a, const RingElement& b) {
  check_shape(spec, a);
  check_shape(spec, b);
  switch (spec.kind()) {
    case RingKind::zmod:
      return RingElement{(zres(a) + zres(b)) % spec.zmod_n()};
    case RingKind::poly_quotient:
      return poly_elem(spec, poly_add(elem_poly(spec, a), elem_poly(spec, b)));
    case RingKind::product: {
      std::vector<RingElement> out;
      for (std::size_t i = 0; i < spec.factors().size(); ++i)
        out.push_back(ring_add(spec.factors()[i], comps(a)[i], comps(b)[i]));
      return RingElement{std::move(out)};
    }
  }
  throw std::logic_error("bad spec");
}

RingElement ring_mul(const RingSpec& spec, const RingElement& a, const RingElement& b) {
  check_shape(spec, a);
  check_shape(spec, b);
  switch (spec.kind()) {
    case RingKind::zmod:
      return RingElement{zres(a) * zres(b) % spec.zmod_n()};
    case RingKind::poly_quotient:
      return poly_elem(spec, poly_mod(poly_mul(elem_poly(spec, a), elem_poly(spec, b)),
                                      spec.poly_modulus()));
    case RingKind::product: {
      std::vector<RingElement> out;
      for (std::size_t i = 0; i < spec.factors().size(); ++i)
        out.push_back(ring_mul(spec.factors()[i], comps(a)[i], comps(b)[i]));
      return RingElement{std::move(out)};
    }
  }
  throw std::logic_error("bad spec");
}

long long ring_index(const RingSpec& spec, const RingElement& e) {
  check_shape(spec, e);
  switch (spec.kind()) {
    case RingKind::zmod:
      return zres(e);
    case RingKind::poly_quotient: {
      long long code = 0;
      const auto& c = pcoef(e);
      for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        code = code * spec.poly_p() + c[i];
      return code;
    }
    case RingKind::product: {
      long long idx = 0;
      for (std::size_t i = 0; i < spec.factors().size(); ++i)
        idx = idx * spec.factors()[i].size() + ring_index(spec.factors()[i], comps(e)[i]);
      return idx;
    }
  }
  return 0;
}

RingElement ring_element(const RingSpec& spec, long long index) {
  if (index < 0 || index >= spec.size()) throw std::out_of_range("ring index");
  switch (spec.kind()) {
    case RingKind::zmod:
      return RingElement{index};
    case RingKind::poly_quotient: {
      std::vector<int> c(degree(spec.poly_modulus()), 0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = static_cast<int>(index % spec.poly_p());
        index /= spec.poly_p();
      }
      return RingElement{std::move(c)};
    }
    case RingKind::product: {
      const auto& fs = spec.factors();
      std::vector<RingElement> out(fs.size());
      for (int i = static_cast<int>(fs.size()) - 1; i >= 0; --i) {
        out[i] = ring_element(fs[i], index % fs[i].size());
        index /= fs[i].size();
      }
      return RingElement{std::move(out)};
    }
  }
  throw std::logic_error("bad spec");
}

std::string ring_element_to_string(const RingSpec& spec, const RingElement& e) {
  switch (spec.kind()) {
    case RingKind::zmod:
      return std::to_string(zres(e));
    case RingKind::poly_quotient:
      return poly_to_string(poly_from_coeffs(spec.poly_p(), pcoef(e)));
    case RingKind::product: {
      std::string s = "(";
      for (std::size_t i = 0; i < comps(e).size(); ++i) {
        if (i) s += ",";
        s += ring_element_to_string(spec.factors()[i], comps(e)[i]);
      }
      return s + ")";
    }
  }
  return "";
}

CayleyMonoid multiplicative_monoid(const RingSpec& spec) {
  const long long m = spec.size();
  if (m > max_monoid_size())
    throw std::invalid_argument("ring size " + std::to_string(m) +
                                " exceeds DAV_MAX_MONOID for table export");
  switch (spec.kind()) {
    case RingKind::zmod: {
      const int mm = static_cast<int>(m);
      std::vector<std::uint16_t> table(static_cast<std::size_t>(mm) * mm);
      for (int i = 0; i < mm; ++i)
        for (int j = 0; j < mm; ++j)
          table[static_cast<std::size_t>(i) * mm + j] =
              static_cast<std::uint16_t>(static_cast<long long>(i) * j % mm);
      return CayleyMonoid(mm, 1, 0, std::move(table), spec.to_string());
    }
    case RingKind::poly_quotient: {
      const int mm = static_cast<int>(m);
      const int p = spec.poly_p();
      const PolyFp& f = spec.poly_modulus();
      std::vector<std::uint16_t> table(static_cast<std::size_t>(mm) * mm);
      std::vector<PolyFp> elems(mm);
      for (int i = 0; i < mm; ++i) elems[i] = poly_from_code(p, i);
      for (int i = 0; i < mm; ++i)
        for (int j = i; j < mm; ++j) {
          const auto prod =
              static_cast<std::uint16_t>(poly_code(poly_mod(poly_mul(elems[i], elems[j]), f)));
          table[static_cast<std::size_t>(i) * mm + j] = prod;
          table[static_cast<std::size_t>(j) * mm + i] = prod;
        }
      return CayleyMonoid(mm, 1, 0, std::move(table), spec.to_string());
    }
    case RingKind::product: {
      CayleyMonoid acc = multiplicative_monoid(spec.factors().front());
      for (std::size_t i = 1; i < spec.factors().size(); ++i)
        acc = direct_product(acc, multiplicative_monoid(spec.factors()[i]));
      acc.set_label(spec.to_string());
      return acc;
    }
  }
  throw std::logic_error("bad spec");
}

std::string bad_class_name(BadClass c) {
  switch (c) {
    case BadClass::none:
      return "none";
    case BadClass::r1:
      return "R1";
    case BadClass::r2:
      return "R2";
    case BadClass::r3:
      return "R3";
    case BadClass::r4:
      return "R4";
  }
  return "?";
}

BadClass classify_bad_local(const RingSpec& local_spec) {
  long long size = local_spec.size();
  long long characteristic = 0;
  bool has_nilpotent = false;
  if (local_spec.kind() == RingKind::zmod) {
    const auto fact = factor_integer(local_spec.zmod_n());
    if (fact.size() != 1)
      throw std::invalid_argument("classify_bad_local: Z/nZ local requires prime power n");
    characteristic = local_spec.zmod_n();
    has_nilpotent = fact.front().second > 1;
  } else if (local_spec.kind() == RingKind::poly_quotient) {
    const auto fact = factor_poly(local_spec.poly_modulus());
    if (fact.size() != 1)
      throw std::invalid_argument(
          "classify_bad_local: polynomial quotient requires an irreducible-power modulus");
    characteristic = local_spec.poly_p();
    has_nilpotent = fact.front().second > 1;
  } else {
    throw std::invalid_argument("classify_bad_local: products are not local");
  }
  if (size == 2) return BadClass::r1;
  if (size == 4 && characteristic == 4) return BadClass::r2;
  if (size == 4 && characteristic == 2 && has_nilpotent) return BadClass::r4;
  if (size == 8 && characteristic == 8) return BadClass::r3;
  return BadClass::none;
}

namespace {

LocalRingDescriptor describe_local(RingSpec spec, long long residue_field_size) {
  LocalRingDescriptor d;
  d.size = spec.size();
  d.residue_field_size = residue_field_size;
  d.bad_class = classify_bad_local(spec);
  d.spec = std::move(spec);
  return d;
}

}  // namespace

LocalDecomposition decompose(const RingSpec& spec) {
  LocalDecomposition out;
  switch (spec.kind()) {
    case RingKind::zmod:
      for (auto [p, e] : factor_integer(spec.zmod_n()))
        out.factors.push_back(describe_local(RingSpec::zmod(ipow(p, e)), p));
      break;
    case RingKind::poly_quotient:
      for (const auto& [q, e] : factor_poly(spec.poly_modulus()))
        out.factors.push_back(
            describe_local(RingSpec::poly_quotient(spec.poly_p(), poly_pow(q, e)),
                           ipow(spec.poly_p(), degree(q))));
      break;
    case RingKind::product:
      for (const auto& f : spec.factors()) {
        LocalDecomposition sub = decompose(f);
        for (auto& d : sub.factors) out.factors.push_back(std::move(d));
      }
      break;
  }
  for (const auto& d : out.factors) {
    switch (d.bad_class) {
      case BadClass::r1:
        ++out.k1;
        break;
      case BadClass::r2:
        ++out.k2;
        break;
      case BadClass::r3:
        ++out.k3;
        break;
      case BadClass::r4:
        ++out.k4;
        break;
      case BadClass::none:
        out.residual.push_back(d);
        break;
    }
  }
  return out;
}

AbelianGroup unit_group(const RingSpec& spec) {
  std::vector<long long> cyclic_orders;
  for (const auto& d : decompose(spec).factors) {
    if (d.spec.kind() == RingKind::zmod) {
      // U(Z/p^kZ): cyclic of order p^(k-1)(p-1) for odd p;
      // trivial, C2, C2 x C_{2^(k-2)} for p = 2.
      const auto [p, k] = factor_integer(d.spec.zmod_n()).front();
      if (p == 2) {
        if (k == 2) cyclic_orders.push_back(2);
        if (k >= 3) {
          cyclic_orders.push_back(2);
          cyclic_orders.push_back(ipow(2, k - 2));
        }
      } else {
        cyclic_orders.push_back(ipow(p, k - 1) * (p - 1));
      }
    } else {
      const auto view = units(multiplicative_monoid(d.spec));
      for (long long f : view.structure.invariant_factors()) cyclic_orders.push_back(f);
    }
  }
  return normalize(cyclic_orders);
}

int n2(const RingSpec& spec) {
  int count = 0;
  for (const auto& d : decompose(spec).factors)
    if (d.residue_field_size == 2) ++count;
  return count;
}

}  // namespace dav
