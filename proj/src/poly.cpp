#include "dav/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "dav/numeric.hpp"

namespace dav {

namespace {

void trim(PolyFp& f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

int inv_mod(int a, int p) {
  a %= p;
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw std::invalid_argument("not invertible");
}

void check_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("coefficient modulus must be prime");
}

}  // namespace

PolyFp poly_zero(int p) {
  check_prime(p);
  return {p, {}};
}

PolyFp poly_one(int p) {
  check_prime(p);
  return {p, {1}};
}

PolyFp poly_x(int p) {
  check_prime(p);
  return {p, {0, 1}};
}

PolyFp poly_from_coeffs(int p, std::vector<int> ascending) {
  check_prime(p);
  PolyFp f{p, std::move(ascending)};
  for (int& x : f.c) x = ((x % p) + p) % p;
  trim(f);
  return f;
}

bool is_monic(const PolyFp& f) { return !f.c.empty() && f.c.back() == 1; }

PolyFp poly_add(const PolyFp& a, const PolyFp& b) {
  PolyFp r{a.p, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    int v = (i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0);
    r.c[i] = v % a.p;
  }
  trim(r);
  return r;
}

PolyFp poly_sub(const PolyFp& a, const PolyFp& b) {
  PolyFp r{a.p, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    int v = (i < a.c.size() ? a.c[i] : 0) - (i < b.c.size() ? b.c[i] : 0);
    r.c[i] = ((v % a.p) + a.p) % a.p;
  }
  trim(r);
  return r;
}

PolyFp poly_mul(const PolyFp& a, const PolyFp& b) {
  if (is_zero(a) || is_zero(b)) return poly_zero(a.p);
  PolyFp r{a.p, std::vector<int>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % a.p;
  trim(r);
  return r;
}

std::pair<PolyFp, PolyFp> poly_divmod(const PolyFp& a, const PolyFp& b) {
  if (is_zero(b)) throw std::invalid_argument("polynomial division by zero");
  const int p = a.p;
  PolyFp rem = a;
  PolyFp quot{p, {}};
  if (degree(rem) >= degree(b)) quot.c.resize(degree(rem) - degree(b) + 1, 0);
  const int lead_inv = inv_mod(b.c.back(), p);
  while (!is_zero(rem) && degree(rem) >= degree(b)) {
    const int shift = degree(rem) - degree(b);
    const int coef = rem.c.back() * lead_inv % p;
    quot.c[shift] = coef;
    for (std::size_t i = 0; i < b.c.size(); ++i) {
      int& slot = rem.c[shift + i];
      slot = ((slot - coef * b.c[i]) % p + p) % p;
    }
    trim(rem);
  }
  trim(quot);
  return {std::move(quot), std::move(rem)};
}

PolyFp poly_mod(const PolyFp& a, const PolyFp& b) { return poly_divmod(a, b).second; }

PolyFp poly_make_monic(const PolyFp& f) {
  if (is_zero(f)) return f;
  const int inv = inv_mod(f.c.back(), f.p);
  PolyFp r = f;
  for (int& x : r.c) x = x * inv % f.p;
  return r;
}

PolyFp poly_gcd(PolyFp a, PolyFp b) {
  while (!is_zero(b)) {
    PolyFp r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(a);
}

PolyFp poly_pow(const PolyFp& f, int e) {
  PolyFp r = poly_one(f.p);
  for (int i = 0; i < e; ++i) r = poly_mul(r, f);
  return r;
}

std::string poly_to_string(const PolyFp& f) {
  if (is_zero(f)) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(f); d >= 0; --d) {
    const int c = f.c[d];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (d == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "x";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

PolyFp poly_parse(int p, const std::string& text) {
  check_prime(p);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<int> coeffs;
  auto add_term = [&](long long coef, int deg) {
    if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(deg + 1, 0);
    coeffs[deg] = static_cast<int>((coeffs[deg] + coef) % p);
  };
  std::stringstream ss(s);
  std::string mono;
  while (std::getline(ss, mono, '+')) {
    if (mono.empty()) throw std::invalid_argument("malformed polynomial: empty monomial");
    std::size_t i = 0;
    long long coef = 1;
    if (std::isdigit(static_cast<unsigned char>(mono[0]))) {
      coef = 0;
      while (i < mono.size() && std::isdigit(static_cast<unsigned char>(mono[i])))
        coef = coef * 10 + (mono[i++] - '0');
    }
    int deg = 0;
    if (i < mono.size()) {
      if (mono[i] != 'x')
        throw std::invalid_argument("malformed monomial: " + mono);
      ++i;
      deg = 1;
      if (i < mono.size()) {
        if (mono[i] != '^' || i + 1 >= mono.size())
          throw std::invalid_argument("malformed monomial: " + mono);
        ++i;
        deg = 0;
        while (i < mono.size()) {
          if (!std::isdigit(static_cast<unsigned char>(mono[i])))
            throw std::invalid_argument("malformed monomial: " + mono);
          deg = deg * 10 + (mono[i++] - '0');
        }
      }
    }
    add_term(coef % p, deg);
  }
  return poly_from_coeffs(p, std::move(coeffs));
}

long long poly_code(const PolyFp& f) {
  long long code = 0;
  for (int i = degree(f); i >= 0; --i) code = code * f.p + f.c[i];
  return code;
}

PolyFp poly_from_code(int p, long long code) {
  std::vector<int> c;
  while (code > 0) {
    c.push_back(static_cast<int>(code % p));
    code /= p;
  }
  return poly_from_coeffs(p, std::move(c));
}

bool poly_is_irreducible(const PolyFp& f) {
  const int d = degree(f);
  if (d < 1) return false;
  for (const PolyFp& q : monic_irreducibles(f.p, d / 2))
    if (is_zero(poly_mod(f, q))) return false;
  return true;
}

std::vector<PolyFp> monic_irreducibles(int p, int max_degree) {
  // Sieve by degree: a monic polynomial is irreducible iff no previously
  // found irreducible of degree <= deg/2 divides it. The list stays ordered
  // by (degree, code) since codes are swept ascending.
  std::vector<PolyFp> irr;
  for (int d = 1; d <= max_degree; ++d) {
    for (long long code = ipow(p, d); code < ipow(p, d + 1); ++code) {
      PolyFp f = poly_from_code(p, code);
      if (f.c.back() != 1) continue;
      bool divisible = false;
      for (const PolyFp& q : irr) {
        if (degree(q) > d / 2) break;
        if (is_zero(poly_mod(f, q))) {
          divisible = true;
          break;
        }
      }
      if (!divisible) irr.push_back(std::move(f));
    }
  }
  return irr;
}

std::vector<std::pair<PolyFp, int>> factor_poly(const PolyFp& f) {
  if (degree(f) < 1) throw std::invalid_argument("factor_poly: degree must be >= 1");
  PolyFp rest = poly_make_monic(f);
  std::vector<std::pair<PolyFp, int>> out;
  for (const PolyFp& q : monic_irreducibles(f.p, degree(f))) {
    if (degree(rest) < 1) break;
    int mult = 0;
    while (is_zero(poly_mod(rest, q))) {
      rest = poly_divmod(rest, q).first;
      ++mult;
    }
    if (mult > 0) out.emplace_back(q, mult);
  }
  if (degree(rest) >= 1) out.emplace_back(rest, 1);  // rest is irreducible
  return out;
}

int poly_valuation(const PolyFp& f, const PolyFp& q) {
  PolyFp rest = f;
  int v = 0;
  while (!is_zero(rest) && is_zero(poly_mod(rest, q))) {
    rest = poly_divmod(rest, q).first;
    ++v;
  }
  return v;
}

}  // namespace dav
