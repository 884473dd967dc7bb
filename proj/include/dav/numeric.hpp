#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace dav {

// Trial-division factorization, smallest prime first.
inline std::vector<std::pair<long long, int>> factor_integer(long long n) {
  if (n < 2) throw std::invalid_argument("factor_integer: n must be >= 2");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline long long ipow(long long base, int exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace dav
