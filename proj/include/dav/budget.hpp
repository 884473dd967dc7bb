#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dav {

// Limits for the exact branch-and-bound searches. max_depth == 0 picks a
// per-structure default; target_length > 0 lets a search stop as soon as an
// irreducible sequence of that length is known (the result is then a lower
// bound, flagged as inexact).
struct SearchBudget {
  std::uint64_t max_nodes = 400'000'000;
  int max_depth = 0;
  int target_length = 0;
};

class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(const std::string& what, long long lower_bound)
      : std::runtime_error(what), lower_bound_(lower_bound) {}

  // Best Davenport-constant lower bound established before the budget ran out.
  long long lower_bound() const { return lower_bound_; }

 private:
  long long lower_bound_;
};

inline long long env_limit(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long long parsed = std::strtoll(v, &end, 10);
  if (end == v || parsed <= 0) return fallback;
  return parsed;
}

inline long long max_group_order() { return env_limit("DAV_MAX_GROUP", 512); }
inline long long max_monoid_size() { return env_limit("DAV_MAX_MONOID", 1024); }

}  // namespace dav
