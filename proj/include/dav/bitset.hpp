#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <vector>

namespace dav {

// Dense bitset over element indices of a group/monoid. Sized once, then
// reused; the search kernels work on the raw word arrays.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }
  int word_count() const { return static_cast<int>(w_.size()); }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() { std::memset(w_.data(), 0, w_.size() * sizeof(std::uint64_t)); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  bool operator==(const DynBitset& o) const {
    return nbits_ == o.nbits_ && w_ == o.w_;
  }

  bool is_subset_of(const DynBitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        f(static_cast<int>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::uint64_t* words() { return w_.data(); }
  const std::uint64_t* words() const { return w_.data(); }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

inline bool word_test(const std::uint64_t* w, int i) {
  return (w[i >> 6] >> (i & 63)) & 1u;
}
inline void word_set(std::uint64_t* w, int i) {
  w[i >> 6] |= std::uint64_t{1} << (i & 63);
}
inline int word_popcount(const std::uint64_t* w, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(w[i]);
  return c;
}

}  // namespace dav
