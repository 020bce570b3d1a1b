#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace corrhier {

// Packed bit vector; bit i lives in word i/64 at position i%64.
// All binary operations require equal sizes.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t bits) : bits_(bits), w_((bits + 63) >> 6, 0) {}

  size_t size() const { return bits_; }

  bool test(size_t i) const {
    assert(i < bits_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(size_t i) {
    assert(i < bits_);
    w_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(size_t i) {
    assert(i < bits_);
    w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  void assign(size_t i, bool v) {
    if (v) {
      set(i);
    } else {
      reset(i);
    }
  }
  void flip(size_t i) {
    assert(i < bits_);
    w_[i >> 6] ^= uint64_t{1} << (i & 63);
  }

  bool any() const {
    for (uint64_t w : w_) {
      if (w) return true;
    }
    return false;
  }

  size_t popcount() const {
    size_t c = 0;
    for (uint64_t w : w_) c += static_cast<size_t>(std::popcount(w));
    return c;
  }

  BitVec& operator^=(const BitVec& o) {
    assert(bits_ == o.bits_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }
  BitVec& operator|=(const BitVec& o) {
    assert(bits_ == o.bits_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend BitVec operator|(BitVec a, const BitVec& b) {
    a |= b;
    return a;
  }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  static size_t and_popcount(const BitVec& a, const BitVec& b) {
    assert(a.bits_ == b.bits_);
    size_t c = 0;
    for (size_t i = 0; i < a.w_.size(); ++i)
      c += static_cast<size_t>(std::popcount(a.w_[i] & b.w_[i]));
    return c;
  }
  static size_t or_popcount(const BitVec& a, const BitVec& b) {
    assert(a.bits_ == b.bits_);
    size_t c = 0;
    for (size_t i = 0; i < a.w_.size(); ++i)
      c += static_cast<size_t>(std::popcount(a.w_[i] | b.w_[i]));
    return c;
  }
  // True when every set bit of a is also set in b.
  static bool is_subset(const BitVec& a, const BitVec& b) {
    assert(a.bits_ == b.bits_);
    for (size_t i = 0; i < a.w_.size(); ++i) {
      if (a.w_[i] & ~b.w_[i]) return false;
    }
    return true;
  }

  // Three-way order by the lowest differing bit index; the side holding a 0
  // there sorts first. Used as the deterministic tie-break everywhere.
  static int compare(const BitVec& a, const BitVec& b) {
    assert(a.bits_ == b.bits_);
    for (size_t i = 0; i < a.w_.size(); ++i) {
      uint64_t d = a.w_[i] ^ b.w_[i];
      if (d) {
        int bit = std::countr_zero(d);
        return ((a.w_[i] >> bit) & 1) ? 1 : -1;
      }
    }
    return 0;
  }

  // Index of the lowest set bit, or size() when empty.
  size_t lowest_set_bit() const {
    for (size_t i = 0; i < w_.size(); ++i) {
      if (w_[i]) return (i << 6) + static_cast<size_t>(std::countr_zero(w_[i]));
    }
    return bits_;
  }

  const std::vector<uint64_t>& words() const { return w_; }

  // "01" rendering, bit 0 first.
  std::string to_01() const {
    std::string s(bits_, '0');
    for (size_t i = 0; i < bits_; ++i) {
      if (test(i)) s[i] = '1';
    }
    return s;
  }

 private:
  size_t bits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace corrhier
