#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "stabcut/errors.hpp"

namespace stabcut {

// Fixed-length bit vector over GF(2), packed into 64-bit words.
// Addition is XOR; the inner product is the parity of the AND.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  static BitVec unit(std::size_t n, std::size_t i) {
    BitVec v(n);
    v.set(i);
    return v;
  }

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i, bool value = true) {
    if (value) {
      words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    } else {
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] ^= other.words_[w];
    }
    return *this;
  }

  BitVec& operator&=(const BitVec& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] &= other.words_[w];
    }
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  bool operator==(const BitVec&) const = default;

  bool none() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool any() const { return !none(); }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }

  // Parity of the overlap with `other`: popcount(a & b) mod 2.
  bool parity_and(const BitVec& other) const {
    check_same_size(other);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1u;
  }

  // Index of the lowest set bit, or -1 when empty.
  std::ptrdiff_t first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return static_cast<std::ptrdiff_t>(w * 64 + std::countr_zero(words_[w]));
      }
    }
    return -1;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        out.push_back(w * 64 + std::countr_zero(word));
        word &= word - 1;
      }
    }
    return out;
  }

 private:
  void check_same_size(const BitVec& other) const {
    if (size_ != other.size_) {
      throw DimensionError("bit vector lengths differ");
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace stabcut
