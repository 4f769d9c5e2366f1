#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qbool {

/// Fixed-length vector over F2, packed 64 bits per word.
///
/// Bits beyond size() in the last word are always zero, so word-level
/// comparisons and popcounts are exact.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVector() = default;
  explicit BitVector(std::size_t n) : size_(n), words_((n + word_bits - 1) / word_bits, 0) {}

  static BitVector from_bits(std::initializer_list<int> bits);
  static BitVector from_bits(std::span<const int> bits);
  static BitVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return size_; }
  std::size_t num_words() const { return words_.size(); }
  std::span<const word_type> words() const { return words_; }
  std::span<word_type> words() { return words_; }

  bool get(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i) { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
  void reset(std::size_t i) { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }
  void flip(std::size_t i) { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  /// Index of the lowest set bit at or after `from`, or npos.
  std::size_t lowest_set(std::size_t from = 0) const;
  /// Parity of the bitwise AND; the standard F2 inner product.
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  /// XOR restricted to words [first_word, end). Used by elimination when the
  /// lower words of `other` are known to be zero.
  void xor_tail(const BitVector& other, std::size_t first_word);

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  bool operator==(const BitVector& other) const = default;
  /// Lexicographic order reading bit 0 first, with 0 < 1.
  std::strong_ordering operator<=>(const BitVector& other) const;

  std::vector<int> to_vector() const;
  std::string to_string() const;
  std::vector<std::size_t> support() const;

 private:
  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

}  // namespace qbool
