#include "qbool/bits.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qbool {

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
  return from_bits(std::span<const int>(bits.begin(), bits.size()));
}

BitVector BitVector::from_bits(std::span<const int> bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("bit value must be 0 or 1");
    if (bits[i]) v.set(i);
  }
  return v;
}

BitVector BitVector::unit(std::size_t n, std::size_t i) {
  BitVector v(n);
  v.set(i);
  return v;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (word_type w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVector::lowest_set(std::size_t from) const {
  if (from >= size_) return npos;
  std::size_t wi = from / word_bits;
  word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
  while (true) {
    if (w) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size()) return npos;
    w = words_[wi];
  }
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw std::invalid_argument("BitVector::dot: size mismatch");
  word_type acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector xor: size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector and: size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector or: size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

void BitVector::xor_tail(const BitVector& other, std::size_t first_word) {
  const word_type* src = other.words_.data();
  word_type* dst = words_.data();
  const std::size_t n = words_.size();
  for (std::size_t i = first_word; i < n; ++i) dst[i] ^= src[i];
}

std::strong_ordering BitVector::operator<=>(const BitVector& other) const {
  if (size_ != other.size_) return size_ <=> other.size_;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    word_type diff = words_[i] ^ other.words_[i];
    if (diff) {
      word_type low = diff & (~diff + 1);
      return (words_[i] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::vector<int> BitVector::to_vector() const {
  std::vector<int> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = get(i) ? 1 : 0;
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = lowest_set(); i != npos; i = lowest_set(i + 1)) out.push_back(i);
  return out;
}

}  // namespace qbool
