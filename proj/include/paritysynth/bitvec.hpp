// Copyright 2026 The paritysynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paritysynth {

/**
 * Fixed-length bit vector over GF(2), packed into 64-bit words.
 *
 * Bit i is stored in word i / 64 at position i % 64. Unused high bits of the
 * last word are always zero so that word-wise comparison and hashing are
 * exact.
 */
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_(word_count(size)) {}

  /// Parses a string of '0'/'1' characters; character i becomes bit i.
  /// Returns std::nullopt on any other character.
  static std::optional<BitVec> from_string(std::string_view bits);

  /// Unit vector e_i of the given length.
  static BitVec unit(std::size_t size, std::size_t i) {
    BitVec v(size);
    v.set(i);
    return v;
  }

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  BitVec& operator|=(const BitVec& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }
  BitVec& operator&=(const BitVec& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  /// Index of the lowest set bit, or size() when none is set.
  std::size_t first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
      }
    }
    return size_;
  }

  /// Parity of the dot product with another vector of the same length.
  bool dot(const BitVec& other) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
  }

  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return out;
  }

  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  /// Lexicographic on the bit string (bit 0 most significant).
  friend bool operator<(const BitVec& a, const BitVec& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff != 0) return (b.words_[w] >> std::countr_zero(diff)) & 1U;
    }
    return false;
  }

 private:
  static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(v.size());
    for (auto w : v.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace paritysynth
