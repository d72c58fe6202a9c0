#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gosset {

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline std::size_t popcount(std::span<const std::uint64_t> words) {
  std::size_t n = 0;
  for (auto w : words) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

// Calls fn(index) for every set bit, ascending.
template <class Fn>
void for_each_bit(std::span<const std::uint64_t> words, Fn&& fn) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits) {
      const int tz = std::countr_zero(bits);
      fn(w * 64 + static_cast<std::size_t>(tz));
      bits &= bits - 1;
    }
  }
}

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_(words_for(size), 0) {}
  Bitset(std::size_t size, std::span<const std::uint64_t> words)
      : size_(size), words_(words.begin(), words.end()) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  std::size_t count() const { return popcount(words_); }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::optional<std::size_t> first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return std::nullopt;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each_bit(words_, [&](std::size_t i) { out.push_back(i); });
    return out;
  }

  Bitset& operator&=(std::span<const std::uint64_t> other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other[w];
    return *this;
  }
  Bitset& operator&=(const Bitset& other) { return *this &= other.words(); }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Square 0/1 matrix stored as packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), stride_(words_for(n)), data_(n * stride_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t stride() const { return stride_; }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {data_.data() + i * stride_, stride_};
  }
  bool test(std::size_t i, std::size_t j) const {
    return (data_[i * stride_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) {
    data_[i * stride_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  Bitset row_set(std::size_t i) const { return Bitset(n_, row(i)); }
  std::size_t degree(std::size_t i) const { return popcount(row(i)); }

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace gosset
