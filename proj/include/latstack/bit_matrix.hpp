#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace latstack {

/// Square boolean matrix stored row-major, 64 columns per word.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c) {
    bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }

  std::span<const std::uint64_t> row(std::size_t r) const {
    return {bits_.data() + r * words_, words_};
  }
  std::span<std::uint64_t> row(std::size_t r) { return {bits_.data() + r * words_, words_}; }

  std::size_t row_count(std::size_t r) const {
    std::size_t c = 0;
    for (auto w : row(r)) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  BitMatrix transposed() const {
    BitMatrix t(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      auto words = row(r);
      for (std::size_t w = 0; w < words_; ++w) {
        for (std::uint64_t bits = words[w]; bits != 0; bits &= bits - 1) {
          t.set(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)), r);
        }
      }
    }
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Calls fn(index) for every set bit of a row, ascending.
template <class Fn>
void for_each_bit(std::span<const std::uint64_t> words, Fn&& fn) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::uint64_t bits = words[w]; bits != 0; bits &= bits - 1) {
      fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
}

inline std::size_t popcount(std::span<const std::uint64_t> words) {
  std::size_t c = 0;
  for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

}  // namespace latstack
