#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace pancake {

/// Flat bit array addressed by RankIndex. Bit b of word w is index 64w + b.
class BitArray {
 public:
  BitArray() = default;
  explicit BitArray(std::uint64_t size_bits);

  static std::uint64_t words_for(std::uint64_t size_bits) { return (size_bits + 63) / 64; }
  static std::uint64_t bytes_for(std::uint64_t size_bits) { return words_for(size_bits) * 8; }

  std::uint64_t size() const { return size_; }
  std::uint64_t word_count() const { return words_.size(); }

  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  /// Sets bit i with an atomic OR; returns true when this call changed it.
  bool atomic_test_and_set(std::uint64_t i) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    std::atomic_ref<std::uint64_t> word(words_[i >> 6]);
    return (word.fetch_or(mask, std::memory_order_relaxed) & mask) == 0;
  }
  bool atomic_test(std::uint64_t i) const {
    std::atomic_ref<std::uint64_t> word(const_cast<std::uint64_t&>(words_[i >> 6]));
    return (word.load(std::memory_order_relaxed) >> (i & 63)) & 1u;
  }

  void clear();
  std::uint64_t popcount() const;
  bool none() const;

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  /// Calls f(index) for each set bit with index in words [first_word, last_word).
  template <typename F>
  void for_each_set(std::uint64_t first_word, std::uint64_t last_word, F&& f) const {
    for (std::uint64_t w = first_word; w < last_word; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f((w << 6) + static_cast<std::uint64_t>(b));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const BitArray&, const BitArray&) = default;

 private:
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pancake
