#include "pancake/bit_array.hpp"

#include <algorithm>

namespace pancake {

BitArray::BitArray(std::uint64_t size_bits) : size_(size_bits), words_(words_for(size_bits), 0) {}

void BitArray::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::uint64_t BitArray::popcount() const {
  std::uint64_t total = 0;
  for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

bool BitArray::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

}  // namespace pancake
