#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pancake/cayley.hpp"
#include "pancake/checkpoint.hpp"

namespace pancake {

inline constexpr std::uint64_t kDefaultMemoryLimit = std::uint64_t{4} << 30;

/// Raised before any allocation when the search would not fit the memory limit.
class MemoryLimitError : public std::runtime_error {
 public:
  MemoryLimitError(std::uint64_t required, std::uint64_t limit);
  std::uint64_t required() const { return required_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

/// Shell sizes around the identity: counts[k] = R_k(n) or R_k^B(n).
struct LayerProfile {
  GraphKind graph;
  std::vector<std::uint64_t> counts;
  std::uint64_t total_visited = 0;
  /// False when the search stopped early (stop_after_layer); counts are then a prefix.
  bool complete = true;

  int eccentricity() const { return static_cast<int>(counts.size()) - 1; }
  std::uint64_t at(int k) const {
    return k >= 0 && static_cast<std::size_t>(k) < counts.size() ? counts[static_cast<std::size_t>(k)] : 0;
  }

  friend bool operator==(const LayerProfile&, const LayerProfile&) = default;
};

struct SearchOptions {
  std::uint64_t memory_limit = kDefaultMemoryLimit;
  unsigned workers = 1;
  /// When set, a checkpoint is written after every finished layer.
  std::optional<std::filesystem::path> checkpoint_path;
  /// Stop once this layer has been counted (and checkpointed); used to simulate interrupts.
  std::optional<std::uint32_t> stop_after_layer;
};

/// Bytes held by the three bit arrays (visited, frontier, next frontier).
std::uint64_t layer_search_memory(const GraphKind& g);

/// Breadth-first search from the identity. Results do not depend on `workers`.
LayerProfile layer_profile(const GraphKind& g, const SearchOptions& options = {});

/// Continues a search from a checkpoint written by layer_profile or resume.
/// `options.checkpoint_path` defaults to `checkpoint_path` so progress keeps being saved.
LayerProfile resume(const std::filesystem::path& checkpoint_path, SearchOptions options = {});

/// Minimal number of flips between the identity and `target`.
int distance(const GraphKind& g, const AnyPerm& target, std::uint64_t memory_limit = kDefaultMemoryLimit);

/// Lexicographically smallest optimal flip sequence sorting `target`:
/// applying the flips to `target` in order yields the identity.
std::vector<int> sort_sequence(const GraphKind& g, const AnyPerm& target,
                               std::uint64_t memory_limit = kDefaultMemoryLimit);

}  // namespace pancake
