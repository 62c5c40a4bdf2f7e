#include "pancake/layer_search.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <thread>

namespace pancake {
namespace {

constexpr int kBufferSize = 32;

// Rank-space view of one graph; the search loops are instantiated per kind.
struct PlainSpace {
  int n;
  static constexpr int first_flip = 2;
  RankIndex rank(std::span<const std::int8_t> a) const { return kernel::rank_unsigned(a); }
  void unrank(RankIndex r, std::span<std::int8_t> out) const { kernel::unrank_unsigned(r, out); }
  static void flip(std::span<std::int8_t> a, int i) { kernel::flip_unsigned(a, i); }
};

struct BurntSpace {
  int n;
  static constexpr int first_flip = 1;
  RankIndex rank(std::span<const std::int8_t> a) const { return kernel::rank_signed(a); }
  void unrank(RankIndex r, std::span<std::int8_t> out) const { kernel::unrank_signed(r, out); }
  static void flip(std::span<std::int8_t> a, int i) { kernel::flip_signed(a, i); }
};

template <typename F>
decltype(auto) with_space(const GraphKind& g, F&& f) {
  if (g.kind == Kind::Plain) return f(PlainSpace{g.n});
  return f(BurntSpace{g.n});
}

void check_memory(std::uint64_t required, std::uint64_t limit) {
  if (required > limit) throw MemoryLimitError(required, limit);
}

// Expands every vertex of `frontier`, marking unseen neighbours in `visited` and `next`.
// Frontier words are split into contiguous ranges, one per worker. A neighbour
// reached by two workers is claimed by whichever atomic OR lands first.
template <typename Space>
void expand_layer(const Space& space, BitArray& visited, const BitArray& frontier, BitArray& next,
                  unsigned workers) {
  const std::uint64_t words = frontier.word_count();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(1, words))));

  auto run = [&](std::uint64_t first_word, std::uint64_t last_word) {
    std::array<std::int8_t, kBufferSize> buffer{};
    const std::span<std::int8_t> stack(buffer.data(), static_cast<std::size_t>(space.n));
    frontier.for_each_set(first_word, last_word, [&](std::uint64_t r) {
      space.unrank(r, stack);
      for (int i = Space::first_flip; i <= space.n; ++i) {
        Space::flip(stack, i);
        const RankIndex u = space.rank(stack);
        if (visited.atomic_test_and_set(u)) next.atomic_test_and_set(u);
        Space::flip(stack, i);
      }
    });
  };

  if (workers == 1) {
    run(0, words);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (words + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = std::min(words, chunk * w);
    const std::uint64_t hi = std::min(words, lo + chunk);
    if (lo < hi) pool.emplace_back(run, lo, hi);
  }
}

struct SearchState {
  GraphKind graph;
  std::vector<std::uint64_t> counts;
  BitArray visited;
  BitArray frontier;
  BitArray next;
};

void save(const SearchState& s, const std::filesystem::path& path) {
  SearchCheckpoint cp;
  cp.graph = s.graph;
  cp.completed_layer = static_cast<std::uint32_t>(s.counts.size() - 1);
  cp.counts = s.counts;
  cp.visited = s.visited;
  cp.frontier = s.frontier;
  write_checkpoint(path, cp);
}

LayerProfile finish(const SearchState& s, bool complete) {
  LayerProfile p;
  p.graph = s.graph;
  p.counts = s.counts;
  p.total_visited = std::accumulate(s.counts.begin(), s.counts.end(), std::uint64_t{0});
  p.complete = complete;
  return p;
}

// Runs layers until the frontier empties or the stop layer is reached.
LayerProfile run_search(SearchState& s, const SearchOptions& options) {
  return with_space(s.graph, [&](const auto& space) {
    while (!s.frontier.none()) {
      const std::uint32_t layer = static_cast<std::uint32_t>(s.counts.size() - 1);
      if (options.stop_after_layer && layer >= *options.stop_after_layer) return finish(s, false);

      const std::uint64_t before = s.visited.popcount();
      expand_layer(space, s.visited, s.frontier, s.next, options.workers);
      const std::uint64_t discovered = s.visited.popcount() - before;

      std::swap(s.frontier, s.next);
      s.next.clear();
      if (discovered > 0) s.counts.push_back(discovered);
      if (options.checkpoint_path) save(s, *options.checkpoint_path);
    }
    return finish(s, true);
  });
}

std::uint64_t bit_array_bytes(const GraphKind& g) { return BitArray::bytes_for(g.order()); }

}  // namespace

MemoryLimitError::MemoryLimitError(std::uint64_t required, std::uint64_t limit)
    : std::runtime_error("search needs " + std::to_string(required) + " bytes but the memory limit is " +
                         std::to_string(limit) + " bytes"),
      required_(required),
      limit_(limit) {}

std::uint64_t layer_search_memory(const GraphKind& g) { return 3 * bit_array_bytes(g); }

LayerProfile layer_profile(const GraphKind& g, const SearchOptions& options) {
  if (g.n > kBufferSize) throw std::out_of_range("graph too large for layer search");
  check_memory(layer_search_memory(g), options.memory_limit);

  SearchState s{g, {1}, BitArray(g.order()), BitArray(g.order()), BitArray(g.order())};
  s.visited.set(0);
  s.frontier.set(0);
  if (options.checkpoint_path) save(s, *options.checkpoint_path);
  return run_search(s, options);
}

LayerProfile resume(const std::filesystem::path& checkpoint_path, SearchOptions options) {
  if (!options.checkpoint_path) options.checkpoint_path = checkpoint_path;
  SearchCheckpoint cp = read_checkpoint(checkpoint_path);
  check_memory(layer_search_memory(cp.graph), options.memory_limit);
  SearchState s{cp.graph, std::move(cp.counts), std::move(cp.visited), std::move(cp.frontier),
                BitArray(cp.graph.order())};
  return run_search(s, options);
}

int distance(const GraphKind& g, const AnyPerm& target, std::uint64_t memory_limit) {
  const RankIndex t = g.rank(target);
  if (t == 0) return 0;
  check_memory(layer_search_memory(g), memory_limit);
  BitArray visited(g.order());
  BitArray frontier(g.order());
  BitArray next(g.order());
  visited.set(0);
  frontier.set(0);
  return with_space(g, [&](const auto& space) {
    for (int layer = 1;; ++layer) {
      expand_layer(space, visited, frontier, next, 1);
      if (next.test(t)) return layer;
      if (next.none()) throw std::logic_error("target unreachable from the identity");
      std::swap(frontier, next);
      next.clear();
    }
  });
}

std::vector<int> sort_sequence(const GraphKind& g, const AnyPerm& target, std::uint64_t memory_limit) {
  const RankIndex t = g.rank(target);
  if (t == 0) return {};
  const std::uint64_t layer_bytes = bit_array_bytes(g);
  check_memory(3 * layer_bytes, memory_limit);

  // Keep every layer up to the target's; each extra layer is charged against the limit.
  std::vector<BitArray> layers;
  BitArray visited(g.order());
  BitArray first(g.order());
  visited.set(0);
  first.set(0);
  layers.push_back(std::move(first));

  with_space(g, [&](const auto& space) {
    while (true) {
      check_memory((layers.size() + 2) * layer_bytes, memory_limit);
      BitArray next(g.order());
      expand_layer(space, visited, layers.back(), next, 1);
      if (next.none()) throw std::logic_error("target unreachable from the identity");
      const bool found = next.test(t);
      layers.push_back(std::move(next));
      if (found) return;
    }
  });

  // Greedy descent: smallest flip index that moves one layer closer to the identity.
  std::vector<int> flips;
  AnyPerm current = target;
  for (std::size_t layer = layers.size() - 1; layer > 0; --layer) {
    bool stepped = false;
    for (int i = g.first_flip(); i <= g.n; ++i) {
      AnyPerm candidate = apply_flip(current, i);
      if (layers[layer - 1].test(g.rank(candidate))) {
        flips.push_back(i);
        current = std::move(candidate);
        stepped = true;
        break;
      }
    }
    if (!stepped) throw std::logic_error("no descending flip found; layer data inconsistent");
  }
  return flips;
}

}  // namespace pancake
