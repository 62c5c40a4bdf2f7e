#include "properties.hpp"

#include <filesystem>
#include <set>

#include "oracles/oracles.hpp"
#include "pancake/cayley.hpp"
#include "pancake/layer_search.hpp"

namespace props {
namespace {

using namespace pancake;

template <class P>
oracle::Stack stack_of(const P& p) {
  return oracle::Stack(p.entries().begin(), p.entries().end());
}

std::string label(const GraphKind& g, RankIndex r) { return g.name() + " rank " + std::to_string(r); }

std::string counts_text(const std::vector<std::uint64_t>& c) {
  std::string s;
  for (auto v : c) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

}  // namespace

std::string flip_involution(int max_unsigned, int max_signed) {
  for (int n = 1; n <= std::max(max_unsigned, max_signed); ++n) {
    for (Kind kind : {Kind::Plain, Kind::Burnt}) {
      if (n > (kind == Kind::Plain ? max_unsigned : max_signed)) continue;
      const GraphKind g = GraphKind::make(kind, n);
      for (RankIndex r = 0; r < g.order(); ++r) {
        const AnyPerm v = g.unrank(r);
        for (int i = g.first_flip(); i <= n; ++i) {
          if (apply_flip(apply_flip(v, i), i) != v) return label(g, r) + ": flip " + std::to_string(i) + " twice";
        }
      }
    }
  }
  return {};
}

std::string rank_bijection(int max_unsigned, int max_signed) {
  for (int n = 1; n <= max_unsigned; ++n) {
    const auto all = oracle::enumerate(n, false);
    for (std::size_t idx = 0; idx < all.size(); ++idx) {
      const Perm p = Perm::from_entries(all[idx]);
      if (rank(p) != idx) return "P_" + std::to_string(n) + ": rank of lexicographic index " + std::to_string(idx);
      if (unrank(n, idx) != p) return "P_" + std::to_string(n) + ": unrank " + std::to_string(idx);
    }
  }
  for (int n = 1; n <= max_signed; ++n) {
    const auto all = oracle::enumerate(n, true);
    std::set<RankIndex> seen;
    for (const auto& stack : all) {
      const SignedPerm s = SignedPerm::from_entries(stack);
      const RankIndex r = srank(s);
      if (sunrank(n, r) != s) return "BP_" + std::to_string(n) + ": sunrank(srank) round-trip";
      seen.insert(r);
    }
    if (seen.size() != all.size() || *seen.rbegin() != all.size() - 1) {
      return "BP_" + std::to_string(n) + ": signed ranks are not a bijection onto [0, order)";
    }
  }
  return {};
}

std::string flip_matches_oracle(int max_unsigned, int max_signed) {
  for (Kind kind : {Kind::Plain, Kind::Burnt}) {
    const int max_n = kind == Kind::Plain ? max_unsigned : max_signed;
    for (int n = 1; n <= max_n; ++n) {
      const GraphKind g = GraphKind::make(kind, n);
      for (RankIndex r = 0; r < g.order(); ++r) {
        const AnyPerm v = g.unrank(r);
        const oracle::Stack sv = std::visit([](const auto& p) { return stack_of(p); }, v);
        for (int i = g.first_flip(); i <= n; ++i) {
          const AnyPerm w = apply_flip(v, i);
          const oracle::Stack sw = std::visit([](const auto& p) { return stack_of(p); }, w);
          if (sw != oracle::compose_flip(sv, i, kind == Kind::Burnt)) {
            return label(g, r) + ": flip " + std::to_string(i) + " disagrees with composition";
          }
        }
      }
    }
  }
  return {};
}

std::string top_flip_changes_copy(int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    const GraphKind g = GraphKind::burnt(n);
    for (RankIndex r = 0; r < g.order(); ++r) {
      const SignedPerm v = sunrank(n, r);
      const SignedPerm u = apply_flip(v, n);
      if (std::abs(copy_of(u).last) == std::abs(copy_of(v).last)) return label(g, r) + ": top flip kept |copy|";
    }
  }
  return {};
}

std::string nearby_stacks_separate(int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    const GraphKind g = GraphKind::burnt(n);
    for (RankIndex r = 0; r < g.order(); ++r) {
      const SignedPerm u = sunrank(n, r);
      // Everything within two flips of u that stays inside u's copy (top flip excluded).
      std::set<SignedPerm> near;
      for (int i = 1; i < n; ++i) {
        const SignedPerm a = apply_flip(u, i);
        near.insert(a);
        for (int j = 1; j < n; ++j) near.insert(apply_flip(a, j));
      }
      near.erase(u);
      const int here = copy_of(apply_flip(u, n)).last;
      for (const auto& v : near) {
        if (copy_of(apply_flip(v, n)).last == here) {
          return label(g, r) + ": stacks " + std::to_string(srank(v)) + " and " + std::to_string(r) +
                 " share a copy after the top flip";
        }
      }
    }
  }
  return {};
}

std::string bfs_matches_oracle(int max_plain, int max_burnt) {
  for (Kind kind : {Kind::Plain, Kind::Burnt}) {
    const int max_n = kind == Kind::Plain ? max_plain : max_burnt;
    for (int n = 1; n <= max_n; ++n) {
      const auto got = layer_profile(GraphKind::make(kind, n)).counts;
      const auto want = oracle::layers(n, kind == Kind::Burnt);
      if (got != want) {
        return GraphKind::make(kind, n).name() + ": bitset " + counts_text(got) + " vs naive " + counts_text(want);
      }
    }
  }
  return {};
}

std::string worker_independence(int n, unsigned workers) {
  SearchOptions many;
  many.workers = workers;
  const auto one = layer_profile(GraphKind::plain(n));
  const auto more = layer_profile(GraphKind::plain(n), many);
  if (one != more) return "P_" + std::to_string(n) + ": " + counts_text(one.counts) + " vs " + counts_text(more.counts);
  return {};
}

std::string resume_equivalence(int n, unsigned stop_after) {
  const auto path = std::filesystem::temp_directory_path() / ("pancake_resume_p" + std::to_string(n) + ".ckpt");
  std::filesystem::remove(path);
  SearchOptions opts;
  opts.checkpoint_path = path;
  opts.stop_after_layer = stop_after;
  const auto partial = layer_profile(GraphKind::plain(n), opts);
  if (partial.complete || partial.eccentricity() != static_cast<int>(stop_after)) {
    return "interrupted run did not stop after layer " + std::to_string(stop_after);
  }
  const auto resumed = resume(path);
  const auto straight = layer_profile(GraphKind::plain(n));
  std::filesystem::remove(path);
  if (resumed != straight) return "resumed " + counts_text(resumed.counts) + " vs " + counts_text(straight.counts);
  return {};
}

}  // namespace props
