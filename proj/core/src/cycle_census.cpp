#include "pancake/cycle_census.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <thread>

namespace pancake {
namespace {

constexpr int kMinLength = 3;
constexpr int kMaxLength = 12;
constexpr int kMaxClassifiedLength = 9;
constexpr int kBufferSize = 32;

std::uint64_t path_estimate(int degree, int length) {
  if (degree <= 1) return static_cast<std::uint64_t>(degree);
  std::uint64_t total = static_cast<std::uint64_t>(degree);
  for (int step = 1; step < length; ++step) {
    if (total > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(degree - 1)) return ~std::uint64_t{0};
    total *= static_cast<std::uint64_t>(degree - 1);
  }
  return total;
}

struct Dfs {
  const GraphKind& g;
  int length;
  std::array<std::int8_t, kBufferSize> buffer{};
  std::vector<RankIndex> path;
  std::vector<int> labels;
  std::vector<EnumeratedCycle>* out;

  std::span<std::int8_t> stack() { return {buffer.data(), static_cast<std::size_t>(g.n)}; }

  RankIndex rank_now() {
    return g.kind == Kind::Plain ? kernel::rank_unsigned(stack()) : kernel::rank_signed(stack());
  }
  void flip(int i) {
    if (g.kind == Kind::Plain) {
      kernel::flip_unsigned(stack(), i);
    } else {
      kernel::flip_signed(stack(), i);
    }
  }

  // `path` holds v_0 (identity) .. v_d; `labels` the d flips between them.
  void extend() {
    const int depth = static_cast<int>(labels.size());
    for (int i = g.first_flip(); i <= g.n; ++i) {
      if (!labels.empty() && labels.back() == i) continue;
      flip(i);
      const RankIndex u = rank_now();
      if (depth + 1 == length) {
        // Closing edge; keep one of the two traversal directions.
        if (u == 0 && path[1] < path.back()) {
          labels.push_back(i);
          out->push_back(EnumeratedCycle{CycleLabel{labels}, path});
          labels.pop_back();
        }
      } else if (std::find(path.begin(), path.end(), u) == path.end()) {
        path.push_back(u);
        labels.push_back(i);
        extend();
        labels.pop_back();
        path.pop_back();
      }
      flip(i);
    }
  }
};

void collect_from_root(const GraphKind& g, int length, int first_flip, std::vector<EnumeratedCycle>& out) {
  Dfs dfs{g, length, {}, {}, {}, &out};
  auto s = dfs.stack();
  for (int i = 0; i < g.n; ++i) s[i] = static_cast<std::int8_t>(i + 1);
  dfs.path.push_back(0);
  dfs.flip(first_flip);
  dfs.path.push_back(dfs.rank_now());
  dfs.labels.push_back(first_flip);
  dfs.extend();
}

// Canonical templates of every in-range instance, first instance wins.
std::map<CanonicalForm, FamilyMatch> instance_index(const GraphKind& g, int length) {
  std::map<CanonicalForm, FamilyMatch> index;
  for (const CycleFamily* family : families_for(g.kind, length)) {
    for (const FamilyParams& p : family->instances(g.n)) {
      index.emplace(canonicalize(family->labels(p)), FamilyMatch{family->number, p});
    }
  }
  return index;
}

void check_length(int length) {
  if (length < kMinLength || length > kMaxLength) {
    throw std::invalid_argument("cycle length " + std::to_string(length) + " outside [" +
                                std::to_string(kMinLength) + ", " + std::to_string(kMaxLength) + "]");
  }
}

}  // namespace

std::string format_labels(std::span<const int> labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  out += ')';
  return out;
}

CanonicalForm canonicalize(std::span<const int> labels) {
  const std::size_t len = labels.size();
  const std::vector<int> forward(labels.begin(), labels.end());
  const std::vector<int> backward(labels.rbegin(), labels.rend());
  std::vector<int> best = forward;
  std::vector<int> candidate(len);
  for (const auto* seq : {&forward, &backward}) {
    for (std::size_t r = 0; r < len; ++r) {
      for (std::size_t t = 0; t < len; ++t) candidate[t] = (*seq)[(r + t) % len];
      if (candidate > best) best = candidate;
    }
  }
  return CanonicalForm{std::move(best)};
}

bool closes_simple_cycle(const GraphKind& g, std::span<const int> labels) {
  if (labels.size() < 3) return false;
  AnyPerm v = g.identity();
  std::set<RankIndex> seen{0};
  for (std::size_t step = 0; step < labels.size(); ++step) {
    const int i = labels[step];
    if (i < g.first_flip() || i > g.n) return false;
    v = apply_flip(v, i);
    const RankIndex r = g.rank(v);
    if (step + 1 == labels.size()) return r == 0;
    if (!seen.insert(r).second) return false;
  }
  return false;
}

std::vector<EnumeratedCycle> enumerate_cycle_details(const GraphKind& g, int length, const CensusOptions& options) {
  check_length(length);
  if (g.n > kBufferSize) throw InfeasibleCensus("graph too large for cycle enumeration");
  (void)g.order();
  const std::uint64_t estimate = path_estimate(g.degree(), length);
  if (estimate > options.node_budget) {
    throw InfeasibleCensus("depth-" + std::to_string(length) + " search on " + g.name() + " needs ~" +
                           std::to_string(estimate) + " paths, over the budget of " +
                           std::to_string(options.node_budget));
  }

  const int roots = g.degree();
  std::vector<std::vector<EnumeratedCycle>> per_root(static_cast<std::size_t>(std::max(roots, 0)));
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(std::max(roots, 1))));
  auto work = [&](unsigned worker) {
    for (int r = static_cast<int>(worker); r < roots; r += static_cast<int>(workers)) {
      collect_from_root(g, length, g.first_flip() + r, per_root[static_cast<std::size_t>(r)]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  // Merge, then deduplicate on (canonical form, vertex set).
  struct Keyed {
    CanonicalForm form;
    std::vector<RankIndex> vertex_set;
    EnumeratedCycle cycle;
  };
  std::vector<Keyed> keyed;
  for (auto& batch : per_root) {
    for (auto& c : batch) {
      auto vs = c.vertices;
      std::sort(vs.begin(), vs.end());
      keyed.push_back(Keyed{canonicalize(c.labels), std::move(vs), std::move(c)});
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.form != b.form) return a.form < b.form;
    if (a.vertex_set != b.vertex_set) return a.vertex_set < b.vertex_set;
    return a.cycle.labels < b.cycle.labels;
  });
  std::vector<EnumeratedCycle> out;
  for (std::size_t idx = 0; idx < keyed.size(); ++idx) {
    if (idx > 0 && keyed[idx].form == keyed[idx - 1].form && keyed[idx].vertex_set == keyed[idx - 1].vertex_set) {
      continue;
    }
    out.push_back(std::move(keyed[idx].cycle));
  }
  return out;
}

std::vector<CycleLabel> enumerate_cycles(const GraphKind& g, int length, const CensusOptions& options) {
  std::vector<CycleLabel> out;
  for (auto& c : enumerate_cycle_details(g, length, options)) out.push_back(std::move(c.labels));
  return out;
}

std::optional<FamilyMatch> match_form(const CanonicalForm& form, const GraphKind& g) {
  const int length = static_cast<int>(form.length());
  const auto families = families_for(g.kind, length);
  if (families.empty()) {
    throw std::invalid_argument("no classified canonical forms of length " + std::to_string(length) + " for " +
                                std::string(to_string(g.kind)) + " pancake graphs");
  }
  for (const CycleFamily* family : families) {
    for (const FamilyParams& p : family->instances(g.n)) {
      if (canonicalize(family->labels(p)) == form) return FamilyMatch{family->number, p};
    }
  }
  return std::nullopt;
}

CensusReport verify_classification(const GraphKind& g, int length, const CensusOptions& options) {
  if (length > kMaxClassifiedLength) {
    throw std::invalid_argument("no classification is available for cycles of length " + std::to_string(length));
  }
  CensusReport report;
  report.graph = g;
  report.length = length;
  const auto cycles = enumerate_cycle_details(g, length, options);
  report.total_cycles_through_identity = cycles.size();

  const auto index = instance_index(g, length);
  for (const auto& c : cycles) {
    if (!closes_simple_cycle(g, c.labels.labels)) ++report.closure_failures;
    const CanonicalForm form = canonicalize(c.labels);
    const auto hit = index.find(form);
    if (hit == index.end()) {
      report.unmatched.push_back(form);
      continue;
    }
    FamilyTally& tally = report.per_family[hit->second.family];
    ++tally.count;
    if (std::find(tally.instances.begin(), tally.instances.end(), hit->second.params) == tally.instances.end()) {
      tally.instances.push_back(hit->second.params);
    }
  }
  std::sort(report.unmatched.begin(), report.unmatched.end());
  return report;
}

}  // namespace pancake
