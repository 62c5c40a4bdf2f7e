#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pancake/cayley.hpp"
#include "pancake/cycle_families.hpp"

namespace pancake {

/// Generator indices traversing a cycle from a start vertex back to itself.
struct CycleLabel {
  std::vector<int> labels;
  friend bool operator==(const CycleLabel&, const CycleLabel&) = default;
  friend auto operator<=>(const CycleLabel&, const CycleLabel&) = default;
};

/// Lexicographic maximum over all rotations of a label sequence and of its reversal.
struct CanonicalForm {
  std::vector<int> labels;
  std::size_t length() const { return labels.size(); }
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

std::string format_labels(std::span<const int> labels);

CanonicalForm canonicalize(std::span<const int> labels);
inline CanonicalForm canonicalize(const CycleLabel& c) { return canonicalize(c.labels); }

/// Raised when a requested enumeration exceeds the DFS node budget.
class InfeasibleCensus : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CensusOptions {
  /// Upper bound on degree * (degree - 1)^(L - 1), the DFS path count estimate.
  std::uint64_t node_budget = std::uint64_t{1} << 32;
  unsigned workers = 1;
};

/// A simple cycle through the identity together with its vertex ranks (identity first).
struct EnumeratedCycle {
  CycleLabel labels;
  std::vector<RankIndex> vertices;
};

/// Every simple L-cycle through the identity, once each, sorted by canonical form
/// and then by labels.
std::vector<EnumeratedCycle> enumerate_cycle_details(const GraphKind& g, int length,
                                                     const CensusOptions& options = {});
std::vector<CycleLabel> enumerate_cycles(const GraphKind& g, int length, const CensusOptions& options = {});

/// True when the labels, applied from the identity, visit distinct vertices and return to it.
bool closes_simple_cycle(const GraphKind& g, std::span<const int> labels);

struct FamilyMatch {
  int family = 0;
  FamilyParams params;
  friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

/// Scans the families for g's kind and the form's length, instance by instance in
/// (k, i, j) order, and returns the first whose canonicalised template equals `form`.
/// Throws std::invalid_argument for lengths without a known classification.
std::optional<FamilyMatch> match_form(const CanonicalForm& form, const GraphKind& g);

struct FamilyTally {
  std::uint64_t count = 0;
  std::vector<FamilyParams> instances;  // distinct instances seen, in first-seen order
};

struct CensusReport {
  GraphKind graph;
  int length = 0;
  std::uint64_t total_cycles_through_identity = 0;
  std::map<int, FamilyTally> per_family;
  /// One entry per unmatched cycle, so total = sum of family counts + unmatched.size().
  std::vector<CanonicalForm> unmatched;
  /// Cycles whose labels failed the independent closure check.
  std::uint64_t closure_failures = 0;

  bool confirmed() const { return unmatched.empty() && closure_failures == 0; }
};

CensusReport verify_classification(const GraphKind& g, int length, const CensusOptions& options = {});

}  // namespace pancake
