#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pancake/perm.hpp"

namespace pancake {

enum class Kind : std::uint8_t { Plain = 0, Burnt = 1 };

std::string_view to_string(Kind k);
/// Accepts "plain" or "burnt"; throws std::invalid_argument otherwise.
Kind parse_kind(std::string_view text);

/// P_n (Kind::Plain, generators r_2..r_n) or BP_n (Kind::Burnt, generators r_1..r_n).
struct GraphKind {
  Kind kind = Kind::Plain;
  int n = 1;

  /// Plain needs n >= 1 for a one-vertex graph; generators exist only for n >= 2.
  static GraphKind plain(int n);
  static GraphKind burnt(int n);
  static GraphKind make(Kind kind, int n);

  int degree() const { return kind == Kind::Plain ? n - 1 : n; }
  int first_flip() const { return kind == Kind::Plain ? 2 : 1; }
  /// n! or 2^n * n!. Throws std::overflow_error past the 64-bit rank capacity.
  std::uint64_t order() const;
  RankIndex rank(const AnyPerm& v) const;
  AnyPerm unrank(RankIndex r) const;
  AnyPerm identity() const;
  std::string name() const;

  friend bool operator==(const GraphKind&, const GraphKind&) = default;
};

/// Last window entry: the copy P_{n-1}(last) or BP_{n-1}(last) holding the vertex.
struct CopyLabel {
  int last = 0;
  friend bool operator==(const CopyLabel&, const CopyLabel&) = default;
};

int degree(const GraphKind& g);

/// One neighbour per generator in ascending flip-index order.
std::vector<Perm> neighbors(const GraphKind& g, const Perm& v);
std::vector<SignedPerm> neighbors(const GraphKind& g, const SignedPerm& v);
/// Throws std::invalid_argument when the vertex kind or size disagrees with g.
std::vector<AnyPerm> neighbors(const GraphKind& g, const AnyPerm& v);

CopyLabel copy_of(const Perm& v);
CopyLabel copy_of(const SignedPerm& v);
CopyLabel copy_of(const AnyPerm& v);

/// Applies a flip to whichever permutation kind `v` holds.
AnyPerm apply_flip(const AnyPerm& v, int i);

/// Throws std::invalid_argument unless `v` is a vertex of g.
void check_vertex(const GraphKind& g, const AnyPerm& v);

}  // namespace pancake
