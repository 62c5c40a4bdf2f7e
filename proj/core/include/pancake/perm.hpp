#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pancake {

/// Entries are stored one byte each; 127 is the largest stack the storage admits.
inline constexpr int kMaxStackSize = 127;

/// Largest n whose n! (unsigned) or 2^n * n! (signed) fits a 64-bit rank.
inline constexpr int kMaxRankableUnsigned = 20;
inline constexpr int kMaxRankableSigned = 16;

using RankIndex = std::uint64_t;

/// A permutation of [n] in one-line notation, pi(1) ... pi(n).
class Perm {
 public:
  static Perm identity(int n);

  /// Throws std::invalid_argument unless `entries` is a bijection on [1, n].
  static Perm from_entries(std::span<const int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  /// 0-based access to pi(i + 1).
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int8_t> entries() const { return entries_; }
  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  explicit Perm(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {}
  friend Perm apply_flip(const Perm&, int);
  friend Perm unrank(int, RankIndex);

  std::vector<std::int8_t> entries_;
};

/// A signed permutation of [+-n] in window notation [w(1) ... w(n)].
/// w(-i) = -w(i) is implied and never stored.
class SignedPerm {
 public:
  static SignedPerm identity(int n);

  /// Throws std::invalid_argument unless the absolute values are a bijection on [1, n].
  static SignedPerm from_entries(std::span<const int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int8_t> entries() const { return entries_; }
  bool is_identity() const;

  /// The unsigned permutation |w(1)| ... |w(n)|.
  Perm magnitudes() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  explicit SignedPerm(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {}
  friend SignedPerm apply_flip(const SignedPerm&, int);
  friend SignedPerm sunrank(int, RankIndex);

  std::vector<std::int8_t> entries_;
};

using AnyPerm = std::variant<Perm, SignedPerm>;

/// Right multiplication by r_i: reverses the first i entries. Requires 2 <= i <= n.
Perm apply_flip(const Perm& p, int i);

/// Right multiplication by r_i^B: reverses and negates the first i entries. Requires 1 <= i <= n.
SignedPerm apply_flip(const SignedPerm& s, int i);

/// Lexicographic (Lehmer code) rank among all n! permutations.
RankIndex rank(const Perm& p);
Perm unrank(int n, RankIndex r);

/// rank(|s|) * 2^n + sum over i of [w(i) < 0] * 2^(i-1).
RankIndex srank(const SignedPerm& s);
SignedPerm sunrank(int n, RankIndex r);

/// n! for n <= 20; throws std::overflow_error beyond.
std::uint64_t factorial(int n);
/// 2^n * n!; throws std::overflow_error when it does not fit 64 bits.
std::uint64_t signed_group_order(int n);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::string token)
      : std::invalid_argument(what), token_(std::move(token)) {}
  /// The offending token, or empty when the error concerns the whole input.
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

/// Whitespace-separated integers. Surrounding brackets or any negative entry
/// make the result a SignedPerm; otherwise a Perm.
AnyPerm parse_perm(std::string_view text);
Perm parse_unsigned(std::string_view text);
SignedPerm parse_signed(std::string_view text);

/// "1 2 3" for Perm, "[-2 1 3]" for SignedPerm.
std::string format_perm(const Perm& p);
std::string format_perm(const SignedPerm& s);
std::string format_perm(const AnyPerm& p);

// Raw kernels over byte buffers, used by the search loops to avoid allocation.
namespace kernel {

inline void flip_unsigned(std::span<std::int8_t> a, int i) {
  for (int lo = 0, hi = i - 1; lo < hi; ++lo, --hi) std::swap(a[lo], a[hi]);
}

inline void flip_signed(std::span<std::int8_t> a, int i) {
  int lo = 0;
  int hi = i - 1;
  for (; lo < hi; ++lo, --hi) {
    const std::int8_t t = a[lo];
    a[lo] = static_cast<std::int8_t>(-a[hi]);
    a[hi] = static_cast<std::int8_t>(-t);
  }
  if (lo == hi) a[lo] = static_cast<std::int8_t>(-a[lo]);
}

RankIndex rank_unsigned(std::span<const std::int8_t> a);
void unrank_unsigned(RankIndex r, std::span<std::int8_t> out);
RankIndex rank_signed(std::span<const std::int8_t> a);
void unrank_signed(RankIndex r, std::span<std::int8_t> out);

}  // namespace kernel

}  // namespace pancake
