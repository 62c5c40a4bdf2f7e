#include "pancake/perm.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <limits>

namespace pancake {
namespace {

constexpr std::array<std::uint64_t, 21> kFactorials = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}();

void check_size(int n) {
  if (n < 1 || n > kMaxStackSize) {
    throw std::invalid_argument("stack size " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxStackSize) + "]");
  }
}

// Validates that |entries| is a bijection on [1, n]; `allow_negative` selects signed rules.
std::vector<std::int8_t> validated(std::span<const int> entries, bool allow_negative) {
  const int n = static_cast<int>(entries.size());
  check_size(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::int8_t> out;
  out.reserve(entries.size());
  for (int v : entries) {
    const int mag = std::abs(v);
    if (v < 0 && !allow_negative) {
      throw ParseError("negative entry " + std::to_string(v) + " in an unsigned permutation",
                       std::to_string(v));
    }
    if (mag < 1 || mag > n) {
      throw ParseError("entry " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]",
                       std::to_string(v));
    }
    if (seen[mag]) {
      throw ParseError("duplicate value " + std::to_string(mag), std::to_string(v));
    }
    seen[mag] = true;
    out.push_back(static_cast<std::int8_t>(v));
  }
  return out;
}

void check_rankable(int n, int limit) {
  if (n < 1 || n > limit) {
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds 64-bit rank capacity (max " +
                            std::to_string(limit) + ")");
  }
}

}  // namespace

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::overflow_error("factorial(" + std::to_string(n) + ") overflows 64 bits");
  return kFactorials[static_cast<std::size_t>(n)];
}

std::uint64_t signed_group_order(int n) {
  if (n < 0 || n > kMaxRankableSigned) {
    throw std::overflow_error("2^n * n! overflows 64 bits for n = " + std::to_string(n));
  }
  return factorial(n) << n;
}

// ---------------------------------------------------------------------------

Perm Perm::identity(int n) {
  check_size(n);
  std::vector<std::int8_t> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[i] = static_cast<std::int8_t>(i + 1);
  return Perm(std::move(e));
}

Perm Perm::from_entries(std::span<const int> entries) { return Perm(validated(entries, false)); }

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

SignedPerm SignedPerm::identity(int n) {
  check_size(n);
  std::vector<std::int8_t> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[i] = static_cast<std::int8_t>(i + 1);
  return SignedPerm(std::move(e));
}

SignedPerm SignedPerm::from_entries(std::span<const int> entries) {
  return SignedPerm(validated(entries, true));
}

bool SignedPerm::is_identity() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Perm SignedPerm::magnitudes() const {
  std::vector<int> mags;
  mags.reserve(entries_.size());
  for (auto v : entries_) mags.push_back(std::abs(static_cast<int>(v)));
  return Perm::from_entries(mags);
}

// ---------------------------------------------------------------------------

Perm apply_flip(const Perm& p, int i) {
  if (i < 2 || i > p.size()) {
    throw std::out_of_range("flip index " + std::to_string(i) + " outside [2, " +
                            std::to_string(p.size()) + "]");
  }
  std::vector<std::int8_t> e = p.entries_;
  kernel::flip_unsigned(e, i);
  return Perm(std::move(e));
}

SignedPerm apply_flip(const SignedPerm& s, int i) {
  if (i < 1 || i > s.size()) {
    throw std::out_of_range("flip index " + std::to_string(i) + " outside [1, " +
                            std::to_string(s.size()) + "]");
  }
  std::vector<std::int8_t> e = s.entries_;
  kernel::flip_signed(e, i);
  return SignedPerm(std::move(e));
}

// ---------------------------------------------------------------------------

namespace kernel {

RankIndex rank_unsigned(std::span<const std::int8_t> a) {
  const int n = static_cast<int>(a.size());
  std::uint32_t used = 0;
  RankIndex r = 0;
  for (int i = 0; i < n; ++i) {
    const int v = a[i] - 1;
    const std::uint32_t below = used & ((1u << v) - 1u);
    const int digit = v - std::popcount(below);
    r += static_cast<RankIndex>(digit) * kFactorials[static_cast<std::size_t>(n - 1 - i)];
    used |= 1u << v;
  }
  return r;
}

void unrank_unsigned(RankIndex r, std::span<std::int8_t> out) {
  const int n = static_cast<int>(out.size());
  std::uint32_t free_mask = (n == 32) ? ~0u : ((1u << n) - 1u);
  for (int i = 0; i < n; ++i) {
    const RankIndex f = kFactorials[static_cast<std::size_t>(n - 1 - i)];
    int digit = static_cast<int>(r / f);
    r %= f;
    // Select the digit-th remaining value.
    std::uint32_t m = free_mask;
    for (; digit > 0; --digit) m &= m - 1;
    const int v = std::countr_zero(m);
    free_mask &= ~(1u << v);
    out[i] = static_cast<std::int8_t>(v + 1);
  }
}

RankIndex rank_signed(std::span<const std::int8_t> a) {
  const int n = static_cast<int>(a.size());
  std::uint32_t used = 0;
  RankIndex r = 0;
  RankIndex signs = 0;
  for (int i = 0; i < n; ++i) {
    const int w = a[i];
    const int v = (w < 0 ? -w : w) - 1;
    if (w < 0) signs |= RankIndex{1} << i;
    const int digit = v - std::popcount(used & ((1u << v) - 1u));
    r += static_cast<RankIndex>(digit) * kFactorials[static_cast<std::size_t>(n - 1 - i)];
    used |= 1u << v;
  }
  return (r << n) | signs;
}

void unrank_signed(RankIndex r, std::span<std::int8_t> out) {
  const int n = static_cast<int>(out.size());
  const RankIndex signs = r & ((RankIndex{1} << n) - 1);
  unrank_unsigned(r >> n, out);
  for (int i = 0; i < n; ++i) {
    if ((signs >> i) & 1u) out[i] = static_cast<std::int8_t>(-out[i]);
  }
}

}  // namespace kernel

RankIndex rank(const Perm& p) {
  check_rankable(p.size(), kMaxRankableUnsigned);
  return kernel::rank_unsigned(p.entries());
}

Perm unrank(int n, RankIndex r) {
  check_rankable(n, kMaxRankableUnsigned);
  if (r >= factorial(n)) {
    throw std::out_of_range("rank " + std::to_string(r) + " outside [0, " + std::to_string(n) + "!)");
  }
  std::vector<std::int8_t> e(static_cast<std::size_t>(n));
  kernel::unrank_unsigned(r, e);
  return Perm(std::move(e));
}

RankIndex srank(const SignedPerm& s) {
  check_rankable(s.size(), kMaxRankableSigned);
  return kernel::rank_signed(s.entries());
}

SignedPerm sunrank(int n, RankIndex r) {
  check_rankable(n, kMaxRankableSigned);
  if (r >= signed_group_order(n)) {
    throw std::out_of_range("signed rank " + std::to_string(r) + " outside [0, 2^" +
                            std::to_string(n) + " * " + std::to_string(n) + "!)");
  }
  std::vector<std::int8_t> e(static_cast<std::size_t>(n));
  kernel::unrank_signed(r, e);
  return SignedPerm(std::move(e));
}

// ---------------------------------------------------------------------------

namespace {

struct Tokens {
  std::vector<int> values;
  bool bracketed = false;
  bool any_negative = false;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ','; }

Tokens tokenize(std::string_view text) {
  Tokens t;
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && is_space(text[b])) ++b;
  while (e > b && is_space(text[e - 1])) --e;
  text = text.substr(b, e - b);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParseError("unbalanced '[' in permutation", std::string(text));
    t.bracketed = true;
    text = text.substr(1, text.size() - 2);
  } else if (!text.empty() && text.back() == ']') {
    throw ParseError("unbalanced ']' in permutation", std::string(text));
  }

  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    const std::string_view tok = text.substr(pos, end - pos);
    int value = 0;
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || first == tok.data() + tok.size()) {
      throw ParseError("malformed token '" + std::string(tok) + "'", std::string(tok));
    }
    if (value < 0 || (tok.front() == '-')) t.any_negative = true;
    t.values.push_back(value);
    pos = end;
  }
  if (t.values.empty()) throw ParseError("empty permutation", "");
  return t;
}

}  // namespace

AnyPerm parse_perm(std::string_view text) {
  Tokens t = tokenize(text);
  if (t.bracketed || t.any_negative) return SignedPerm::from_entries(t.values);
  return Perm::from_entries(t.values);
}

Perm parse_unsigned(std::string_view text) {
  Tokens t = tokenize(text);
  return Perm::from_entries(t.values);
}

SignedPerm parse_signed(std::string_view text) {
  Tokens t = tokenize(text);
  return SignedPerm::from_entries(t.values);
}

std::string format_perm(const Perm& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

std::string format_perm(const SignedPerm& s) {
  std::string out = "[";
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  out += ']';
  return out;
}

std::string format_perm(const AnyPerm& p) {
  return std::visit([](const auto& v) { return format_perm(v); }, p);
}

}  // namespace pancake
