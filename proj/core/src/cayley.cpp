#include "pancake/cayley.hpp"

#include <stdexcept>

namespace pancake {

std::string_view to_string(Kind k) { return k == Kind::Plain ? "plain" : "burnt"; }

Kind parse_kind(std::string_view text) {
  if (text == "plain" || text == "P") return Kind::Plain;
  if (text == "burnt" || text == "B") return Kind::Burnt;
  throw std::invalid_argument("unknown graph kind '" + std::string(text) + "' (expected plain or burnt)");
}

GraphKind GraphKind::plain(int n) { return make(Kind::Plain, n); }
GraphKind GraphKind::burnt(int n) { return make(Kind::Burnt, n); }

GraphKind GraphKind::make(Kind kind, int n) {
  if (n < 1 || n > kMaxStackSize) {
    throw std::invalid_argument("graph size n = " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxStackSize) + "]");
  }
  return GraphKind{kind, n};
}

std::uint64_t GraphKind::order() const {
  return kind == Kind::Plain ? factorial(n) : signed_group_order(n);
}

RankIndex GraphKind::rank(const AnyPerm& v) const {
  check_vertex(*this, v);
  if (kind == Kind::Plain) return pancake::rank(std::get<Perm>(v));
  return srank(std::get<SignedPerm>(v));
}

AnyPerm GraphKind::unrank(RankIndex r) const {
  if (kind == Kind::Plain) return pancake::unrank(n, r);
  return sunrank(n, r);
}

AnyPerm GraphKind::identity() const {
  if (kind == Kind::Plain) return Perm::identity(n);
  return SignedPerm::identity(n);
}

std::string GraphKind::name() const {
  return (kind == Kind::Plain ? "P_" : "BP_") + std::to_string(n);
}

int degree(const GraphKind& g) { return g.degree(); }

void check_vertex(const GraphKind& g, const AnyPerm& v) {
  const bool is_signed = std::holds_alternative<SignedPerm>(v);
  if (is_signed != (g.kind == Kind::Burnt)) {
    throw std::invalid_argument(std::string("vertex kind does not match graph ") + g.name() +
                                (is_signed ? " (got a signed permutation)" : " (got an unsigned permutation)"));
  }
  const int size = std::visit([](const auto& p) { return p.size(); }, v);
  if (size != g.n) {
    throw std::invalid_argument("vertex of size " + std::to_string(size) + " does not belong to " + g.name());
  }
}

std::vector<Perm> neighbors(const GraphKind& g, const Perm& v) {
  check_vertex(g, v);
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(g.degree()));
  for (int i = 2; i <= g.n; ++i) out.push_back(apply_flip(v, i));
  return out;
}

std::vector<SignedPerm> neighbors(const GraphKind& g, const SignedPerm& v) {
  check_vertex(g, v);
  std::vector<SignedPerm> out;
  out.reserve(static_cast<std::size_t>(g.degree()));
  for (int i = 1; i <= g.n; ++i) out.push_back(apply_flip(v, i));
  return out;
}

std::vector<AnyPerm> neighbors(const GraphKind& g, const AnyPerm& v) {
  std::vector<AnyPerm> out;
  std::visit(
      [&](const auto& p) {
        for (auto& u : neighbors(g, p)) out.emplace_back(std::move(u));
      },
      v);
  return out;
}

CopyLabel copy_of(const Perm& v) {
  if (v.size() < 2) throw std::invalid_argument("copy_of requires n >= 2");
  return CopyLabel{v[static_cast<std::size_t>(v.size() - 1)]};
}

CopyLabel copy_of(const SignedPerm& v) {
  if (v.size() < 2) throw std::invalid_argument("copy_of requires n >= 2");
  return CopyLabel{v[static_cast<std::size_t>(v.size() - 1)]};
}

CopyLabel copy_of(const AnyPerm& v) {
  return std::visit([](const auto& p) { return copy_of(p); }, v);
}

AnyPerm apply_flip(const AnyPerm& v, int i) {
  return std::visit([i](const auto& p) -> AnyPerm { return apply_flip(p, i); }, v);
}

}  // namespace pancake
