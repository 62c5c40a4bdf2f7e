#include "doctest.h"

#include <map>
#include <set>

#include "pancake/cycle_census.hpp"

using namespace pancake;

namespace {

// Large enough for every family to have several instances.
constexpr int kSweepN = 10;

}  // namespace

TEST_CASE("numbering and lookup") {
  CHECK(cycle_families().size() == 26);
  CHECK(family_by_number(1).label == "P6-1");
  CHECK(family_by_number(23).label == "BP8-1");
  CHECK(family_by_number(28).kind == Kind::Burnt);
  CHECK_THROWS_AS(family_by_number(21), std::out_of_range);
  CHECK(families_for(Kind::Plain, 8).size() == 8);
  CHECK(families_for(Kind::Plain, 9).size() == 10);
  CHECK(families_for(Kind::Burnt, 9).size() == 2);
  CHECK(families_for(Kind::Burnt, 7).empty());
}

TEST_CASE("parameter ranges") {
  const auto& f2 = family_by_number(2);
  const auto inst = f2.instances(5);
  REQUIRE(inst.size() == 2);
  CHECK(inst[0].k == 4);
  CHECK(inst[1].k == 5);
  CHECK(f2.labels(inst[0]) == std::vector<int>{4, 3, 4, 3, 2, 4, 2});

  // BP9 families: 1 <= i, j <= k - 2 and i + j <= k - 1.
  for (const auto& p : family_by_number(27).instances(kSweepN)) {
    CHECK(*p.i >= 1);
    CHECK(*p.j <= p.k - 2);
    CHECK(*p.i + *p.j <= p.k - 1);
  }
  CHECK(family_by_number(27).instances(3).size() == 1);
}

TEST_CASE("templates have the declared length and valid generators") {
  for (const auto& f : cycle_families()) {
    for (const auto& p : f.instances(kSweepN)) {
      const auto labels = f.labels(p);
      CAPTURE(f.label);
      CAPTURE(p.to_string());
      CHECK(static_cast<int>(labels.size()) == f.length);
      for (int r : labels) {
        CHECK(r >= (f.kind == Kind::Plain ? 2 : 1));
        CHECK(r <= p.k);
      }
    }
  }
}

TEST_CASE("every template closes a simple cycle") {
  for (const auto& f : cycle_families()) {
    for (const auto& p : f.instances(7)) {
      CAPTURE(f.label);
      CAPTURE(p.to_string());
      CHECK(closes_simple_cycle(GraphKind::make(f.kind, 7), f.labels(p)));
    }
  }
}

TEST_CASE("raw templates are pairwise distinct") {
  for (Kind kind : {Kind::Plain, Kind::Burnt}) {
    std::set<std::vector<int>> seen;
    std::size_t total = 0;
    for (const auto& f : cycle_families()) {
      if (f.kind != kind) continue;
      for (const auto& p : f.instances(kSweepN)) {
        seen.insert(f.labels(p));
        ++total;
      }
    }
    CHECK(seen.size() == total);
  }
}

TEST_CASE("families never share a canonical form") {
  for (Kind kind : {Kind::Plain, Kind::Burnt}) {
    std::map<CanonicalForm, int> owner;
    std::map<CanonicalForm, int> multiplicity;
    for (const auto& f : cycle_families()) {
      if (f.kind != kind) continue;
      for (const auto& p : f.instances(kSweepN)) {
        const CanonicalForm c = canonicalize(f.labels(p));
        const auto [it, fresh] = owner.emplace(c, f.number);
        CAPTURE(f.label);
        CAPTURE(p.to_string());
        CHECK(it->second == f.number);
        ++multiplicity[c];
      }
    }
    // Within a family a few instances can describe the same cycle read differently.
    for (const auto& [form, count] : multiplicity) CHECK(count <= 3);
  }
}
