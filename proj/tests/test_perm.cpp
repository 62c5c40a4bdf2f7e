#include "doctest.h"
#include "support/convert.hpp"

using namespace pancake;
using test::perm;
using test::sperm;

TEST_CASE("unsigned flip reverses a prefix") {
  CHECK(apply_flip(perm({1, 2, 3, 4}), 3) == perm({3, 2, 1, 4}));
  CHECK(apply_flip(perm({2, 3, 4, 1}), 4) == perm({1, 4, 3, 2}));
  CHECK(apply_flip(perm({2, 1}), 2) == perm({1, 2}));
}

TEST_CASE("burnt flip reverses and negates a prefix") {
  CHECK(apply_flip(sperm({1, 2, 3}), 2) == sperm({-2, -1, 3}));
  CHECK(apply_flip(sperm({-3, 1, -2}), 3) == sperm({2, -1, 3}));
  CHECK(apply_flip(sperm({1}), 1) == sperm({-1}));
}

TEST_CASE("flip index out of range") {
  CHECK_THROWS_AS(apply_flip(perm({1, 2, 3}), 1), std::out_of_range);
  CHECK_THROWS_AS(apply_flip(perm({1, 2, 3}), 4), std::out_of_range);
  CHECK_THROWS_AS(apply_flip(sperm({1, 2}), 0), std::out_of_range);
  CHECK_THROWS_AS(apply_flip(sperm({1, 2}), 3), std::out_of_range);
}

TEST_CASE("construction validates entries") {
  CHECK_THROWS_AS(Perm::from_entries(std::vector<int>{1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_entries(std::vector<int>{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_entries(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPerm::from_entries(std::vector<int>{1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPerm::from_entries(std::vector<int>{3, 1}), std::invalid_argument);
  CHECK(Perm::identity(4).is_identity());
  CHECK_FALSE(sperm({-1, 2}).is_identity());
  CHECK(sperm({-2, 1, -3}).magnitudes() == perm({2, 1, 3}));
}

TEST_CASE("unsigned rank") {
  CHECK(rank(Perm::identity(7)) == 0);
  CHECK(rank(perm({3, 2, 1})) == 5);
  CHECK(unrank(3, 3) == perm({2, 3, 1}));
  CHECK(rank(perm({10, 9, 8, 7, 6, 5, 4, 3, 2, 1})) == factorial(10) - 1);
  CHECK_THROWS_AS(unrank(3, 6), std::out_of_range);
}

TEST_CASE("signed rank") {
  CHECK(srank(SignedPerm::identity(5)) == 0);
  CHECK(srank(sperm({-1, 2})) == 1);
  CHECK(srank(sperm({2, 1})) == 4);
  CHECK(sunrank(2, 4) == sperm({2, 1}));
  CHECK(sunrank(3, signed_group_order(3) - 1) == sperm({-3, -2, -1}));
  CHECK_THROWS_AS(sunrank(2, 8), std::out_of_range);
}

TEST_CASE("group orders") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial(21), std::overflow_error);
  CHECK(signed_group_order(16) == factorial(16) << 16);
  CHECK_THROWS_AS(signed_group_order(17), std::overflow_error);
}

TEST_CASE("parsing") {
  const AnyPerm s = parse_perm("[-2 1 3]");
  REQUIRE(std::holds_alternative<SignedPerm>(s));
  CHECK(std::get<SignedPerm>(s) == sperm({-2, 1, 3}));

  const AnyPerm p = parse_perm("1 2 3 4");
  REQUIRE(std::holds_alternative<Perm>(p));
  CHECK(std::get<Perm>(p).is_identity());

  CHECK(std::holds_alternative<SignedPerm>(parse_perm("[1 2]")));
  CHECK(std::holds_alternative<SignedPerm>(parse_perm("2 -1")));
  CHECK(parse_unsigned("3,1,2") == perm({3, 1, 2}));
  CHECK(parse_signed("  [ -1, 2 ] ") == sperm({-1, 2}));

  CHECK_THROWS_AS(parse_perm("1 1 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_perm(""), ParseError);
  CHECK_THROWS_AS(parse_perm("[1 2"), ParseError);
  try {
    parse_perm("1 two 3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.token() == "two");
  }
}

TEST_CASE("formatting round-trips") {
  CHECK(format_perm(perm({3, 1, 2})) == "3 1 2");
  CHECK(format_perm(sperm({-2, 1, 3})) == "[-2 1 3]");
  CHECK(parse_perm(format_perm(AnyPerm{sperm({1, 2})})) == AnyPerm{sperm({1, 2})});
}
