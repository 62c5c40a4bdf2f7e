#include "doctest.h"

#include <thread>
#include <vector>

#include "pancake/bit_array.hpp"

using pancake::BitArray;

TEST_CASE("set, test and count") {
  BitArray b(130);
  CHECK(b.word_count() == 3);
  CHECK(BitArray::bytes_for(130) == 24);
  CHECK(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.test(64));
  CHECK_FALSE(b.test(63));
  CHECK(b.popcount() == 3);

  std::vector<std::uint64_t> seen;
  b.for_each_set(0, b.word_count(), [&](std::uint64_t i) { seen.push_back(i); });
  CHECK(seen == std::vector<std::uint64_t>{0, 64, 129});

  b.clear();
  CHECK(b.none());
}

TEST_CASE("atomic test-and-set reports the first setter only") {
  BitArray b(64);
  CHECK(b.atomic_test_and_set(7));
  CHECK_FALSE(b.atomic_test_and_set(7));
  CHECK(b.atomic_test(7));
}

TEST_CASE("concurrent setters agree on a single winner per bit") {
  BitArray b(4096);
  std::vector<int> wins(4, 0);
  {
    std::vector<std::jthread> threads;
    for (int t = 0; t < 4; ++t) {
      threads.emplace_back([&, t] {
        for (std::uint64_t i = 0; i < 4096; ++i) wins[t] += b.atomic_test_and_set(i) ? 1 : 0;
      });
    }
  }
  CHECK(wins[0] + wins[1] + wins[2] + wins[3] == 4096);
  CHECK(b.popcount() == 4096);
}
