#include <doctest.h>

#include "weylcells/partition.hpp"

using namespace weylcells;

TEST_CASE("construction and parsing") {
  CHECK(Partition::parse("2,2,1").parts() == std::vector<int>{2, 2, 1});
  CHECK(Partition::parse("3").weight() == 3);
  CHECK(Partition({3, 1}).to_string() == "3,1");
  CHECK(Partition().to_string().empty());
  CHECK(Partition({2, 1}).part(5) == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
}

TEST_CASE("partition counts") {
  const std::vector<std::size_t> counts{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int p = 1; p <= 10; ++p) CHECK(partitions_of(p).size() == counts[static_cast<std::size_t>(p - 1)]);
  CHECK(partitions_of(4).front() == Partition({4}));
  CHECK(partitions_of(4).back() == Partition({1, 1, 1, 1}));
}

TEST_CASE("dual") {
  CHECK(dual(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(dual(Partition({2, 2})) == Partition({2, 2}));
  CHECK(dual(Partition({1, 1, 1})) == Partition({3}));
  for (int p = 1; p <= 8; ++p)
    for (const auto& l : partitions_of(p)) {
      CHECK(dual(dual(l)) == l);
      CHECK(dual(l).weight() == p);
      CHECK(dual(l).length() == l.part(0));
    }
}

TEST_CASE("dominance") {
  CHECK(dominance_leq(Partition({2, 1}), Partition({3})));
  CHECK_FALSE(dominance_leq(Partition({3}), Partition({2, 1})));
  CHECK(dominance_leq(Partition({1, 1, 1, 1}), Partition({2, 2})));
  // (3,1,1,1) and (2,2,2) are incomparable.
  CHECK_FALSE(dominance_leq(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
  CHECK_FALSE(dominance_leq(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
  CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({3})), std::invalid_argument);

  for (int p = 1; p <= 7; ++p) {
    const auto all = partitions_of(p);
    for (const auto& a : all) {
      CHECK(dominance_leq(a, a));
      CHECK(dominance_leq(Partition(std::vector<int>(static_cast<std::size_t>(p), 1)), a));
      CHECK(dominance_leq(a, Partition({p})));
      for (const auto& b : all) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        for (const auto& c : all)
          if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
      }
    }
  }
}

TEST_CASE("two-one shapes and the length criterion") {
  CHECK(two_one_shape(5, 2) == Partition({2, 2, 1}));
  CHECK(two_one_shape(4, 0) == Partition({1, 1, 1, 1}));
  CHECK_THROWS_AS(two_one_shape(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(two_one_shape(5, -1), std::invalid_argument);
  const auto sides = two_one_criterion(4, 1, Partition({2, 2}));
  CHECK(sides.dominance);
  CHECK(sides.length_bound);
  CHECK(sides.agree());
  for (int p = 1; p <= 8; ++p)
    for (int l = 0; 2 * l <= p; ++l)
      for (const auto& mu : partitions_of(p)) CHECK(two_one_criterion(p, l, mu).agree());
}

TEST_CASE("cycle types") {
  CHECK(cycle_type(Permutation::parse_cycles("(1 2)(3 4 5)", 6)) == Partition({3, 2, 1}));
  CHECK(cycle_type(Permutation::identity(3)) == Partition({1, 1, 1}));
}
