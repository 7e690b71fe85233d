#include <doctest.h>

#include "oracles.hpp"

using namespace lvb;

TEST_CASE("partition normalizes and validates") {
  CHECK(Partition({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
  CHECK(Partition({3, 1, 0, 0}).size() == 4);
  CHECK_THROWS_AS(Partition({1, 3}), Error);
  CHECK_THROWS_AS(Partition({2, -1}), Error);
  CHECK(Partition::from_multiset({1, 3, 2, 3}) == Partition{3, 3, 2, 1});
  CHECK(Partition{4, 4, 2}.multiplicity(4) == 2);
}

TEST_CASE("lie types") {
  CHECK(LieType(Family::B, 3).dim() == 7);
  CHECK(LieType(Family::C, 3).dim() == 6);
  CHECK(LieType(Family::B, 3).langlands_dual() == LieType(Family::C, 3));
  CHECK(LieType(Family::D, 4).langlands_dual() == LieType(Family::D, 4));
  CHECK_THROWS_AS(LieType(Family::D, 1), Error);
  CHECK_THROWS_AS(LieType(Family::B, 0), Error);
  for (Family f : {Family::B, Family::C, Family::D})
    CHECK(LieType(f, 5).langlands_dual().langlands_dual() == LieType(f, 5));
}

TEST_CASE("transpose") {
  CHECK(transpose(Partition{}).empty());
  CHECK(transpose(Partition{4, 4, 2, 2}) == Partition{4, 4, 2, 2});
  CHECK(transpose(Partition{9, 7, 5, 5, 3, 2, 2, 2, 2}) == Partition{9, 9, 5, 4, 4, 2, 2, 1, 1});
}

TEST_CASE("transpose is an involution and matches the grid count, sizes up to 20") {
  int seen = 0;
  for (int n = 0; n <= 20; ++n)
    for (const Partition& p : partitions_of(n)) {
      REQUIRE(transpose(transpose(p)) == p);
      REQUIRE(transpose(p) == oracle::transpose_grid(p));
      ++seen;
    }
  CHECK(seen == 2714);
}

TEST_CASE("partitions_of order and counts") {
  const std::vector<Partition> p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == Partition{4});
  CHECK(p4[1] == Partition{3, 1});
  CHECK(p4.back() == Partition{1, 1, 1, 1});
  CHECK(partitions_of(10).size() == 42);
  CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("row-form orbit test") {
  CHECK(is_orbit_rows(LieType(Family::B, 6), Partition{5, 3, 3, 1, 1}));
  CHECK_FALSE(is_orbit_rows(LieType(Family::C, 2), Partition{3, 1}));
  CHECK(is_orbit_rows(LieType(Family::C, 6), Partition{4, 4, 2, 2}));
  CHECK_FALSE(is_orbit_rows(LieType(Family::B, 2), Partition{4, 1}));
  CHECK_FALSE(is_orbit_rows(LieType(Family::B, 2), Partition{3, 1}));
}

TEST_CASE("collapse") {
  CHECK(collapse(LieType(Family::B, 6), Partition{5, 4, 2, 2}) == Partition{5, 3, 3, 1, 1});
  CHECK(collapse(LieType(Family::B, 6), Partition{5, 3, 3, 1, 1}) == Partition{5, 3, 3, 1, 1});
  CHECK(collapse(LieType(Family::C, 2), Partition{3, 1}) == Partition{2, 2});
  CHECK_THROWS_AS(collapse(LieType(Family::C, 2), Partition{3}), Error);
}

TEST_CASE("collapse equals the brute-force dominance maximum, ranks up to 6") {
  for (Family f : {Family::B, Family::C, Family::D})
    for (int n = f == Family::D ? 2 : 1; n <= 6; ++n) {
      const LieType t(f, n);
      for (const Partition& p : partitions_of(t.dim())) {
        const auto expect = oracle::collapse(t, p);
        REQUIRE(expect.has_value());
        const Partition got = collapse(t, p);
        INFO(t.name(), " ", format_rows(p));
        REQUIRE(got == *expect);
        REQUIRE(collapse(t, got) == got);
        REQUIRE(dominance_leq(got, p));
      }
    }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
  CHECK(dominance_leq(Partition{5, 3, 3, 1, 1}, Partition{5, 4, 2, 2}));
  CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}), Error);
  for (int n = 1; n <= 9; ++n)
    for (const Partition& a : partitions_of(n))
      for (const Partition& b : partitions_of(n)) REQUIRE(dominance_leq(a, b) == oracle::dominated(a, b));
}

TEST_CASE("very even") {
  CHECK(is_very_even(LieType(Family::D, 4), Partition{4, 4}));
  CHECK_FALSE(is_very_even(LieType(Family::D, 4), Partition{5, 3}));
  CHECK_FALSE(is_very_even(LieType(Family::B, 6), Partition{4, 4, 2, 2, 1}));
  CHECK(is_very_even(LieType(Family::D, 6), Partition{4, 4, 2, 2}));
  CHECK_FALSE(is_very_even(LieType(Family::D, 6), Partition{4, 4, 2, 1, 1}));
}

TEST_CASE("text forms") {
  CHECK(format_rows(Partition{9, 7, 5}) == "[9,7,5]");
  CHECK(format_cols({9, 7, 0}) == "(9,7,0)");
  CHECK(parse_partition("9,7,5").partition == Partition{9, 7, 5});
  CHECK(parse_partition("[9,7,5]").partition == Partition{9, 7, 5});
  const ParsedPartition c = parse_partition("cols:(9,7,5,0)");
  CHECK(c.columns);
  CHECK(c.partition == Partition{9, 7, 5});
  CHECK_THROWS_AS(parse_partition("9,x"), Error);
  CHECK_THROWS_AS(parse_partition("1,3"), Error);
  CHECK(parse_family("D") == Family::D);
  CHECK_THROWS_AS(parse_family("E"), Error);
}
