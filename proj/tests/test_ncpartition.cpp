#include "doctest.h"
#include "ncfree/ncpartition.hpp"
#include "ncfree/oracle.hpp"

using namespace ncfree;

TEST_CASE("canonical form and text round trip") {
  Partition p(5, {{5, 2, 1}, {4, 3}});
  CHECK(p.to_string() == "{1,2,5}{3,4}");
  CHECK(Partition::parse("{3,4}{1,2,5}") == p);
  CHECK(p.block_index(5) == 0);
  CHECK(p.block_index(3) == 1);
  CHECK_THROWS_AS(Partition(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("{1,2"), std::invalid_argument);
}

TEST_CASE("crossing detection") {
  CHECK_FALSE(is_noncrossing(Partition::parse("{1,3}{2,4}")));
  CHECK(is_noncrossing(Partition::parse("{1,2,5}{3,4}")));
  for (int n = 1; n <= 6; ++n) CHECK(is_noncrossing(Partition::one(n)));
}

TEST_CASE("NC(n) has Catalan size and matches the all-partitions filter") {
  const int catalan[] = {1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    auto fast = enumerate_nc(n);
    CHECK(static_cast<int>(fast.size()) == catalan[n - 1]);
    CHECK(std::is_sorted(fast.begin(), fast.end()));
    CHECK(fast == oracle::nc_by_filter(n));
  }
  CHECK(enumerate_nc(1) == std::vector<Partition>{Partition::one(1)});
  CHECK(enumerate_nc(12).size() == 208012);
  CHECK_THROWS_AS(enumerate_nc(13), std::out_of_range);
  CHECK_THROWS_AS(enumerate_nc(0), std::out_of_range);
}

TEST_CASE("permutation of a partition") {
  auto perm = perm_of(Partition::parse("{1,2,5}{3,4}"));
  CHECK(perm.images() == std::vector<int>{2, 5, 4, 3, 1});
  CHECK(perm_of(Partition::singletons(4)) == PartitionPermutation::identity(4));
  CHECK(perm_of(Partition::one(4)) == PartitionPermutation::forward_cycle(4));
  CHECK_THROWS_AS(perm_of(Partition::parse("{1,3}{2,4}")), std::invalid_argument);
}

TEST_CASE("Kreweras complement") {
  CHECK(kreweras(Partition::parse("{1,2,5}{3,4}")) == Partition::parse("{1}{2,4}{3}{5}"));
  for (int n = 1; n <= 6; ++n) {
    CHECK(kreweras(Partition::one(n)) == Partition::singletons(n));
    CHECK(kreweras(Partition::singletons(n)) == Partition::one(n));
  }
  CHECK_THROWS_AS(kreweras(Partition::parse("{1,3}{2,4}")), std::invalid_argument);
}

TEST_CASE("perm_pi composed with perm_Kr(pi) is the forward cycle") {
  for (int n = 1; n <= 7; ++n) {
    auto gamma = PartitionPermutation::forward_cycle(n);
    for (const auto& p : enumerate_nc(n)) {
      Partition k = kreweras(p);
      CHECK(is_noncrossing(k));
      CHECK(perm_of(p) * perm_of(k) == gamma);
    }
  }
}

TEST_CASE("fast complement agrees with exhaustive search") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : enumerate_nc(n)) CHECK(kreweras(p) == oracle::kreweras_by_search(p));
  }
}

TEST_CASE("complement reverses refinement") {
  for (int n = 1; n <= 6; ++n) {
    const auto& table = nc_table(n);
    for (const auto& a : table) {
      for (const auto& b : table) {
        if (leq(a.pi, b.pi)) CHECK(leq(b.kr, a.kr));
      }
    }
  }
}

TEST_CASE("double complement is conjugation by the forward cycle") {
  for (int n = 1; n <= 7; ++n) {
    auto gamma = PartitionPermutation::forward_cycle(n);
    for (const auto& p : enumerate_nc(n)) {
      CHECK(perm_of(kreweras(kreweras(p))) == gamma.inverse() * perm_of(p) * gamma);
    }
  }
}

TEST_CASE("refinement order") {
  auto q = Partition::parse("{1,2,5}{3,4}");
  CHECK(leq(Partition::singletons(5), q));
  CHECK(leq(q, Partition::one(5)));
  CHECK_FALSE(leq(Partition::parse("{1,2}{3}"), Partition::parse("{1,3}{2}")));
  CHECK_THROWS_AS(leq(Partition::one(2), Partition::one(3)), std::invalid_argument);
}

TEST_CASE("insertion of one partition into another") {
  auto p = Partition::parse("{1}{2,3}");
  auto q = Partition::parse("{1,2}");
  CHECK(insert(p, q, 0) == Partition::parse("{1}{2,3}{4,5}"));
  CHECK(insert(p, q, 1) == Partition::parse("{1,5}{2}{3,4}"));
  CHECK(insert(p, q, 2) == Partition::parse("{1,2}{3}{4,5}"));
  CHECK_THROWS_AS(insert(p, q, 3), std::out_of_range);
}

TEST_CASE("restriction relabels") {
  auto p = Partition::parse("{1,2,5}{3,4}");
  CHECK(restrict_to(p, {1, 2, 5}) == Partition::one(3));
  CHECK(restrict_to(p, {2, 3, 5}) == Partition::parse("{1,3}{2}"));
}

TEST_CASE("interval blocks") {
  CHECK(interval_block(Partition::parse("{1,2,5}{3,4}")) == std::vector<int>{3, 4});
  CHECK(interval_block(Partition::singletons(4)) == std::vector<int>{1});
  CHECK(last_interval_block(Partition::singletons(4)) == std::vector<int>{4});
  CHECK(interval_block(Partition::one(4)) == std::vector<int>{1, 2, 3, 4});
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      for (const auto& b : {interval_block(p), last_interval_block(p)}) CHECK(b.back() - b.front() + 1 == static_cast<int>(b.size()));
    }
  }
}

TEST_CASE("oracle partition generators") {
  CHECK(oracle::all_set_partitions(3).size() == 5);
  CHECK(oracle::all_set_partitions(4).size() == 15);
  CHECK(oracle::all_set_partitions(9).size() == 21147);
  CHECK(oracle::nc_by_filter(4).size() == 14);
  CHECK_THROWS_AS(oracle::all_set_partitions(10), std::out_of_range);
  for (const auto& p : oracle::all_set_partitions(6)) CHECK(oracle::naive_is_noncrossing(p) == is_noncrossing(p));
}
