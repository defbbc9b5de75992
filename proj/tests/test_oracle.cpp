#include "doctest.h"
#include "ncfree/oracle.hpp"

using namespace ncfree;

TEST_CASE("complement search") {
  CHECK(oracle::kreweras_by_search(Partition::parse("{1,2,5}{3,4}")) == Partition::parse("{1}{2,4}{3}{5}"));
  CHECK(oracle::kreweras_by_search(Partition::one(5)) == Partition::singletons(5));
  CHECK_THROWS_AS(oracle::kreweras_by_search(Partition::one(9)), std::out_of_range);
}

TEST_CASE("triangular solve on zero data") {
  std::map<Word, Rational, ShortLex> zeros{{{1}, 0}, {{2}, 0}, {{1, 2}, 0}};
  for (const auto& [w, k] : oracle::cumulants_by_inversion(zeros)) CHECK(k == 0);
  std::map<Word, Rational, ShortLex> gap{{{1, 2}, 1}};
  CHECK_THROWS_AS(oracle::cumulants_by_inversion(gap), std::invalid_argument);
}

TEST_CASE("report equality is exact") {
  CHECK(oracle::make_report("x", "in", "1/2", "1/2").pass);
  CHECK_FALSE(oracle::make_report("x", "in", "1/2", "2/4").pass);
  CHECK(oracle::make_report("x", "in", "a", "b").to_tsv() == "x\tin\ta\tb\tFAIL");
}

TEST_CASE("every oracle suite passes") {
  auto reports = oracle::run_suite("all", 4);
  CHECK(reports.size() > 20);
  for (const auto& r : reports) {
    INFO(r.to_tsv());
    CHECK(r.pass);
  }
  CHECK_THROWS_AS(oracle::run_suite("nope", 4), std::invalid_argument);
}
