#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "support/oracles.hpp"
#include "symdisc/errors.hpp"
#include "symdisc/strata.hpp"

using namespace symdisc;

TEST_CASE("multiplicity vector invariants") {
  const MultiplicityVector w({2, 1, 0, 0});
  CHECK(w.n() == 4);
  CHECK(w.entry(1) == 2);
  CHECK(w.entry(2) == 1);
  CHECK(w.group_count() == 3);
  CHECK(w.is_proper());
  CHECK(w.to_string() == "(2,1,0,0)");

  CHECK(!MultiplicityVector::all_simple(3).is_proper());
  CHECK(MultiplicityVector::one_pair(4) == MultiplicityVector({2, 1, 0, 0}));
  CHECK(MultiplicityVector::one_pair(2) == MultiplicityVector({0, 1}));

  CHECK_THROWS_AS(MultiplicityVector({1, 1}), OutOfRangeError);  // 1+2 != 2
  CHECK_THROWS_AS(MultiplicityVector({-1, 0}), OutOfRangeError);
  CHECK_THROWS_AS(MultiplicityVector({}), OutOfRangeError);
}

TEST_CASE("set partition canonical form") {
  const SetPartition p(4, {{3, 1}, {0}, {2}});
  CHECK(p.block_count() == 3);
  CHECK(p.blocks()[0] == std::vector<int>{0});
  CHECK(p.blocks()[1] == std::vector<int>{1, 3});
  CHECK(p.block_of(3) == 1);
  CHECK(p.block_of(2) == 2);
  CHECK(p.type() == MultiplicityVector({2, 1, 0, 0}));
  CHECK(p.to_string() == "{1}{2,4}{3}");

  CHECK_THROWS_AS(SetPartition(3, {{0, 1}}), OutOfRangeError);         // misses 2
  CHECK_THROWS_AS(SetPartition(3, {{0, 1}, {1, 2}}), OutOfRangeError); // overlap
  CHECK_THROWS_AS(SetPartition(2, {{0, 2}}), OutOfRangeError);        // range
}

TEST_CASE("stratum table for dimension four") {
  const auto ws = enumerate_multiplicity_vectors(4);
  REQUIRE(ws.size() == 4);
  CHECK(ws[0] == MultiplicityVector({2, 1, 0, 0}));
  CHECK(ws[1] == MultiplicityVector({0, 2, 0, 0}));
  CHECK(ws[2] == MultiplicityVector({1, 0, 1, 0}));
  CHECK(ws[3] == MultiplicityVector({0, 0, 0, 1}));

  CHECK(stratum_codim(ws[0]) == 2);
  CHECK(stratum_codim(ws[1]) == 4);
  CHECK(stratum_codim(ws[2]) == 5);
  CHECK(stratum_codim(ws[3]) == 9);

  CHECK(count_planes(ws[0]) == 6);
  CHECK(count_planes(ws[1]) == 3);
  CHECK(count_planes(ws[2]) == 4);
  CHECK(count_planes(ws[3]) == 1);
  for (const auto& w : ws) CHECK(eddeg(w) == count_planes(w));

  const auto all = enumerate_multiplicity_vectors(4, false);
  REQUIRE(all.size() == 5);
  CHECK(all[0] == MultiplicityVector::all_simple(4));
}

TEST_CASE("pair stratum has codimension two") {
  for (int n = 2; n <= 12; ++n) {
    CHECK(stratum_codim(MultiplicityVector::one_pair(n)) == 2);
    CHECK(count_planes(MultiplicityVector::one_pair(n)) ==
          mpz_class(n) * (n - 1) / 2);
  }
}

TEST_CASE("partition counts close up to Bell numbers") {
  const std::vector<long> bell = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (int n = 0; n <= 10; ++n) CHECK(bell_number(n) == bell[static_cast<size_t>(n)]);

  for (int n = 1; n <= 10; ++n) {
    mpz_class total = 0;
    for (const auto& w : enumerate_multiplicity_vectors(n, false)) {
      total += count_planes(w);
    }
    CHECK(total == bell_number(n));
  }
}

TEST_CASE("type-restricted partition enumeration matches the count") {
  for (int n = 1; n <= 8; ++n) {
    const auto every = testing::all_set_partitions(n);
    CHECK(mpz_class(every.size()) == bell_number(n));

    std::map<std::vector<int>, long> by_type;
    for (const auto& p : every) ++by_type[p.type().counts()];

    for (const auto& w : enumerate_multiplicity_vectors(n, false)) {
      const auto list = enumerate_partitions_of_type(w);
      CHECK(mpz_class(list.size()) == count_planes(w));
      CHECK(by_type[w.counts()] == static_cast<long>(list.size()));
      std::set<std::string> seen;
      for (const auto& p : list) {
        CHECK(p.type() == w);
        seen.insert(p.to_string());
      }
      CHECK(seen.size() == list.size());  // all distinct
    }
  }
}

TEST_CASE("multiplicity detection from sorted values") {
  const std::vector<double> v = {5.0, 5.0 - 1e-12, 2.0, 1.0, 1.0 + 0.0};
  // not sorted descending strictly: fix order
  const std::vector<double> sorted = {5.0, 5.0 - 1e-12, 2.0, 1.0, 1.0};
  const auto p = detect_multiplicities(sorted);
  CHECK(p.block_count() == 3);
  CHECK(p.blocks()[0] == std::vector<int>{0, 1});
  CHECK(p.blocks()[1] == std::vector<int>{2});
  CHECK(p.blocks()[2] == std::vector<int>{3, 4});

  const std::vector<double> distinct = {3.0, 2.0, 1.0};
  CHECK(detect_multiplicities(distinct).block_count() == 3);

  const std::vector<double> coarse = {1.0, 0.9, 0.8};
  CHECK(detect_multiplicities(coarse, 0.15).block_count() == 1);
}
