#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "onelie/search.hpp"
#include "onelie/strategies.hpp"
#include "onelie/verifier.hpp"
#include "test_util.hpp"

using namespace onelie;

namespace {

std::vector<int> random_perm(std::mt19937_64& eng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), eng);
  return p;
}

}  // namespace

TEST_CASE("relabeling families") {
  Universe u(3);
  MultiFamily f(u, {{Query::from_elements({1, 2}, u), 2}, {Query::from_elements({3}, u), 1}});
  MultiFamily g = permute_family(f, {2, 3, 1});
  REQUIRE(g.entries().size() == 2);
  CHECK(g.entries()[0].query.elements() == std::vector<int>{2, 3});
  CHECK(g.entries()[0].multiplicity == 2);
  CHECK(g.entries()[1].query.elements() == std::vector<int>{1});

  CHECK_THROWS_AS(permute_family(f, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(permute_family(f, {1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(permute_family(f, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937_64 eng(7301);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(eng() % 4);
    MultiFamily f = testutil::random_family(eng, n, 4);
    MultiFamily c = canonical_form(f);
    CHECK(is_canonical(c));
    CHECK(canonical_form(c) == c);
    CHECK(canonical_form(permute_family(f, random_perm(eng, n))) == c);
    // the canonical form is itself a relabeling: same size and query sizes
    CHECK(c.m() == f.m());
  }
  CHECK_THROWS_AS(canonical_form(singleton_family_no_lie(9)), CapacityError);
}

TEST_CASE("canonical enumeration counts and completeness") {
  std::vector<MultiFamily> level;
  enumerate_canonical_families(2, 2, [&](const MultiFamily& f) { level.push_back(f); });
  // the four shapes on two elements with two questions, up to relabeling:
  // {1}x2, {1,2}x2, {1}+{2}, {1}+{1,2}
  REQUIRE(level.size() == 4);
  for (const auto& f : level) {
    CHECK(is_canonical(f));
    CHECK(f.m() == 2);
  }

  int empty_count = 0;
  enumerate_canonical_families(0, 0, [&](const MultiFamily&) { ++empty_count; });
  CHECK(empty_count == 1);

  CHECK_THROWS_AS(enumerate_canonical_families(5, 3, [](const MultiFamily&) {}), CapacityError);

  // every family's canonical form shows up in its level
  std::mt19937_64 eng(7302);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(eng() % 3);
    MultiFamily f = testutil::random_family(eng, n, 3);
    MultiFamily c = canonical_form(f);
    bool found = false;
    enumerate_canonical_families(n, f.m(), [&](const MultiFamily& g) {
      if (g == c) found = true;
    });
    CHECK(found);
  }
}

TEST_CASE("minimum search on one element") {
  SearchReport rep = min_family_size(1);
  REQUIRE(rep.min_size.has_value());
  CHECK(*rep.min_size == 3);
  REQUIRE(rep.witnesses.size() == 1);
  Universe u(1);
  CHECK(rep.witnesses[0] == MultiFamily(u, {{Query::from_elements({1}, u), 3}}));
  CHECK(rep.solve_checks > 0);
}

TEST_CASE("minimum search on two elements") {
  SearchReport rep = min_family_size(2);
  REQUIRE(rep.min_size.has_value());
  CHECK(*rep.min_size == 5);
  REQUIRE(!rep.witnesses.empty());
  MultiFamily expected = canonical_form(optimal_one_lie_family(2));
  CHECK(std::count(rep.witnesses.begin(), rep.witnesses.end(), expected) == 1);
  for (const auto& w : rep.witnesses) {
    CHECK(w.m() == 5);
    CHECK(is_canonical(w));
    CHECK(solves(w, 1).ok);
    CHECK(testutil::flat_solves(w, 1).ok);  // independent route
    CHECK(check_coverage(w).ok);
    CHECK(structural_checks(w).has_repeated_singleton);
  }
}

TEST_CASE("search results do not depend on pruning or thread count") {
  for (int n = 1; n <= 2; ++n) {
    SearchReport pruned = min_family_size(n, {.max_m = 0, .prune = true, .threads = 1});
    SearchReport plain = min_family_size(n, {.max_m = 0, .prune = false, .threads = 1});
    SearchReport pooled = min_family_size(n, {.max_m = 0, .prune = true, .threads = 3});
    CHECK(pruned.min_size == plain.min_size);
    CHECK(pruned.witnesses == plain.witnesses);
    CHECK(pruned.witnesses == pooled.witnesses);
    CHECK(pruned.families_examined == plain.families_examined);
    CHECK(plain.pruned_by.at("coverage") == 0);
    CHECK(pruned.solve_checks < plain.solve_checks);
  }
}

TEST_CASE("search runs are repeatable") {
  SearchReport a = min_family_size(2);
  SearchReport b = min_family_size(2);
  CHECK(a.min_size == b.min_size);
  CHECK(a.witnesses == b.witnesses);
  CHECK(a.families_examined == b.families_examined);
  CHECK(a.pruned_by == b.pruned_by);
}

TEST_CASE("search caps and edge cases") {
  SearchReport rep = min_family_size(0);
  REQUIRE(rep.min_size.has_value());
  CHECK(*rep.min_size == 0);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].m() == 0);

  SearchReport capped = min_family_size(2, {.max_m = 3});
  CHECK(!capped.min_size.has_value());
  CHECK(capped.witnesses.empty());
  CHECK(capped.families_examined > 0);

  CHECK_THROWS_AS(min_family_size(5), CapacityError);
  CHECK_THROWS_AS(min_family_size(-1), std::invalid_argument);
}

TEST_CASE("all minimal families") {
  auto ones = all_minimal_families(1);
  REQUIRE(ones.size() == 1);
  CHECK(ones[0].m() == 3);

  auto twos = all_minimal_families(2);
  REQUIRE(twos.size() == 2);
  CHECK(std::count(twos.begin(), twos.end(), canonical_form(optimal_one_lie_family(2))) == 1);
  for (const auto& f : twos) {
    CHECK(f.m() == 5);
    CHECK(solves(f, 1).ok);
  }

  CHECK(all_minimal_families(3).size() == 18);

  CHECK_THROWS_AS(all_minimal_families(4), CapacityError);
}
