#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stacksort/errors.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/sweep.hpp"

using namespace stacksort;

namespace {
Permutation P(const char* text) { return parse_permutation(text); }
}  // namespace

TEST_CASE("construction rejects repeats and non-positive entries") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK(Permutation({9, 7}).max_entry() == 9);
  CHECK_FALSE(Permutation({9, 7}).is_normalized());
  CHECK(Permutation::identity(3) == P("1 2 3"));
  CHECK(Permutation{}.empty());
}

TEST_CASE("parse and print") {
  CHECK(P("3,1,4\t2") == Permutation{3, 1, 4, 2});
  CHECK(to_string(P("3 1 4 2")) == "3 1 4 2");
  CHECK_THROWS_AS(P("3 x 2"), std::invalid_argument);
  CHECK(P("").empty());
}

TEST_CASE("normalize") {
  CHECK(normalize(P("2 6 5 8 9")) == P("1 3 2 4 5"));
  CHECK(normalize(P("1 2 3")) == P("1 2 3"));
  CHECK(normalize(P("9 7")) == P("2 1"));
}

TEST_CASE("descents") {
  CHECK(descents(P("2 7 3 5 9 10 11 4 8 1 6 12 13 14 15 16")) == DescentSet{2, 7, 9});
  CHECK(descents(P("1 2 3 4")).empty());
  CHECK(descents(P("3 2 1")) == DescentSet{1, 2});
  CHECK(descents(Permutation{}).empty());
}

TEST_CASE("stack sort") {
  CHECK(stack_sort(P("3 1 4 2")) == P("1 3 2 4"));
  CHECK(stack_sort(P("1 2 3")) == P("1 2 3"));
  CHECK(stack_sort(P("2 6 3 5 7 4 1")) == P("2 3 5 6 1 4 7"));
  CHECK(stack_sort(Permutation{}).empty());
}

TEST_CASE("iterated stack sort") {
  CHECK(iterate_sort(P("3 1 4 2"), 2) == P("1 2 3 4"));
  CHECK(iterate_sort(P("3 1 4 2"), 0) == P("3 1 4 2"));
  CHECK(iterate_sort(P("3 2 1"), 2) == P("1 2 3"));
  CHECK_THROWS_AS(iterate_sort(P("1"), -1), std::invalid_argument);
}

TEST_CASE("brute-force preimages") {
  CHECK(preimages_bruteforce(P("1 2 3")) ==
        std::vector<Permutation>{P("1 2 3"), P("1 3 2"), P("2 1 3"), P("3 1 2"), P("3 2 1")});
  CHECK(preimages_bruteforce(P("2 1 3")) == std::vector<Permutation>{P("2 3 1")});
  CHECK(preimages_bruteforce(P("1 3 2")).empty());
  CHECK_THROWS_AS(preimages_bruteforce(Permutation::identity(10)), BoundExceeded);
  CHECK_THROWS_AS(preimages_bruteforce(P("2 5")), std::invalid_argument);
}

TEST_CASE("preimage counts match an independent sweep") {
  for (int n = 0; n <= 7; ++n) {
    const auto counts = preimage_counts(n);
    const auto expected = oracle::fertilities(n);
    REQUIRE(counts.size() == expected.size());
    for (const auto& [word, count] : expected) {
      CHECK(counts.at(Permutation(word)) == static_cast<std::uint64_t>(count));
    }
  }
}

TEST_CASE("tail length") {
  CHECK(tail_length(P("3 1 5 2 4 6 7 8")) == 3);
  CHECK(tail_length(P("2 6 5 8 9")) == 2);
  CHECK(tail_length(P("1 2 3 4")) == 4);
  CHECK(tail_length(Permutation{}) == 0);
}

TEST_CASE("sweeps visit S_n once, in order, for any job count") {
  for (unsigned jobs : {1u, 3u}) {
    SweepOptions options;
    options.jobs = jobs;
    int calls = 0;
    options.progress = [&](int, int) { ++calls; };
    const auto parts = sweep_by_first_entry<std::vector<Permutation>>(4, options, [](int first) {
      std::vector<Permutation> seen;
      for_each_permutation_starting_with(4, first, [&](const Permutation& p) { seen.push_back(p); });
      return seen;
    });
    std::vector<Permutation> all;
    for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    CHECK(all.size() == 24);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(calls == 4);
  }
  SweepOptions options;
  options.jobs = 2;
  CHECK_THROWS_AS(sweep_by_first_entry<int>(3, options,
                                            [](int first) -> int {
                                              if (first == 2) throw std::runtime_error("x");
                                              return first;
                                            }),
                  std::runtime_error);
}

TEST_CASE("properties on random permutations") {
  std::mt19937 rng(20190417);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<int> values(3 * n);
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng);
    values.resize(n);
    const Permutation pi(values);
    const Permutation sorted = stack_sort(pi);
    CHECK(sorted.size() == n);
    std::vector<int> a(values), b(sorted.entries().begin(), sorted.entries().end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(normalize(normalize(pi)) == normalize(pi));
    CHECK(normalize(stack_sort(pi)) == stack_sort(normalize(pi)));
    CHECK(Permutation(oracle::stack_sort(values)) == sorted);
  }
}

TEST_CASE("sorted permutations have positive tail length") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& [pi, count] : preimage_counts(n)) CHECK(tail_length(pi) >= 1);
  }
}
