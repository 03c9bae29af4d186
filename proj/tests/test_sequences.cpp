#include <doctest.h>

#include "oracles.hpp"
#include "stacksort/errors.hpp"
#include "stacksort/sequences.hpp"
#include "stacksort/vhc.hpp"

using namespace stacksort;

namespace {
std::vector<mpz_class> Z(std::initializer_list<long> values) {
  std::vector<mpz_class> out;
  for (long v : values) out.emplace_back(v);
  return out;
}
}  // namespace

TEST_CASE("Catalan and Narayana numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  CHECK(narayana(3, 2) == 3);
  CHECK_THROWS_AS(narayana(3, 0), std::out_of_range);
  CHECK_THROWS_AS(narayana(3, 4), std::out_of_range);
  for (int n = 1; n <= 12; ++n) {
    mpz_class sum = 0;
    for (int k = 1; k <= n; ++k) sum += narayana(n, k);
    CHECK(sum == catalan(n));
  }
}

TEST_CASE("Lassalle numbers") {
  const auto a = lassalle(10);
  REQUIRE(a.size() == 10);
  CHECK(std::vector<mpz_class>(a.begin(), a.begin() + 6) == Z({1, 1, 5, 56, 1092, 32670}));
  CHECK(a[6] == 1387815);
  CHECK(a[9] == mpz_class("548129834616"));
}

TEST_CASE("free Poisson moments and cumulants at -1") {
  const auto m = free_poisson_moments(3, -1);
  CHECK(m[1] == -1);
  CHECK(m[2] == 0);
  CHECK(m[3] == 1);
  const auto k = classical_cumulants(4, -1);
  CHECK(-k[2] == 1);
  CHECK(-k[3] == 1);
  CHECK(-k[4] == 2);
}

TEST_CASE("cumulants match an independent series logarithm") {
  for (const mpq_class& lambda : {mpq_class(-1), mpq_class(1), mpq_class(2), mpq_class(-1, 2), mpq_class(3, 7)}) {
    const auto m = free_poisson_moments(12, lambda);
    const auto expected = oracle::cumulants(std::vector<mpq_class>(m.coefficients().begin(), m.coefficients().end()));
    const auto k = classical_cumulants(12, lambda);
    for (int n = 1; n <= 12; ++n) CHECK(k[n] == expected[n - 1]);
  }
}

TEST_CASE("cumulants through hook configurations") {
  CHECK(cumulant_via_vhc(2, -1) == -1);
  CHECK(cumulant_via_vhc(4, -1) == -2);
  for (int n = 1; n <= 7; ++n) {
    for (const mpq_class& lambda : {mpq_class(-1), mpq_class(2), mpq_class(-1, 2)}) {
      CHECK(cumulant_via_vhc(n, lambda) == classical_cumulants(n, lambda)[n]);
    }
  }
}

TEST_CASE("hook configuration counts equal -k_n(-1), n <= 9") {
  const auto k = classical_cumulants(9, -1);
  const auto expected = Z({1, 1, 1, 2, 6, 22, 99, 520, 3126});
  for (int n = 1; n <= 9; ++n) {
    CHECK(-k[n] == expected[n - 1]);
    CHECK(vhc_census(n - 1).configurations == expected[n - 1].get_ui());
  }
}

TEST_CASE("D table") {
  const auto d = d_table(8);
  CHECK(d.at(3, 3) == 1);
  CHECK(d.at(1, 3) == 1);
  CHECK(d.at(0, 3) == 0);
  CHECK(d.at(2, 3) == 0);
  CHECK(d.at_least(0, 3) == 2);
  for (int n = 1; n <= 8; ++n) {
    CHECK(d.at(0, n) == 0);
    const auto census = vhc_census(n);
    for (int m = 0; m <= n; ++m) {
      const auto count = m < static_cast<int>(census.by_tail_length.size()) ? census.by_tail_length[m] : 0;
      CHECK(d.at(m, n) == count);
    }
  }
}

TEST_CASE("E table") {
  const auto e = e_table(17);
  CHECK(e.at(1, 3) == 1);
  CHECK(e.at_least(0, 5) == 5);
  for (int m = 0; m <= 4; ++m) CHECK(e.at(m, 4) == 0);
  const auto a = lassalle(9);
  for (int k = 0; k <= 8; ++k) CHECK(e.at_least(0, 2 * k + 1) == a[k]);
  for (int k = 0; k <= 3; ++k) {
    std::vector<mpz_class> by_tail(2 * k + 2, 0);
    for (const auto& pi : enumerate_uniquely_sorted(k)) by_tail[tail_length(pi)] += 1;
    for (int m = 0; m <= 2 * k + 1; ++m) CHECK(e.at(m, 2 * k + 1) == by_tail[m]);
  }
  CHECK_THROWS_AS(e.at(3, 18), std::out_of_range);
}

TEST_CASE("refined Lassalle sequences") {
  CHECK(refined_lassalle_first_entry(0) == Z({1}));
  CHECK(refined_lassalle_first_entry(1) == Z({0, 1, 0}));
  CHECK(refined_lassalle_eye(1) == Z({0, 1, 0}));
  CHECK(refined_lassalle_first_entry(3) == Z({0, 5, 13, 20, 13, 5, 0}));
  CHECK_THROWS_AS(refined_lassalle_first_entry(6), BoundExceeded);
  const auto a = lassalle(6);
  for (int k = 1; k <= 4; ++k) {
    const auto first = refined_lassalle_first_entry(k);
    CHECK(first == refined_lassalle_eye(k));
    mpz_class sum = 0;
    for (const auto& x : first) sum += x;
    CHECK(sum == a[k]);
  }
}

TEST_CASE("log-concavity") {
  CHECK(is_log_concave(Z({0, 1, 0})));
  CHECK_FALSE(is_log_concave(Z({1, 3, 1, 3})));
  CHECK(is_log_concave(Z({})));
  for (int k = 0; k <= 4; ++k) CHECK(is_log_concave(refined_lassalle_first_entry(k)));
}

TEST_CASE("permutations with fertility 2") {
  CHECK(doubly_sorted_count(1) == 1);
  CHECK(doubly_sorted_count(2) == 3);
  CHECK(doubly_sorted_count(3) == 31);
  for (int m = 1; m <= 4; ++m) {
    long count = 0;
    for (const auto& [word, f] : oracle::fertilities(2 * m)) count += f == 2;
    CHECK(doubly_sorted_count(m) == count);
  }
  for (int n = 1; n <= 7; n += 2) {
    for (const auto& [word, f] : oracle::fertilities(n)) CHECK(f != 2);
  }
  CHECK_THROWS_AS(doubly_sorted_count(5), BoundExceeded);
}

TEST_CASE("t-stack-sortable counts") {
  CHECK(w_count(1, 3) == 5);
  CHECK(w_count(2, 4) == 22);
  CHECK(two_stack_sortable_closed_form(4) == 22);
  for (int n = 1; n <= 7; ++n) {
    CHECK(w_count(1, n) == catalan(n));
    CHECK(w_count(2, n) == two_stack_sortable_closed_form(n));
    long sortable = 0;
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    const auto identity = word;
    do {
      sortable += oracle::stack_sort(oracle::stack_sort(word)) == identity;
    } while (std::next_permutation(word.begin(), word.end()));
    CHECK(w_count(2, n) == sortable);
  }
}
