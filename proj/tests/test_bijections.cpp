#include <doctest.h>

#include <set>

#include "stacksort/bijections.hpp"
#include "stacksort/sequences.hpp"

using namespace stacksort;

namespace {
Permutation P(const char* text) { return parse_permutation(text); }
SetPartition R(const char* text) { return parse_partition(text); }
const char* kSample = "2 7 3 5 9 10 11 4 8 1 6 12 13 14 15 16 ; 2>7 7>15 9>13";
}  // namespace

TEST_CASE("phi on the sample configuration") {
  const auto config = parse_configuration(kSample);
  const auto image = phi(config);
  CHECK(image.partition == R("1,6,12,13|2,7,16,17|3,5,9,10,11|4,8,14,15"));
  const int blue = image.partition.block_of(17);
  CHECK(image.hatted_blocks[blue] == std::vector<int>{1, 2, 16});
  CHECK(image.hatted_blocks[image.partition.block_of(3)] == std::vector<int>{3, 4, 5, 6, 7});
  CHECK(image.orientation.arcs.size() == 6);
  CHECK(sources(crossing_graph(image.partition), image.orientation) == std::vector<int>{blue});
  CHECK(phi_inverse(image) == config);
  CHECK(eta(config) == R("1,2,16|3,4,5,6,7|8,9,14,15|10,11,12,13"));
}

TEST_CASE("phi on trivial configurations") {
  const auto empty = make_configuration(P("1 2 3"), {});
  const auto image = phi(empty);
  CHECK(image.partition == R("1,2,3,4"));
  CHECK(image.orientation.arcs.empty());
  CHECK(phi_inverse(R("1,2,3,4"), Orientation{}) == empty);
  CHECK(eta(empty) == R("1,2,3"));
  CHECK(phi_inverse(R("1"), Orientation{}) == make_configuration(Permutation{}, {}));
}

TEST_CASE("phi rejects bad input") {
  CHECK_THROWS_AS(phi(make_configuration(P("3 2 4"), {{2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(phi_inverse(R("1,2|3,4"), Orientation{}), std::invalid_argument);
  CHECK_THROWS_AS(phi_inverse(R("1,3|2,4"), Orientation{{{0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(phi_inverse(R("1,3|2,4"), Orientation{}), std::invalid_argument);
  CHECK_THROWS_AS(phi_restricted(make_configuration(P("1 2"), {})), std::invalid_argument);
}

TEST_CASE("restricted map on matchings") {
  const auto small = phi_restricted(unique_configuration(P("2 1 3")));
  CHECK(small.partition == R("1,3|2,4"));
  CHECK(small.orientation.arcs == std::vector<std::pair<int, int>>{{1, 0}});
  const auto one = phi_restricted(unique_configuration(P("1")));
  CHECK(one.partition == R("1,2"));
  CHECK(one.orientation.arcs.empty());
  CHECK(first_entry_block_property(P("2 1 3")));
  CHECK(first_entry_block_property(P("1")));
  for (const auto& pi : enumerate_uniquely_sorted(3)) CHECK(first_entry_block_property(pi));
}

TEST_CASE("phi is a bijection onto P-tilde, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    std::set<OrientedPartition> images;
    bool round_trip = true;
    for (const auto& config : all_vhcs(n - 1)) {
      const auto image = phi(config);
      images.insert(image.pair());
      if (phi_inverse(image) != config) round_trip = false;
    }
    CHECK(round_trip);
    CHECK(images.size() == all_vhcs(n - 1).size());
    const auto expected = enumerate_P_tilde(n);
    CHECK(std::vector<OrientedPartition>(images.begin(), images.end()) == expected);
    CHECK(mpz_class(static_cast<unsigned long>(images.size())) == -classical_cumulants(n, -1)[n]);
  }
}

TEST_CASE("phi_inverse then phi is the identity on P-tilde, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& pair : enumerate_P_tilde(n)) CHECK(phi(phi_inverse(pair)).pair() == pair);
  }
}

TEST_CASE("eta is noncrossing on every configuration, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& config : all_vhcs(n)) CHECK(is_noncrossing(eta(config)));
  }
}

TEST_CASE("restricted map hits every matching pair, k <= 4") {
  for (int k = 0; k <= 4; ++k) {
    std::set<OrientedPartition> images;
    for (const auto& pi : enumerate_uniquely_sorted(k)) images.insert(phi_restricted(unique_configuration(pi)).pair());
    const auto expected = enumerate_M_tilde(2 * k + 2);
    CHECK(std::vector<OrientedPartition>(images.begin(), images.end()) == expected);
  }
}

TEST_CASE("first-entry symmetry and eye distribution, k <= 4") {
  for (int k = 0; k <= 4; ++k) {
    std::vector<mpz_class> first(2 * k + 2, 0), eyes(2 * k + 2, 0);
    for (const auto& pi : enumerate_uniquely_sorted(k)) {
      first[pi.entry(1)] += 1;
      if (k >= 1) eyes[eye(pi) + 1] += 1;
    }
    for (int l = 1; l <= 2 * k + 1; ++l) {
      CHECK(first[l] == first[2 * k + 2 - l]);
      if (k >= 1) CHECK(eyes[l] == first[l]);
    }
    CHECK(std::vector<mpz_class>(first.begin() + 1, first.end()) == refined_lassalle_first_entry(k));
  }
}
