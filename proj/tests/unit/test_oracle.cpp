// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/oracle.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cyclepack;
using namespace cyclepack::testing;

TEST_CASE("oracle examples") {
  auto two = max_cycle_packing_bruteforce(disjoint_cycles(2, 3));
  CHECK(two.k_max == 2);
  CHECK(verify_packing(disjoint_cycles(2, 3), two.packing, 2));
  auto c5 = max_cycle_packing_bruteforce(cycle_graph(5));
  CHECK(c5.k_max == 1);
  CHECK(c5.packing.front().size() == 5);
  auto k6 = max_cycle_packing_bruteforce(complete_graph(6));
  CHECK(k6.k_max == 2);
  CHECK(verify_packing(complete_graph(6), k6.packing, 2));
  CHECK(max_cycle_packing_bruteforce(path_graph(7)).k_max == 0);
  CHECK(max_cycle_packing_bruteforce(MultiGraph()).k_max == 0);
  auto loops = max_cycle_packing_bruteforce(make_graph(3, {{0, 0, 1}, {1, 2, 2}, {0, 1, 1}}));
  CHECK(loops.k_max == 2);
}

TEST_CASE("oracle caps fail loudly") {
  CHECK_THROWS(max_cycle_packing_bruteforce(complete_graph(13)));
  CHECK_NOTHROW(max_cycle_packing_bruteforce(complete_graph(13), 13));
  CHECK_THROWS(girth_bruteforce(path_graph(61)));
}

TEST_CASE("oracle agrees with the branching reference") {
  for (std::uint64_t i = 0; i < 600; ++i) {
    MultiGraph g = corpus_graph(i, 10);
    auto r = max_cycle_packing_bruteforce(g);
    CHECK(r.k_max == reference_kmax(g));
    CHECK(verify_packing(g, r.packing, r.k_max));
    CHECK(static_cast<int>(r.packing.size()) == r.k_max);
  }
}

TEST_CASE("girth oracle examples") {
  CHECK_FALSE(girth_bruteforce(path_graph(8)).has_value());
  CHECK(girth_bruteforce(petersen()) == 5);
  CHECK(girth_bruteforce(make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 2, 1}})) == 1);
  CHECK(girth_bruteforce(make_graph(3, {{0, 1, 2}, {1, 2, 1}})) == 2);
  CHECK(girth_bruteforce(complete_graph(5)) == 3);
  CHECK(girth_bruteforce(cycle_graph(11)) == 11);
}

TEST_CASE("girth oracle agrees with cycle enumeration") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    MultiGraph g = corpus_graph(i, 10);
    CHECK(girth_bruteforce(g) == reference_girth(g));
  }
}
