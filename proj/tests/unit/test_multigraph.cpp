// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <numeric>
#include <random>

#include "cyclepack/multigraph.hpp"
#include "cyclepack/oracle.hpp"
#include "cyclepack/trace.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cyclepack;
using namespace cyclepack::testing;

namespace {

std::int64_t edge_total(const MultiGraph& g) {
  std::int64_t t = 0;
  for (const auto& e : g.edges()) t += e.multiplicity;
  return t;
}

void check_consistency(const MultiGraph& g) {
  for (VertexId v : g.vertices()) {
    int d = 2 * g.loops(v);
    for (auto [w, m] : g.adjacency(v)) {
      CHECK(m >= 1);
      CHECK(g.has_vertex(w));
      CHECK(g.adjacency(w).at(v) == m);
      d += m;
    }
    CHECK(g.degree(v) == d);
  }
  CHECK(g.num_edges() == edge_total(g));
}

}  // namespace

TEST_CASE("degree counts a loop twice") {
  MultiGraph g = make_graph(2, {{0, 0, 1}, {0, 1, 3}});
  CHECK(g.degree(0) == 5);
  CHECK(g.degree(1) == 3);
  CHECK(g.loops(0) == 1);
  CHECK(g.multiplicity(0, 1) == 3);
  CHECK(g.multiplicity(0, 0) == 1);
  CHECK(g.num_edges() == 4);
  CHECK_FALSE(g.is_simple());
}

TEST_CASE("adjacency stays symmetric under random edits") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 50; ++round) {
    MultiGraph g = random_multigraph(rng(), 8, 14, 15);
    for (int step = 0; step < 20; ++step) {
      auto vs = g.vertices();
      if (vs.size() < 2) break;
      VertexId u = vs[bounded_draw(rng, vs.size())];
      VertexId v = vs[bounded_draw(rng, vs.size())];
      switch (bounded_draw(rng, 4)) {
        case 0: g.add_edge(u, v, 1 + static_cast<int>(bounded_draw(rng, 2))); break;
        case 1:
          if (g.multiplicity(u, v) > 0) g.remove_edge(u, v);
          break;
        case 2: g.set_multiplicity(u, v, static_cast<int>(bounded_draw(rng, 3))); break;
        default: g.remove_vertex(u); break;
      }
      check_consistency(g);
    }
  }
}

TEST_CASE("removed ids are never reused") {
  MultiGraph g(3);
  g.remove_vertex(1);
  VertexId x = g.add_vertex();
  CHECK(x == 3);
  CHECK_FALSE(g.has_vertex(1));
  CHECK(g.num_vertices() == 3);
}

TEST_CASE("errors on bad edits") {
  MultiGraph g(2);
  CHECK_THROWS(g.add_edge(0, 5));
  CHECK_THROWS(g.remove_edge(0, 1));
  CHECK_THROWS(g.add_edge(0, 1, -1));
}

TEST_CASE("cycle validity") {
  MultiGraph g = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {2, 3, 2}, {3, 3, 1}});
  CHECK(is_valid_cycle(g, {0, 1, 2}));
  CHECK(is_valid_cycle(g, {2, 3}));
  CHECK(is_valid_cycle(g, {3}));
  CHECK_FALSE(is_valid_cycle(g, {0, 1}));
  CHECK_FALSE(is_valid_cycle(g, {0}));
  CHECK_FALSE(is_valid_cycle(g, {}));
  CHECK_FALSE(is_valid_cycle(g, {0, 1, 2, 0}));
  CHECK_FALSE(is_valid_cycle(g, {0, 1, 3}));
  CHECK_FALSE(cycle_problem(g, {0, 1}).empty());
}

TEST_CASE("verify_packing examples") {
  MultiGraph two = disjoint_cycles(2, 3);
  CHECK(verify_packing(two, {{0, 1, 2}, {3, 4, 5}}, 2));
  MultiGraph c5 = cycle_graph(5);
  CHECK_FALSE(verify_packing(c5, {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}}, 2));
  MultiGraph edge = make_graph(2, {{0, 1, 1}});
  CHECK_FALSE(verify_packing(edge, {{0, 1}}, 1));
  CHECK_FALSE(verify_packing(two, {{0, 1, 2}}, 2));
}

TEST_CASE("verify_packing is monotone in k") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    MultiGraph g = corpus_graph(i);
    auto r = max_cycle_packing_bruteforce(g);
    for (int k = 0; k <= r.k_max; ++k) CHECK(verify_packing(g, r.packing, k));
    CHECK_FALSE(verify_packing(g, r.packing, r.k_max + 1));
  }
}

TEST_CASE("is_fvs examples and agreement with cycle enumeration") {
  CHECK(is_fvs(cycle_graph(5), {2}));
  CHECK_FALSE(is_fvs(disjoint_cycles(2, 3), {0}));
  CHECK(is_fvs(path_graph(6), {}));
  CHECK_FALSE(is_fvs(make_graph(1, {{0, 0, 1}}), {}));
  CHECK_FALSE(is_fvs(make_graph(2, {{0, 1, 2}}), {}));
  std::mt19937_64 rng(11);
  for (std::uint64_t i = 0; i < 300; ++i) {
    MultiGraph g = corpus_graph(i);
    VertexSet f;
    for (VertexId v : g.vertices()) {
      if (bounded_draw(rng, 3) == 0) f.insert(v);
    }
    CHECK(is_fvs(g, f) == all_cycles(g.without(f)).empty());
  }
}

TEST_CASE("log term clamps at two") {
  CHECK(log_term(1) == 1);
  CHECK(log_term(2) == 1);
  CHECK(log_term(3) == 2);
  CHECK(log_term(4) == 2);
  CHECK(log_term(5) == 3);
  CHECK(log_term(1024) == 10);
  CHECK(log_term(1025) == 11);
}

TEST_CASE("contract_edge examples") {
  SUBCASE("triangle becomes a double edge") {
    auto [h, t] = contract_edge(cycle_graph(3), 0, 1);
    CHECK(h.num_vertices() == 2);
    CHECK(h.multiplicity(0, 2) == 2);
    CHECK(h.loops(0) == 0);
    CHECK(t.size() == 1);
  }
  SUBCASE("double edge becomes a loop") {
    auto [h, t] = contract_edge(make_graph(2, {{0, 1, 2}}), 0, 1);
    CHECK(h.num_vertices() == 1);
    CHECK(h.loops(0) == 1);
  }
  SUBCASE("path a-b-c becomes an edge") {
    auto [h, t] = contract_edge(path_graph(3), 0, 1);
    CHECK(h.multiplicity(0, 2) == 1);
    CHECK(h.loops(0) == 0);
  }
  SUBCASE("missing edge or equal ends is an error") {
    CHECK_THROWS(contract_edge(path_graph(3), 0, 2));
    CHECK_THROWS(contract_edge(make_graph(1, {{0, 0, 1}}), 0, 0));
  }
}

TEST_CASE("contraction consumes exactly one edge and replays") {
  std::mt19937_64 rng(5);
  for (std::uint64_t i = 0; i < 300; ++i) {
    MultiGraph g = corpus_graph(i);
    auto edges = g.edges();
    std::vector<EdgeEntry> proper;
    for (const auto& e : edges) {
      if (e.u != e.v) proper.push_back(e);
    }
    if (proper.empty()) continue;
    const auto& e = proper[bounded_draw(rng, proper.size())];
    bool flip = bounded_draw(rng, 2) == 1;
    VertexId u = flip ? e.v : e.u, v = flip ? e.u : e.v;
    auto [h, t] = contract_edge(g, u, v);
    CHECK(edge_total(h) == edge_total(g) - 1);
    CHECK(t.replay(g) == h);
    check_consistency(h);
  }
}

// The merged vertex may be entered from either endpoint's side; every
// combination of sides must lift to a cycle of the original graph that
// maps back onto the contracted cycle.
TEST_CASE("lifting through a contraction covers every edge-origin case") {
  int lifted = 0;
  for (int ma = 0; ma <= 2; ++ma) {
    for (int mb = 0; mb <= 2; ++mb) {
      for (int ab = 1; ab <= 2; ++ab) {
        for (int loops_a = 0; loops_a <= 1; ++loops_a) {
          for (int loops_b = 0; loops_b <= 1; ++loops_b) {
            // a=0, b=1 contracted; c=2, d=3 outside, c-d joined
            MultiGraph g(4);
            g.add_edge(0, 1, ab);
            if (ma) g.add_edge(0, 2, ma);
            if (mb) g.add_edge(1, 2, mb);
            g.add_edge(0, 3);
            g.add_edge(2, 3);
            if (loops_a) g.add_edge(0, 0);
            if (loops_b) g.add_edge(1, 1);
            auto [h, t] = contract_edge(g, 0, 1);
            for (const Cycle& c : all_cycles(h)) {
              Cycle up = lift_cycle_through_contraction(t, c);
              CHECK_MESSAGE(is_valid_cycle(g, up), to_string(c) << " -> " << to_string(up));
              VertexSet image;
              for (VertexId v : up) image.insert(v == 1 ? 0 : v);
              CHECK(image == VertexSet(c.begin(), c.end()));
              ++lifted;
            }
          }
        }
      }
    }
  }
  CHECK(lifted > 100);
}

TEST_CASE("triangle contraction lifts the 2-cycle back to the triangle") {
  auto [h, t] = contract_edge(cycle_graph(3), 0, 1);
  Cycle up = lift_cycle_through_contraction(t, {0, 2});
  CHECK(VertexSet(up.begin(), up.end()) == VertexSet{0, 1, 2});
  CHECK(lift_cycle_through_contraction(t, {2, 0}).size() == 3);
}

TEST_CASE("lifting an invalid cycle is an error") {
  auto [h, t] = contract_edge(cycle_graph(4), 0, 1);
  CHECK_THROWS(lift_cycle_through_contraction(t, {0, 2}));
}

TEST_CASE("cycle avoiding the merged vertex is unchanged") {
  MultiGraph g2 = make_graph(5, {{0, 1, 1}, {2, 3, 1}, {3, 4, 1}, {4, 2, 1}});
  auto [h2, t2] = contract_edge(g2, 0, 1);
  CHECK(lift_cycle_through_contraction(t2, {2, 3, 4}) == Cycle{2, 3, 4});
}

TEST_CASE("loop made from a parallel copy lifts to the 2-cycle") {
  auto [h, t] = contract_edge(make_graph(2, {{0, 1, 2}}), 0, 1);
  Cycle up = lift_cycle_through_contraction(t, {0});
  CHECK(VertexSet(up.begin(), up.end()) == VertexSet{0, 1});
}

TEST_CASE("discard keeps graphs under the cap untouched") {
  MultiGraph g = complete_graph(6);
  auto [h, t] = discard_excess_edges(g, 1, 1597);
  CHECK(h == g);
  CHECK(t.empty());
}

TEST_CASE("discard on a huge star stays under the cap") {
  MultiGraph g(1000001);
  for (VertexId v = 1; v <= 1000000; ++v) g.add_edge(0, v);
  auto [h, t] = discard_excess_edges(g, 1, 1597);
  CHECK(h.num_edges() <= discard_cap(h.num_vertices(), 1, 1597));
  CHECK(h.num_vertices() == g.num_vertices());
}

TEST_CASE("discard cap arithmetic") {
  CHECK(discard_cap(10, 1, 1) == 30);
  CHECK(discard_cap(10, 2, 1) == 50);
  CHECK(discard_cap(10, 4, 3) == (2 * 3 * 4 * 2 + 1) * 10);
}

TEST_CASE("discard thins dense graphs, keeps vertices and replays") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    MultiGraph g = random_multigraph(i, 8, 60, 10);
    for (int k = 1; k <= 2; ++k) {
      auto [h, t] = discard_excess_edges(g, k, 1);
      CHECK(h.num_edges() <= discard_cap(g.num_vertices(), k, 1));
      CHECK(h.num_vertices() == g.num_vertices());
      CHECK(t.replay(g) == h);
      for (const auto& e : h.edges()) CHECK(e.multiplicity <= g.multiplicity(e.u, e.v));
    }
  }
}

TEST_CASE("discard keeps the triangle listed first") {
  // a triangle on 0..2 plus a doubled K7 on 3..9 exceeds the k=1 cap of 30
  MultiGraph g = cycle_graph(3);
  for (int i = 0; i < 7; ++i) g.add_vertex();
  for (VertexId a = 3; a < 10; ++a) {
    for (VertexId b = a + 1; b < 10; ++b) g.add_edge(a, b, 2);
  }
  REQUIRE(g.num_edges() > discard_cap(10, 1, 1));
  std::vector<VertexId> order(10);
  std::iota(order.begin(), order.end(), 0);
  auto [h, t] = discard_excess_edges(g, 1, 1, order);
  CHECK(verify_packing(h, {{0, 1, 2}}, 1));
}

// Exhaustive over scan orders: the answer for k survives discarding
// whatever order is used, as long as the cap is met.
TEST_CASE("discard preserves the answer for every scan order") {
  int checked = 0;
  for (std::uint64_t i = 0; i < 6; ++i) {
    MultiGraph g = random_multigraph(100 + i, 6, 40, 10);
    REQUIRE(g.num_edges() > discard_cap(6, 1, 1));
    int kmax = max_cycle_packing_bruteforce(g).k_max;
    std::vector<VertexId> order(6);
    std::iota(order.begin(), order.end(), 0);
    do {
      for (int k = 1; k <= 2; ++k) {
        auto [h, t] = discard_excess_edges(g, k, 1, order);
        int after = max_cycle_packing_bruteforce(h).k_max;
        CHECK((after >= k) == (kmax >= k));
        ++checked;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  CHECK(checked == 6 * 720 * 2);
}

TEST_CASE("discard lifts packings back to the input") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    MultiGraph g = random_multigraph(200 + i, 9, 70, 10);
    auto [h, t] = discard_excess_edges(g, 1, 1);
    auto r = max_cycle_packing_bruteforce(h);
    CHECK(verify_packing(g, t.lift(r.packing), r.k_max));
  }
}
