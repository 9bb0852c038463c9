// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "cyclepack/generate.hpp"
#include "cyclepack/oracle.hpp"
#include "cyclepack/reduce.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cyclepack;
using namespace cyclepack::testing;

namespace {

void check_reduced_form(const MultiGraph& r) {
  for (VertexId v : r.vertices()) {
    CHECK(r.degree(v) >= 2);
    if (r.loops(v) == 0) CHECK(r.degree(v) >= 3);
    for (auto [w, m] : r.adjacency(v)) CHECK(m <= 2);
  }
}

}  // namespace

TEST_CASE("reduce examples") {
  SUBCASE("a path vanishes") {
    auto r = reduce(path_graph(5));
    CHECK(r.reduced.num_vertices() == 0);
    CHECK(r.pre_image.empty());
  }
  SUBCASE("a triangle becomes one loop") {
    auto r = reduce(cycle_graph(3));
    REQUIRE(r.reduced.num_vertices() == 1);
    VertexId w = r.reduced.vertices()[0];
    CHECK(r.reduced.loops(w) == 1);
    CHECK(r.reduced.num_edges() == 1);
  }
  SUBCASE("K4 is already reduced") {
    MultiGraph k4 = complete_graph(4);
    auto r = reduce(k4);
    CHECK(r.reduced == k4);
    CHECK(r.pre_image == VertexSet{0, 1, 2, 3});
  }
  SUBCASE("five parallel edges end as one loop") {
    // clamp to 2, then the degree-2 vertex is contracted into a loop
    auto r = reduce(make_graph(2, {{0, 1, 5}}));
    REQUIRE(r.reduced.num_vertices() == 1);
    VertexId w = r.reduced.vertices()[0];
    CHECK(r.reduced.loops(w) == 1);
    check_reduced_form(r.reduced);
  }
}

TEST_CASE("reduced graphs have no applicable rule") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    MultiGraph g = corpus_graph(i, 10);
    auto r = reduce(g);
    check_reduced_form(r.reduced);
    for (VertexId v : r.reduced.vertices()) CHECK(r.pre_image.count(v));
    CHECK(r.pre_image.size() == r.reduced.num_vertices());
    CHECK(r.trace.replay(g) == r.reduced);
  }
}

TEST_CASE("edge origins are paths of g with private interiors") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    MultiGraph g = corpus_graph(i, 10);
    auto r = reduce(g);
    VertexSet interiors;
    for (const auto& [key, paths] : r.edge_origin) {
      CHECK(static_cast<int>(paths.size()) == r.reduced.multiplicity(key.first, key.second));
      for (const Path& p : paths) {
        REQUIRE(p.size() >= 2);
        CHECK(p.front() == key.first);
        CHECK(p.back() == key.second);
        for (std::size_t j = 0; j + 1 < p.size(); ++j) CHECK(g.multiplicity(p[j], p[j + 1]) >= 1);
        for (std::size_t j = 1; j + 1 < p.size(); ++j) {
          CHECK_FALSE(r.pre_image.count(p[j]));
          CHECK(interiors.insert(p[j]).second);
        }
      }
    }
  }
}

TEST_CASE("reduce is safe for cycle packing") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    MultiGraph g = corpus_graph(i, 10);
    auto r = reduce(g);
    CHECK(max_cycle_packing_bruteforce(g).k_max == max_cycle_packing_bruteforce(r.reduced).k_max);
  }
}

TEST_CASE("reduce is idempotent") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto r = reduce(corpus_graph(i, 10));
    auto again = reduce(r.reduced);
    CHECK(again.reduced == r.reduced);
  }
}

TEST_CASE("one added edge can undo a clamp cascade") {
  // K4 minus an edge reduces to a single loop, K4 itself is reduced
  MultiGraph g = make_graph(4, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  CHECK(reduce(g).reduced.num_vertices() == 1);
  g.add_edge(0, 1);
  CHECK(reduce(g).reduced.num_vertices() == 4);
}

TEST_CASE("adding edges grows a loopless simple reduction by at most two vertices each") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (std::uint64_t i = 0; checked < 300; ++i) {
    MultiGraph g = corpus_graph(i, 10);
    MultiGraph base = reduce(g).reduced;
    auto gb = girth_bruteforce(base, 12);
    if (gb && *gb < 3) continue;
    ++checked;
    MultiGraph h = g;
    int extra = 1 + static_cast<int>(bounded_draw(rng, 3));
    auto vs = g.vertices();
    for (int e = 0; e < extra; ++e) {
      h.add_edge(vs[bounded_draw(rng, vs.size())], vs[bounded_draw(rng, vs.size())]);
    }
    CHECK(reduce(h).reduced.num_vertices() <= base.num_vertices() + 2 * extra);
  }
}

TEST_CASE("lifted packings certify in the original graph") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    MultiGraph g = corpus_graph(i, 10);
    auto r = reduce(g);
    auto best = max_cycle_packing_bruteforce(r.reduced);
    Packing up = lift_packing(r, best.packing);
    CHECK(verify_packing(g, up, best.k_max));
    for (const Cycle& c : all_cycles(r.reduced)) CHECK(is_valid_cycle(g, lift_cycle(r, c)));
  }
}

TEST_CASE("lift examples") {
  SUBCASE("the loop of a reduced C9 is the whole cycle") {
    auto r = reduce(cycle_graph(9));
    VertexId w = r.reduced.vertices()[0];
    Cycle up = lift_cycle(r, {w});
    CHECK(up.size() == 9);
    CHECK(is_valid_cycle(cycle_graph(9), up));
  }
  SUBCASE("a cycle of original edges is unchanged") {
    auto r = reduce(complete_graph(4));
    CHECK(lift_cycle(r, {0, 1, 2}) == Cycle{0, 1, 2});
  }
  SUBCASE("a clamped theta keeps two of its strands") {
    // the third strand is dropped by the clamp, the hubs then fold into a loop
    MultiGraph th = generate("theta", {{"strands", 3}, {"len", 3}}, 0);
    auto r = reduce(th);
    REQUIRE(r.reduced.num_vertices() == 1);
    VertexId w = r.reduced.vertices()[0];
    CHECK(r.reduced.loops(w) == 1);
    Cycle up = lift_cycle(r, {w});
    CHECK(up.size() == 6);
    CHECK(is_valid_cycle(th, up));
  }
  SUBCASE("a double edge lifts to two strands") {
    MultiGraph th = generate("theta", {{"strands", 2}, {"len", 3}}, 0);
    th.add_edge(0, 0);
    th.add_edge(1, 1);
    auto r = reduce(th);
    REQUIRE(r.reduced.num_vertices() == 2);
    CHECK(r.reduced.multiplicity(0, 1) == 2);
    Cycle up = lift_cycle(r, {0, 1});
    CHECK(up.size() == 6);
    CHECK(is_valid_cycle(th, up));
    CHECK(lift_cycle(r, {1, 0}).size() == 6);
  }
  SUBCASE("invalid cycle is an error") {
    auto r = reduce(complete_graph(4));
    CHECK_THROWS(lift_cycle(r, {0, 1}));
  }
}

TEST_CASE("project_fvs") {
  SUBCASE("C5 maps onto its loop vertex") {
    auto r = reduce(cycle_graph(5));
    VertexId w = r.reduced.vertices()[0];
    CHECK(project_fvs(r, {3}) == VertexSet{w});
  }
  SUBCASE("surviving vertices map to themselves") {
    auto r = reduce(complete_graph(4));
    CHECK(project_fvs(r, {0, 1}) == VertexSet{0, 1});
  }
  SUBCASE("theta strand vertices map onto the hubs") {
    MultiGraph th = generate("theta", {{"strands", 3}, {"len", 3}}, 0);
    auto r = reduce(th);
    // one interior vertex on each of two strands
    REQUIRE(is_fvs(th, {2, 4}));
    auto fp = project_fvs(r, {2, 4});
    CHECK(fp.size() <= 2);
    CHECK(is_fvs(r.reduced, fp));
  }
  SUBCASE("non-FVS input is an error") {
    auto r = reduce(complete_graph(4));
    CHECK_THROWS(project_fvs(r, {0}));
  }
  SUBCASE("random FVS projections stay feedback sets") {
    std::mt19937_64 rng(41);
    for (std::uint64_t i = 0; i < 300; ++i) {
      MultiGraph g = corpus_graph(i, 10);
      VertexSet f;
      for (VertexId v : g.vertices()) {
        if (bounded_draw(rng, 2) == 0) f.insert(v);
      }
      if (!is_fvs(g, f)) continue;
      auto r = reduce(g);
      auto fp = project_fvs(r, f);
      CHECK(is_fvs(r.reduced, fp));
      CHECK(fp.size() <= f.size());
      for (VertexId v : fp) CHECK(r.reduced.has_vertex(v));
    }
  }
}
