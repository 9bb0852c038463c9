// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <numeric>
#include <random>

#include "cyclepack/exact.hpp"
#include "cyclepack/oracle.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cyclepack;
using namespace cyclepack::testing;

namespace {

// closed[t]: number of closed walks v0 v1 ... v(t-1) v0 in g - f, found by
// walking every sequence explicitly.
std::vector<BigInt> closed_walks(const MultiGraph& g, const VertexSet& f, int max_len) {
  std::vector<BigInt> closed(max_len + 1, BigInt(0));
  std::vector<VertexId> walk;
  std::function<void(int)> step = [&](int len) {
    VertexId cur = walk.back();
    if (len >= 1 && g.multiplicity(cur, walk.front()) > 0 && cur != walk.front()) {
      closed[len] += 1;
    }
    if (len == max_len) return;
    for (auto [w, m] : g.adjacency(cur)) {
      if (f.count(w)) continue;
      walk.push_back(w);
      step(len + 1);
      walk.pop_back();
    }
  };
  for (VertexId s : g.vertices()) {
    if (f.count(s)) continue;
    walk = {s};
    step(1);
  }
  return closed;
}

// k-tuples of closed walks of length >= 3 with total length ell.
BigInt tuples(const std::vector<BigInt>& closed, int k, int ell) {
  if (k == 0) return ell == 0 ? BigInt(1) : BigInt(0);
  BigInt total = 0;
  for (int t = 3; t <= ell; ++t) {
    if (t < static_cast<int>(closed.size()) && closed[t] != 0) {
      total += closed[t] * tuples(closed, k - 1, ell - t);
    }
  }
  return total;
}

BigInt binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

BigInt reference_signed_sum(const MultiGraph& gs, int k) {
  auto vs = gs.vertices();
  int n = static_cast<int>(vs.size());
  BigInt sum = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet f;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) f.insert(vs[i]);
    }
    auto closed = closed_walks(gs, f, n);
    BigInt term = 0;
    for (int ell = 2 * k; ell <= n; ++ell) {
      term += tuples(closed, k, ell) * binom(n - static_cast<int>(f.size()), n - ell);
    }
    sum += (f.size() % 2) ? BigInt(-term) : term;
  }
  return sum;
}

MultiGraph relabel(const MultiGraph& g, std::mt19937_64& rng) {
  auto vs = g.vertices();
  std::vector<VertexId> perm(vs.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[bounded_draw(rng, i)]);
  std::map<VertexId, VertexId> to;
  for (std::size_t i = 0; i < vs.size(); ++i) to[vs[i]] = perm[i];
  MultiGraph h(vs.size());
  for (const auto& e : g.edges()) h.add_edge(to[e.u], to[e.v], e.multiplicity);
  return h;
}

}  // namespace

TEST_CASE("simplify examples") {
  MultiGraph k4 = complete_graph(4);
  CHECK(simplify_for_dp(k4).graph == k4);

  auto loop = simplify_for_dp(make_graph(1, {{0, 0, 1}}));
  CHECK(loop.graph.is_simple());
  CHECK(loop.graph.num_vertices() == 3);
  CHECK(loop.graph.num_edges() == 3);

  auto dbl = simplify_for_dp(make_graph(2, {{0, 1, 2}}));
  CHECK(dbl.graph.is_simple());
  CHECK(dbl.graph.num_vertices() == 3);
  CHECK(dbl.graph.num_edges() == 3);

  auto many = simplify_for_dp(make_graph(2, {{0, 1, 5}, {1, 1, 3}}));
  CHECK(many.graph.is_simple());
  CHECK(many.trace.replay(make_graph(2, {{0, 1, 5}, {1, 1, 3}})) == many.graph);
}

TEST_CASE("simplify preserves the maximum packing") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    MultiGraph g = corpus_graph(i, 7);
    auto s = simplify_for_dp(g);
    if (s.graph.num_vertices() > 12) continue;
    auto r = max_cycle_packing_bruteforce(s.graph);
    CHECK(r.k_max == max_cycle_packing_bruteforce(g).k_max);
    CHECK(verify_packing(g, s.trace.lift(r.packing), r.k_max));
  }
}

TEST_CASE("count_Q examples") {
  MultiGraph c3 = cycle_graph(3);
  // 3 starting points times 2 directions
  CHECK(closed_walks(c3, {}, 3)[3] == 6);
  CHECK(count_Q(c3, {}, 1, 3) == 6);
  CHECK(count_Q(path_graph(3), {}, 1, 3) == 0);
  CHECK(count_Q(c3, {0}, 1, 3) == 0);
  CHECK_THROWS(count_Q(c3, {}, 1, 4));
  CHECK_THROWS(count_Q(c3, {}, 2, 3));
}

TEST_CASE("count_Q matches explicit walk enumeration") {
  std::mt19937_64 rng(61);
  int nonzero = 0;
  for (std::uint64_t i = 0; i < 120; ++i) {
    int n = 3 + static_cast<int>(bounded_draw(rng, 4));
    MultiGraph g = random_connected(rng(), n, static_cast<int>(bounded_draw(rng, 6)));
    VertexSet f;
    for (VertexId v : g.vertices()) {
      if (bounded_draw(rng, 4) == 0) f.insert(v);
    }
    auto closed = closed_walks(g, f, n);
    for (int k = 1; 2 * k <= n; ++k) {
      for (int ell = 2 * k; ell <= n; ++ell) {
        BigInt want = tuples(closed, k, ell);
        CHECK(count_Q(g, f, k, ell) == want);
        nonzero += want != 0;
      }
    }
  }
  CHECK(nonzero > 50);
}

TEST_CASE("signed sum spot value for the triangle") {
  MultiGraph c3 = cycle_graph(3);
  CHECK(reference_signed_sum(c3, 1) == 6);
  CHECK(ie_signed_sum(c3, 1) == 6);
}

TEST_CASE("signed sums match the reference formula") {
  std::mt19937_64 rng(62);
  for (std::uint64_t i = 0; i < 80; ++i) {
    int n = 3 + static_cast<int>(bounded_draw(rng, 4));
    MultiGraph g = random_connected(rng(), n, static_cast<int>(bounded_draw(rng, 6)));
    auto sums = ie_signed_sums(g, 3);
    for (int k = 1; k <= 3; ++k) CHECK(sums[k] == reference_signed_sum(g, k));
  }
}

TEST_CASE("ie_decide examples") {
  CHECK(ie_decide(cycle_graph(3), 1));
  CHECK_FALSE(ie_decide(cycle_graph(5), 2));
  CHECK_FALSE(ie_decide(complete_graph(5), 2));
  CHECK(ie_decide(complete_graph(6), 2));
  CHECK_FALSE(ie_decide(complete_graph(6), 3));
  CHECK(ie_decide(make_graph(2, {{0, 0, 1}, {1, 1, 2}}), 2));
  CHECK_FALSE(ie_decide(path_graph(5), 1));
  CHECK_THROWS(ie_decide(cycle_graph(3), 0));
}

TEST_CASE("ie_decide agrees with the oracle") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    MultiGraph g = corpus_graph(i, 7);
    int kmax = max_cycle_packing_bruteforce(g).k_max;
    for (int k = 1; k <= 3; ++k) CHECK(ie_decide(g, k) == (kmax >= k));
  }
}

TEST_CASE("signed sums do not depend on labels or threads") {
  std::mt19937_64 rng(63);
  for (std::uint64_t i = 0; i < 40; ++i) {
    MultiGraph g = simplify_for_dp(corpus_graph(i, 7)).graph;
    if (g.num_vertices() > 12) continue;
    MultiGraph h = relabel(g, rng);
    auto a = ie_signed_sums(g, 3, {1});
    CHECK(a == ie_signed_sums(h, 3, {1}));
    CHECK(a == ie_signed_sums(g, 3, {3}));
  }
}

TEST_CASE("ie_search examples") {
  auto two = ie_search(disjoint_cycles(2, 3), 2);
  REQUIRE(two);
  CHECK(verify_packing(disjoint_cycles(2, 3), *two, 2));
  std::vector<VertexSet> sets;
  for (const auto& c : *two) sets.push_back(VertexSet(c.begin(), c.end()));
  std::sort(sets.begin(), sets.end());
  CHECK(sets == std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}});

  auto k4 = ie_search(complete_graph(4), 1);
  REQUIRE(k4);
  CHECK(verify_packing(complete_graph(4), *k4, 1));

  CHECK_FALSE(ie_search(cycle_graph(5), 2).has_value());
}

TEST_CASE("ie_search certifies on multigraphs") {
  for (std::uint64_t i = 0; i < 120; ++i) {
    MultiGraph g = corpus_graph(i, 7);
    int kmax = max_cycle_packing_bruteforce(g).k_max;
    for (int k = 1; k <= std::min(kmax + 1, 3); ++k) {
      auto p = ie_search(g, k);
      CHECK(p.has_value() == (kmax >= k));
      if (p) CHECK(verify_packing(g, *p, k));
    }
  }
}
