// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/girth.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace cyclepack {

namespace {

// Tree paths from a and b up to their lowest common ancestor, joined into
// one vertex sequence a .. lca .. b.
Cycle join_at_ancestor(const std::vector<VertexId>& parent, VertexId a,
                       VertexId b) {
  std::vector<VertexId> left{a}, right{b};
  while (left.back() != right.back()) {
    left.push_back(parent[left.back()]);
    right.push_back(parent[right.back()]);
  }
  right.pop_back();
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

}  // namespace

std::optional<Cycle> shortest_cycle_with_fvs(
    const MultiGraph& g, const VertexSet& f,
    const std::function<void(const Cycle&)>& on_candidate) {
  if (!is_fvs(g, f)) {
    throw std::invalid_argument(
        "shortest_cycle_with_fvs: vertex set is not a feedback vertex set");
  }
  std::vector<EdgeEntry> edges = g.edges();
  for (const EdgeEntry& e : edges) {
    if (e.u == e.v) {
      if (on_candidate) on_candidate({e.u});
      return Cycle{e.u};
    }
  }
  for (const EdgeEntry& e : edges) {
    if (e.multiplicity >= 2) {
      if (on_candidate) on_candidate({e.u, e.v});
      return Cycle{e.u, e.v};
    }
  }

  const auto n = static_cast<std::size_t>(g.capacity());
  std::vector<int> level(n, -1);
  std::vector<VertexId> parent(n, -1);
  std::vector<VertexId> order;
  std::optional<Cycle> best;
  for (VertexId r : f) {
    if (!g.has_vertex(r)) continue;
    for (VertexId v : order) level[v] = -1;
    order.clear();
    int limit = best ? (static_cast<int>(best->size()) - 1) / 2
                     : std::numeric_limits<int>::max();
    level[r] = 0;
    parent[r] = -1;
    order.push_back(r);
    std::optional<std::pair<VertexId, VertexId>> flat;   // edge inside a level
    std::optional<std::array<VertexId, 3>> fork;         // vertex with two parents
    for (std::size_t head = 0; head < order.size(); ++head) {
      VertexId x = order[head];
      int lx = level[x];
      if (lx > limit) break;
      if (flat && fork) break;
      for (auto [y, m] : g.adjacency(x)) {
        if (level[y] < 0) {
          level[y] = lx + 1;
          parent[y] = x;
          order.push_back(y);
        } else if (level[y] == lx && !flat) {
          flat = {x, y};
        } else if (level[y] == lx - 1 && y != parent[x] && !fork) {
          fork = {x, parent[x], y};
        }
      }
    }
    auto consider = [&](Cycle c) {
      if (on_candidate) on_candidate(c);
      if (!best || c.size() < best->size()) best = std::move(c);
    };
    if (flat) consider(join_at_ancestor(parent, flat->first, flat->second));
    if (fork) {
      Cycle c = join_at_ancestor(parent, (*fork)[1], (*fork)[2]);
      c.push_back((*fork)[0]);
      consider(std::move(c));
    }
  }
  for (VertexId v : order) level[v] = -1;
  return best;
}

}  // namespace cyclepack
