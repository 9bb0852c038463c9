// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/graph_util.hpp"

#include <algorithm>
#include <set>

namespace cyclepack {

std::vector<std::vector<VertexId>> components(const MultiGraph& g,
                                              const VertexFilter& keep) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.capacity()), 0);
  for (VertexId s : g.vertices()) {
    if (seen[s] || !keep(s)) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (auto [w, m] : g.adjacency(comp[i])) {
        if (!seen[w] && keep(w)) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<Cycle> find_cycle_within(const MultiGraph& g,
                                       const std::vector<VertexId>& members,
                                       const VertexFilter& inside) {
  for (VertexId v : members) {
    if (g.loops(v) > 0) return Cycle{v};
  }
  for (VertexId v : members) {
    for (auto [w, m] : g.adjacency(v)) {
      if (w > v && m >= 2 && inside(w)) return Cycle{v, w};
    }
  }
  std::vector<VertexId> parent(static_cast<std::size_t>(g.capacity()), -2);
  for (VertexId root : members) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<VertexId> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      VertexId x = queue[i];
      for (auto [y, m] : g.adjacency(x)) {
        if (!inside(y) || y == parent[x]) continue;
        if (parent[y] == -2) {
          parent[y] = x;
          queue.push_back(y);
          continue;
        }
        // non-tree edge x-y closes a cycle through their common ancestor
        std::vector<VertexId> up_x;
        std::set<VertexId> on_x;
        for (VertexId a = x; a != -1; a = parent[a]) {
          up_x.push_back(a);
          on_x.insert(a);
        }
        std::vector<VertexId> up_y;
        VertexId a = y;
        while (!on_x.count(a)) {
          up_y.push_back(a);
          a = parent[a];
        }
        Cycle c;
        for (VertexId b : up_x) {
          c.push_back(b);
          if (b == a) break;
        }
        c.insert(c.end(), up_y.rbegin(), up_y.rend());
        return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<VertexId>> path_within(
    const MultiGraph& g, const std::vector<VertexId>& sources,
    const std::vector<char>& is_target, const VertexFilter& inside) {
  std::vector<VertexId> parent(static_cast<std::size_t>(g.capacity()), -2);
  std::vector<VertexId> queue;
  for (VertexId s : sources) {
    if (parent[s] == -2 && inside(s)) {
      parent[s] = -1;
      queue.push_back(s);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexId x = queue[i];
    if (is_target[x]) {
      std::vector<VertexId> path;
      for (VertexId a = x; a != -1; a = parent[a]) path.push_back(a);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (auto [y, m] : g.adjacency(x)) {
      if (parent[y] == -2 && inside(y)) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  return std::nullopt;
}

}  // namespace cyclepack
