// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/oracle.hpp"

#include <bit>
#include <cstdint>
#include <queue>

namespace cyclepack {

OracleResult max_cycle_packing_bruteforce(const MultiGraph& g, int cap) {
  std::vector<VertexId> vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  if (n > cap) {
    throw std::invalid_argument("oracle: " + std::to_string(n) +
                                " vertices exceeds cap " + std::to_string(cap));
  }
  if (n == 0) return {};
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) mult[i][j] = g.multiplicity(vs[i], vs[j]);
  }

  const std::uint32_t full = (1u << n) - 1;
  // reach[mask * n + v]: 1 + predecessor of v on a path from the lowest
  // vertex of mask through exactly mask, or 0
  std::vector<std::int8_t> reach(static_cast<std::size_t>(full + 1) * n, 0);
  std::vector<Cycle> cycle_of(full + 1);
  for (int s = 0; s < n; ++s) reach[(1u << s) * n + s] = static_cast<std::int8_t>(s + 1);

  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int s = std::countr_zero(mask);
    int size = std::popcount(mask);
    if (size == 1) {
      if (mult[s][s] > 0) cycle_of[mask] = {vs[s]};
    } else if (size == 2) {
      int t = std::countr_zero(mask & (mask - 1));
      if (mult[s][t] >= 2) cycle_of[mask] = {vs[s], vs[t]};
    }
    for (int v = 0; v < n; ++v) {
      if (!reach[mask * n + v]) continue;
      if (size >= 3 && cycle_of[mask].empty() && mult[v][s] > 0) {
        Cycle c;
        std::uint32_t m = mask;
        int cur = v;
        while (true) {
          c.push_back(vs[cur]);
          int prev = reach[m * n + cur] - 1;
          if (cur == s) break;
          m &= ~(1u << cur);
          cur = prev;
        }
        cycle_of[mask] = c;
      }
      for (int w = s + 1; w < n; ++w) {
        if ((mask >> w) & 1u || mult[v][w] == 0) continue;
        auto& slot = reach[(mask | (1u << w)) * n + w];
        if (!slot) slot = static_cast<std::int8_t>(v + 1);
      }
    }
  }

  std::vector<int> best(full + 1, 0);
  std::vector<std::uint32_t> pick(full + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    best[mask] = best[mask ^ low];
    for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low) || cycle_of[sub].empty()) continue;
      int cand = 1 + best[mask ^ sub];
      if (cand > best[mask]) {
        best[mask] = cand;
        pick[mask] = sub;
      }
    }
  }

  OracleResult r;
  r.k_max = best[full];
  std::uint32_t mask = full;
  while (mask) {
    if (pick[mask] && best[mask] == 1 + best[mask ^ pick[mask]]) {
      r.packing.push_back(cycle_of[pick[mask]]);
      mask ^= pick[mask];
    } else {
      mask &= mask - 1;
    }
  }
  if (static_cast<int>(r.packing.size()) != r.k_max) {
    throw std::logic_error("oracle: witness reconstruction failed");
  }
  return r;
}

std::optional<int> girth_bruteforce(const MultiGraph& g, int cap) {
  std::vector<VertexId> vs = g.vertices();
  if (static_cast<int>(vs.size()) > cap) {
    throw std::invalid_argument("girth oracle: too many vertices");
  }
  bool two = false;
  for (const EdgeEntry& e : g.edges()) {
    if (e.u == e.v) return 1;
    if (e.multiplicity >= 2) two = true;
  }
  if (two) return 2;
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(g.capacity()));
  std::vector<VertexId> parent(static_cast<std::size_t>(g.capacity()));
  for (VertexId r : vs) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<VertexId> q;
    dist[r] = 0;
    parent[r] = -1;
    q.push(r);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (auto [y, m] : g.adjacency(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          int len = dist[x] + dist[y] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace cyclepack
