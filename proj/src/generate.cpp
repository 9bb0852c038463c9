// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/generate.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>

namespace cyclepack {

namespace {

std::int64_t need(const GenParams& p, const std::string& key, std::int64_t lo,
                  std::int64_t hi = INT32_MAX) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("generate: missing parameter '" + key + "'");
  if (it->second < lo || it->second > hi) {
    throw std::invalid_argument("generate: parameter '" + key + "' out of range");
  }
  return it->second;
}

std::int64_t optional(const GenParams& p, const std::string& key, std::int64_t fallback,
                      std::int64_t lo, std::int64_t hi = INT32_MAX) {
  return p.count(key) ? need(p, key, lo, hi) : fallback;
}

void check_keys(const GenParams& p, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : p) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw std::invalid_argument("generate: unknown parameter '" + key + "'");
    }
  }
}

MultiGraph with_vertices(std::int64_t n) {
  MultiGraph g;
  for (std::int64_t i = 0; i < n; ++i) g.add_vertex();
  return g;
}

MultiGraph disjoint_cycles(const GenParams& p) {
  check_keys(p, {"count", "len"});
  auto count = need(p, "count", 0, 1 << 20);
  auto len = need(p, "len", 1, 1 << 20);
  MultiGraph g = with_vertices(count * len);
  for (std::int64_t c = 0; c < count; ++c) {
    auto base = static_cast<VertexId>(c * len);
    if (len == 1) {
      g.add_edge(base, base);
    } else if (len == 2) {
      g.add_edge(base, base + 1, 2);
    } else {
      for (std::int64_t i = 0; i < len; ++i) {
        g.add_edge(base + static_cast<VertexId>(i), base + static_cast<VertexId>((i + 1) % len));
      }
    }
  }
  return g;
}

MultiGraph gnm(const GenParams& p, std::mt19937_64& rng) {
  check_keys(p, {"n", "m", "multi", "loops"});
  auto n = need(p, "n", 0, 1 << 20);
  auto m = need(p, "m", 0, 1 << 24);
  bool multi = optional(p, "multi", 0, 0, 1) == 1;
  auto loops = optional(p, "loops", 0, 0, 1 << 24);
  MultiGraph g = with_vertices(n);
  if (m > 0 && n < 2) throw std::invalid_argument("generate: gnm needs n >= 2 for edges");
  if (!multi && m > n * (n - 1) / 2) throw std::invalid_argument("generate: gnm m too large");
  if (loops > 0 && n < 1) throw std::invalid_argument("generate: gnm loops need n >= 1");
  auto un = static_cast<std::uint64_t>(n);
  std::int64_t placed = 0;
  while (placed < m) {
    auto u = static_cast<VertexId>(bounded_draw(rng, un));
    auto v = static_cast<VertexId>(bounded_draw(rng, un));
    if (u == v || (!multi && g.multiplicity(u, v) > 0)) continue;
    g.add_edge(u, v);
    ++placed;
  }
  for (std::int64_t i = 0; i < loops; ++i) {
    auto u = static_cast<VertexId>(bounded_draw(rng, un));
    g.add_edge(u, u);
  }
  return g;
}

MultiGraph theta(const GenParams& p) {
  check_keys(p, {"strands", "len"});
  auto strands = need(p, "strands", 1, 1 << 20);
  auto len = need(p, "len", 1, 1 << 20);
  MultiGraph g = with_vertices(2);
  for (std::int64_t s = 0; s < strands; ++s) {
    VertexId prev = 0;
    for (std::int64_t i = 1; i < len; ++i) {
      VertexId x = g.add_vertex();
      g.add_edge(prev, x);
      prev = x;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

MultiGraph grid(const GenParams& p) {
  check_keys(p, {"rows", "cols"});
  auto rows = need(p, "rows", 1, 1 << 12);
  auto cols = need(p, "cols", 1, 1 << 12);
  MultiGraph g = with_vertices(rows * cols);
  auto id = [&](std::int64_t r, std::int64_t c) { return static_cast<VertexId>(r * cols + c); };
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  }
  return g;
}

// Distance from s to t, or -1 when unreachable within `limit` steps.
int distance_within(const MultiGraph& g, VertexId s, VertexId t, int limit) {
  std::vector<int> dist(g.capacity(), -1);
  std::queue<VertexId> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    if (x == t) return dist[x];
    if (dist[x] >= limit) continue;
    for (auto [y, m] : g.adjacency(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return -1;
}

MultiGraph high_girth(const GenParams& p, std::mt19937_64& rng) {
  check_keys(p, {"n", "girth", "m"});
  auto n = need(p, "n", 0, 1 << 14);
  auto girth = need(p, "girth", 3, 1 << 14);
  auto m = optional(p, "m", INT32_MAX, 0);
  MultiGraph g = with_vertices(n);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  for (std::size_t i = pairs.size(); i > 1; --i) {
    std::swap(pairs[i - 1], pairs[bounded_draw(rng, i)]);
  }
  std::int64_t placed = 0;
  for (auto [u, v] : pairs) {
    if (placed >= m) break;
    int d = distance_within(g, u, v, static_cast<int>(girth) - 2);
    if (d >= 0 && d + 1 < girth) continue;
    g.add_edge(u, v);
    ++placed;
  }
  return g;
}

MultiGraph cubic(const GenParams& p, std::mt19937_64& rng) {
  check_keys(p, {"n"});
  auto n = need(p, "n", 2, 1 << 20);
  if (n % 2) throw std::invalid_argument("generate: cubic needs an even n");
  MultiGraph g = with_vertices(n);
  std::vector<VertexId> stubs;
  for (VertexId v = 0; v < n; ++v) {
    for (int i = 0; i < 3; ++i) stubs.push_back(v);
  }
  for (std::size_t i = stubs.size(); i > 1; --i) {
    std::swap(stubs[i - 1], stubs[bounded_draw(rng, i)]);
  }
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) g.add_edge(stubs[i], stubs[i + 1]);
  return g;
}

}  // namespace

std::vector<std::string> generator_models() {
  return {"disjoint_cycles", "gnm", "theta", "grid", "high_girth", "cubic"};
}

MultiGraph generate(const std::string& model, const GenParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (model == "disjoint_cycles") return disjoint_cycles(params);
  if (model == "gnm") return gnm(params, rng);
  if (model == "theta") return theta(params);
  if (model == "grid") return grid(params);
  if (model == "high_girth") return high_girth(params, rng);
  if (model == "cubic") return cubic(params, rng);
  throw std::invalid_argument("generate: unknown model '" + model + "'");
}

}  // namespace cyclepack
