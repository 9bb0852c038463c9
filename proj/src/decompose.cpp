// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cyclepack/girth.hpp"
#include "cyclepack/graph_util.hpp"
#include "cyclepack/reduce.hpp"

namespace cyclepack {

int girth_target(int k) {
  if (k < 1) throw std::invalid_argument("girth_target: k must be >= 1");
  if (k <= 4) return 7;
  double lk = std::log2(static_cast<double>(k));
  double v = 48.0 * lk / std::log2(lk);
  return std::max(7, static_cast<int>(std::floor(v + 1e-9)) + 6);
}

SSetResult find_s_set(const MultiGraph& g, int k, int girth, const EpConfig& cfg) {
  if (k < 1 || girth <= 6) {
    throw std::invalid_argument("find_s_set: need k >= 1 and girth > 6");
  }
  SSetResult out;
  EpOutcome ep = cycles_or_fvs(g, k, cfg);
  if (ep.has_cycles()) {
    out.packing = ep.cycles;
    return out;
  }
  MultiGraph cur = g;
  Packing found;
  for (int round = 0; round < k; ++round) {
    ReduceResult res = reduce(cur);
    VertexSet f;
    for (VertexId v : ep.fvs) {
      if (cur.has_vertex(v)) f.insert(v);
    }
    VertexSet fp = project_fvs(res, f);
    auto c = shortest_cycle_with_fvs(res.reduced, fp);
    if (!c || static_cast<int>(c->size()) > girth) return out;
    found.push_back(lift_cycle(res, *c));
    for (VertexId v : *c) {
      out.s.insert(v);
      cur.remove_vertex(v);
    }
  }
  if (!verify_packing(g, found, k)) {
    throw std::logic_error("find_s_set: short cycles are not disjoint");
  }
  out.packing = std::move(found);
  out.s.clear();
  return out;
}

CoreBound core_size_bound(const MultiGraph& g, const VertexSet& s, int k,
                          int girth, std::int64_t c) {
  CoreBound b{};
  b.reduced_size = reduce(g.without(s)).reduced.num_vertices();
  double l = log_term(k);
  double ckl = static_cast<double>(c) * k * l;
  b.general = std::pow(2.0 * ckl, 1.0 + 6.0 / (girth - 6)) + 3.0 * ckl;
  b.target = 3.0 * ckl + 2.0 * static_cast<double>(c) * k * std::pow(l, 1.5);
  double n = static_cast<double>(b.reduced_size);
  b.holds = n <= b.general && (girth != girth_target(k) || n <= b.target);
  return b;
}

bool check_core_size_bound(const MultiGraph& g, const VertexSet& s, int k,
                           int girth, std::int64_t c) {
  return core_size_bound(g, s, k, girth, c).holds;
}

namespace {

int degree_outside(const MultiGraph& g, const VertexSet& x, VertexId v) {
  int d = 2 * g.loops(v);
  for (auto [w, m] : g.adjacency(v)) {
    if (!x.count(w)) d += m;
  }
  return d;
}

using PairKey = std::pair<VertexId, VertexId>;

// Pairs (a <= b) of X such that v can sit between a and b on a cycle
// while using no other vertex outside X.
std::vector<PairKey> attachment_pairs(const MultiGraph& g, const VertexSet& x,
                                      VertexId v) {
  std::vector<VertexId> nx;
  for (auto [w, m] : g.adjacency(v)) {
    if (x.count(w)) nx.push_back(w);
  }
  std::vector<PairKey> out;
  for (std::size_t i = 0; i < nx.size(); ++i) {
    if (g.multiplicity(v, nx[i]) >= 2) out.push_back({nx[i], nx[i]});
    for (std::size_t j = i + 1; j < nx.size(); ++j) out.push_back({nx[i], nx[j]});
  }
  return out;
}

}  // namespace

std::size_t count_low_degree(const MultiGraph& g, const VertexSet& x) {
  std::size_t n = 0;
  for (VertexId v : g.vertices()) {
    if (!x.count(v) && degree_outside(g, x, v) <= 1) ++n;
  }
  return n;
}

PruneResult prune_low_degree(const MultiGraph& g, const VertexSet& x, int k) {
  if (k < 1) throw std::invalid_argument("prune_low_degree: k must be >= 1");
  for (VertexId v : x) {
    if (!g.has_vertex(v)) throw std::invalid_argument("prune_low_degree: X not in graph");
  }
  const int budget = 2 * static_cast<int>(x.size()) + 1;
  TracedGraph tg(g);
  PruneResult out;
  std::map<PairKey, int> filled;
  std::set<VertexId> todo;
  for (VertexId v : g.vertices()) {
    if (!x.count(v)) todo.insert(v);
  }
  const MultiGraph& h = tg.graph;
  while (!todo.empty()) {
    VertexId w = *todo.begin();
    todo.erase(todo.begin());
    if (!h.has_vertex(w) || out.marked.count(w)) continue;
    int d = degree_outside(h, x, w);
    if (d > 1) continue;
    auto pairs = attachment_pairs(h, x, w);
    bool room = std::any_of(pairs.begin(), pairs.end(),
                            [&](const PairKey& p) { return filled[p] < budget; });
    if (room) {
      out.marked.insert(w);
      for (const PairKey& p : pairs) ++filled[p];
      continue;
    }
    if (d == 0) {
      tg.delete_vertex(w);
      out.deleted.insert(w);
      continue;
    }
    VertexId z = -1;
    for (auto [u, m] : h.adjacency(w)) {
      if (!x.count(u)) z = u;
    }
    tg.contract(z, w);
    out.contracted.push_back({z, w});
    todo.insert(z);
  }
  out.graph = tg.graph;
  out.trace = std::move(tg.trace);
  return out;
}

CoreDecomposition core_decomposition(const MultiGraph& g, const VertexSet& s, int k) {
  ReduceResult first = reduce(g.without(s));
  {
    std::vector<VertexId> vs = first.reduced.vertices();
    auto c = shortest_cycle_with_fvs(first.reduced, VertexSet(vs.begin(), vs.end()));
    if (c && c->size() <= 6) {
      throw std::invalid_argument("core_decomposition: reduced graph has girth <= 6");
    }
  }
  VertexSet x = s;
  x.insert(first.pre_image.begin(), first.pre_image.end());
  PruneResult pr = prune_low_degree(g, x, k);

  CoreDecomposition out;
  out.graph = pr.graph;
  out.trace = std::move(pr.trace);
  CoreStructure& c = out.core;
  const MultiGraph& h = out.graph;
  c.s = s;
  c.x_size = x.size();
  c.r = reduce(h.without(s)).pre_image;
  for (VertexId v : h.vertices()) {
    if (!s.count(v) && !c.r.count(v)) c.t.insert(v);
  }
  auto in_t = [&](VertexId v) { return c.t.count(v) > 0; };
  std::map<VertexId, int> tdeg;
  for (VertexId v : c.t) {
    int d = 2 * h.loops(v);
    for (auto [w, m] : h.adjacency(v)) {
      if (in_t(w)) d += m;
    }
    tdeg[v] = d;
    if (d <= 1) {
      c.t_leq1.insert(v);
    } else if (d == 2) {
      c.t2.insert(v);
    } else {
      c.t_geq3.insert(v);
    }
  }
  auto in_t2 = [&](VertexId v) { return c.t2.count(v) > 0; };
  for (const auto& comp : components(h, in_t2)) {
    // walk from an end (a vertex with < 2 neighbors inside the component)
    VertexId start = comp.front();
    for (VertexId v : comp) {
      int inside = 0;
      for (auto [w, m] : h.adjacency(v)) inside += in_t2(w) ? m : 0;
      if (inside < 2) {
        start = v;
        break;
      }
    }
    std::vector<VertexId> path{start};
    VertexId prev = -1, cur = start;
    while (true) {
      VertexId next = -1;
      for (auto [w, m] : h.adjacency(cur)) {
        if (in_t2(w) && w != prev) {
          next = w;
          break;
        }
      }
      if (next < 0 || next == start) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    c.paths.push_back(std::move(path));
  }
  std::sort(c.paths.begin(), c.paths.end());
  for (const auto& p : c.paths) {
    std::vector<VertexId> piece;
    for (VertexId v : p) {
      bool sees_r = false;
      for (auto [w, m] : h.adjacency(v)) sees_r = sees_r || c.r.count(w) > 0;
      if (sees_r) {
        c.z_p.insert(v);
        if (!piece.empty()) c.p_star.push_back(std::move(piece));
        piece.clear();
      } else {
        piece.push_back(v);
      }
    }
    if (!piece.empty()) c.p_star.push_back(std::move(piece));
  }

  auto problems = core_violations(h, c);
  if (!problems.empty()) {
    throw std::logic_error("core_decomposition: " + problems.front());
  }
  return out;
}

std::vector<std::string> core_violations(const MultiGraph& g, const CoreStructure& c) {
  std::vector<std::string> bad;
  if (!is_acyclic(g.induced(c.t))) bad.push_back("T is not a forest");
  for (const auto& p : c.paths) {
    int seeing = 0;
    for (VertexId v : p) {
      bool sees = false;
      for (auto [w, m] : g.adjacency(v)) sees = sees || c.r.count(w) > 0;
      seeing += sees;
    }
    if (seeing > 2) bad.push_back("a degree-two path has more than two vertices seeing R");
  }
  if (c.z_p.size() > 2 * c.paths.size()) bad.push_back("|Z_P| > 2|P|");
  if (c.p_star.size() > 3 * c.paths.size()) bad.push_back("|P*| > 3|P|");
  if (!c.t.empty()) {
    if (c.t_geq3.size() >= c.t_leq1.size()) bad.push_back("|T>=3| >= |T<=1|");
    if (c.paths.size() >= c.t_leq1.size() + c.t_geq3.size()) {
      bad.push_back("|P| >= |T<=1| + |T>=3|");
    }
  }
  for (const auto& p : c.p_star) {
    for (VertexId v : p) {
      for (auto [w, m] : g.adjacency(v)) {
        if (c.r.count(w)) bad.push_back("a P* vertex has a neighbor in R");
      }
    }
  }
  std::size_t xs = c.x_size;
  if (c.t_leq1.size() > xs * xs * (2 * xs + 1)) bad.push_back("too many T vertices of degree <= 1");
  return bad;
}

}  // namespace cyclepack
