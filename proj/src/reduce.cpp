// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/reduce.hpp"

#include <algorithm>

namespace cyclepack {

namespace {

using Key = std::pair<VertexId, VertexId>;

Key key_of(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

Path oriented(const Path& p, VertexId from) {
  if (p.front() == from) return p;
  return Path(p.rbegin(), p.rend());
}

const std::vector<Path>& strands_of(const ReduceResult& res, VertexId a,
                                    VertexId b) {
  auto it = res.edge_origin.find(key_of(a, b));
  if (it == res.edge_origin.end()) {
    throw std::logic_error("reduce: no origin recorded for an edge");
  }
  return it->second;
}

}  // namespace

ReduceResult reduce(const MultiGraph& g) {
  TracedGraph tg(g);
  std::map<Key, std::vector<Path>> strands;
  for (const EdgeEntry& e : g.edges()) {
    strands[{e.u, e.v}].assign(static_cast<std::size_t>(e.multiplicity),
                               Path{e.u, e.v});
  }
  for (const EdgeEntry& e : g.edges()) {
    if (e.u != e.v && e.multiplicity > 2) {
      tg.clamp(e.u, e.v, 2);
      strands[{e.u, e.v}].resize(2);
    }
  }

  const MultiGraph& h = tg.graph;
  std::set<VertexId> todo;
  for (VertexId v : h.vertices()) todo.insert(v);
  while (!todo.empty()) {
    VertexId v = *todo.begin();
    todo.erase(todo.begin());
    if (!h.has_vertex(v)) continue;
    int d = h.degree(v);
    if (d <= 1) {
      for (auto [u, m] : h.adjacency(v)) {
        strands.erase(key_of(u, v));
        todo.insert(u);
      }
      tg.delete_vertex(v);
    } else if (d == 2 && h.loops(v) == 0) {
      const auto& adj = h.adjacency(v);
      VertexId a = adj.begin()->first;
      bool doubled = adj.begin()->second == 2;
      VertexId b = doubled ? a : std::next(adj.begin())->first;
      Path first, second;
      if (doubled) {
        const auto& s = strands.at(key_of(a, v));
        first = oriented(s[0], a);
        second = oriented(s[1], v);
      } else {
        first = oriented(strands.at(key_of(a, v))[0], a);
        second = oriented(strands.at(key_of(b, v))[0], v);
      }
      Path joined = first;
      joined.insert(joined.end(), second.begin() + 1, second.end());
      strands.erase(key_of(a, v));
      strands.erase(key_of(b, v));
      Key k = key_of(a, b);
      joined = oriented(joined, k.first);
      tg.collapse(v, joined);
      auto& list = strands[k];
      list.push_back(std::move(joined));
      if (a != b && h.multiplicity(a, b) > 2) {
        tg.clamp(a, b, 2);
        list.pop_back();
      }
      todo.insert(a);
      todo.insert(b);
    }
  }

  ReduceResult res;
  res.reduced = tg.graph;
  for (VertexId v : res.reduced.vertices()) res.pre_image.insert(v);
  res.representative.assign(static_cast<std::size_t>(g.capacity()), -1);
  for (VertexId v : res.pre_image) res.representative[v] = v;
  for (auto& [k, list] : strands) {
    for (const Path& p : list) {
      for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        res.representative[p[i]] = k.first;
      }
    }
  }
  res.edge_origin = std::move(strands);
  res.trace = std::move(tg.trace);
  return res;
}

Cycle lift_cycle(const ReduceResult& res, const Cycle& c) {
  std::string why = cycle_problem(res.reduced, c);
  if (!why.empty()) throw std::invalid_argument("lift_cycle: " + why);
  Cycle out;
  if (c.size() == 1) {
    const Path& p = strands_of(res, c[0], c[0])[0];
    out.assign(p.begin(), p.end() - 1);
    return out;
  }
  if (c.size() == 2) {
    const auto& s = strands_of(res, c[0], c[1]);
    Path there = oriented(s[0], c[0]);
    Path back = oriented(s[1], c[1]);
    out = there;
    out.insert(out.end(), back.begin() + 1, back.end() - 1);
    return out;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    VertexId a = c[i], b = c[(i + 1) % c.size()];
    Path p = oriented(strands_of(res, a, b)[0], a);
    out.insert(out.end(), p.begin(), p.end() - 1);
  }
  return out;
}

Packing lift_packing(const ReduceResult& res, const Packing& p) {
  Packing out;
  for (const Cycle& c : p) out.push_back(lift_cycle(res, c));
  return out;
}

VertexSet project_fvs(const ReduceResult& res, const VertexSet& f) {
  VertexSet out;
  for (VertexId v : f) {
    if (v < 0 || v >= static_cast<VertexId>(res.representative.size())) {
      throw std::invalid_argument("project_fvs: unknown vertex");
    }
    if (res.representative[v] >= 0) out.insert(res.representative[v]);
  }
  if (!is_fvs(res.reduced, out)) {
    throw std::invalid_argument(
        "project_fvs: input is not a feedback vertex set of the graph");
  }
  return out;
}

}  // namespace cyclepack
