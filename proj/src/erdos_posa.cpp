// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/erdos_posa.hpp"

#include <algorithm>
#include <cmath>

#include "cyclepack/girth.hpp"
#include "cyclepack/graph_util.hpp"

namespace cyclepack {

std::int64_t theorem2_constant() {
  for (std::int64_t c = 2;; ++c) {
    if (static_cast<double>(c) >= 150.0 * std::log2(static_cast<double>(c))) {
      return c;
    }
  }
}

std::int64_t fvs_bound(std::int64_t c, int k) { return c * k * log_term(k); }

std::int64_t EpConfig::c() const {
  return c_override > 0 ? c_override : theorem2_constant();
}

// ---------------------------------------------------------------------------
// CubicGraph

int CubicGraph::add_edge(VertexId u, VertexId v, std::vector<VertexId> path) {
  int id = static_cast<int>(edges_.size());
  edges_.push_back({u, v, std::move(path), true});
  incident_[u].push_back(id);
  if (u != v) incident_[v].push_back(id);
  return id;
}

void CubicGraph::remove_edge(int id) {
  Edge& e = edges_.at(id);
  if (!e.alive) return;
  e.alive = false;
  for (VertexId x : {e.u, e.v}) {
    auto it = incident_.find(x);
    if (it == incident_.end()) continue;
    auto& list = it->second;
    list.erase(std::remove(list.begin(), list.end(), id), list.end());
  }
}

void CubicGraph::remove_vertex(VertexId v) {
  auto it = incident_.find(v);
  if (it == incident_.end()) return;
  std::vector<int> ids = it->second;
  for (int id : ids) remove_edge(id);
  incident_.erase(v);
}

std::vector<VertexId> CubicGraph::vertices() const {
  std::vector<VertexId> out;
  for (const auto& [v, list] : incident_) out.push_back(v);
  return out;
}

int CubicGraph::degree(VertexId v) const {
  int d = 0;
  for (int id : incident(v)) d += edges_[id].u == edges_[id].v ? 2 : 1;
  return d;
}

int CubicGraph::multiplicity(VertexId a, VertexId b) const {
  int m = 0;
  for (int id : incident(a)) {
    const Edge& e = edges_[id];
    if ((e.u == a && e.v == b) || (e.v == a && e.u == b)) ++m;
  }
  return m;
}

std::vector<VertexId> CubicGraph::neighbors(VertexId v) const {
  std::set<VertexId> s;
  for (int id : incident(v)) {
    const Edge& e = edges_[id];
    VertexId o = e.u == v ? e.v : e.u;
    if (o != v) s.insert(o);
  }
  return {s.begin(), s.end()};
}

MultiGraph CubicGraph::as_multigraph() const {
  MultiGraph g;
  for (const auto& [v, list] : incident_) g.insert_vertex(v);
  for (const Edge& e : edges_) {
    if (e.alive) g.add_edge(e.u, e.v);
  }
  return g;
}

namespace {

std::vector<VertexId> path_from(const CubicGraph::Edge& e, VertexId a) {
  if (e.u == a) return e.path;
  return {e.path.rbegin(), e.path.rend()};
}

VertexId other_end(const CubicGraph::Edge& e, VertexId a) {
  return e.u == a ? e.v : e.u;
}

std::vector<VertexId> joined(std::initializer_list<std::vector<VertexId>> parts) {
  std::vector<VertexId> out;
  for (const auto& p : parts) {
    if (out.empty()) {
      out = p;
    } else {
      out.insert(out.end(), p.begin() + 1, p.end());
    }
  }
  return out;
}

}  // namespace

CubicGraph::EdgeCycle CubicGraph::bind(const Cycle& c,
                                       const std::set<int>& exclude) const {
  EdgeCycle out;
  out.verts = c;
  std::set<int> taken = exclude;
  for (std::size_t i = 0; i < c.size(); ++i) {
    VertexId a = c[i], b = c[(i + 1) % c.size()];
    int pick = -1;
    for (int id : incident(a)) {
      const Edge& e = edges_[id];
      bool joins = (e.u == a && e.v == b) || (e.u == b && e.v == a);
      if (joins && !taken.count(id) && (pick < 0 || id < pick)) pick = id;
    }
    if (pick < 0) throw std::logic_error("bind: cycle does not fit the graph");
    taken.insert(pick);
    out.edges.push_back(pick);
  }
  return out;
}

Cycle CubicGraph::expand(const EdgeCycle& c) const {
  Cycle out;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    auto p = path_from(edges_.at(c.edges[i]), c.verts[i]);
    out.insert(out.end(), p.begin(), p.end() - 1);
  }
  return out;
}

CubicGraph::EdgeCycle CubicGraph::lift_step(const EdgeCycle& c,
                                            const CubicGraph& previous,
                                            const Expansion& exp) const {
  EdgeCycle out;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    int id = c.edges[i];
    VertexId a = c.verts[i];
    auto it = exp.find(id);
    if (it == exp.end()) {
      out.verts.push_back(a);
      out.edges.push_back(id);
      continue;
    }
    std::vector<int> parts = it->second;
    if (edges_.at(id).u != a) std::reverse(parts.begin(), parts.end());
    VertexId cur = a;
    for (int pid : parts) {
      out.verts.push_back(cur);
      out.edges.push_back(pid);
      cur = other_end(previous.edge(pid), cur);
    }
  }
  return out;
}

CubicGraph cubic_core(const MultiGraph& h) {
  struct Copy {
    VertexId u, v;
  };
  std::vector<Copy> copies;
  std::vector<std::vector<int>> at(static_cast<std::size_t>(h.capacity()));
  for (const EdgeEntry& e : h.edges()) {
    for (int i = 0; i < e.multiplicity; ++i) {
      int id = static_cast<int>(copies.size());
      copies.push_back({e.u, e.v});
      at[e.u].push_back(id);
      if (e.u != e.v) at[e.v].push_back(id);
    }
  }
  std::vector<char> used(copies.size(), 0);
  CubicGraph out;
  for (VertexId a : h.vertices()) {
    if (h.degree(a) == 3) out.add_vertex(a);
  }
  for (VertexId a : h.vertices()) {
    if (h.degree(a) != 3) continue;
    for (int id : at[a]) {
      if (used[id]) continue;
      used[id] = 1;
      if (copies[id].u == copies[id].v) {
        out.add_edge(a, a, {a, a});
        continue;
      }
      std::vector<VertexId> path{a};
      int e = id;
      VertexId cur = copies[e].u == a ? copies[e].v : copies[e].u;
      while (h.degree(cur) == 2) {
        path.push_back(cur);
        int next = at[cur][0] == e ? at[cur][1] : at[cur][0];
        used[next] = 1;
        VertexId prev = cur;
        cur = copies[next].u == prev ? copies[next].v : copies[next].u;
        e = next;
      }
      path.push_back(cur);
      out.add_edge(a, cur, std::move(path));
    }
  }
  return out;
}

namespace {

// Replaces a vertex of degree two by an edge between its neighbors.
void suppress(CubicGraph& h, VertexId z, CubicGraph::Expansion& exp) {
  const auto& inc = h.incident(z);
  if (inc.size() == 1) {  // only a loop remains
    h.remove_vertex(z);
    return;
  }
  int e1 = inc[0], e2 = inc[1];
  VertexId p = other_end(h.edge(e1), z);
  VertexId q = other_end(h.edge(e2), z);
  auto path = joined({path_from(h.edge(e1), p), path_from(h.edge(e2), z)});
  h.remove_vertex(z);
  exp[h.add_edge(p, q, std::move(path))] = {e1, e2};
}

}  // namespace

std::optional<CompressionStep> compress_once(CubicGraph& h) {
  if (h.num_vertices() == 0) return std::nullopt;
  CompressionStep step;
  VertexId v = h.vertices().front();
  std::vector<int> inc = h.incident(v);

  for (int id : inc) {
    if (h.edge(id).u == h.edge(id).v) {
      int other = inc[0] == id ? (inc.size() > 1 ? inc[1] : -1) : inc[0];
      h.remove_vertex(v);
      step.kind = "loop";
      if (other >= 0) {
        VertexId u = other_end(h.edge(other), v);
        if (h.has_vertex(u)) suppress(h, u, step.expansion);
      }
      return step;
    }
  }

  std::vector<VertexId> nbrs = h.neighbors(v);
  if (nbrs.size() == 1 && h.multiplicity(v, nbrs[0]) == 3) {
    h.remove_vertex(v);
    h.remove_vertex(nbrs[0]);
    step.kind = "triple";
    return step;
  }

  for (VertexId u : nbrs) {
    for (VertexId w : h.neighbors(u)) {
      if (h.multiplicity(u, w) != 2) continue;
      int ea = -1, eb = -1, uw = -1;
      for (int id : h.incident(u)) {
        if (other_end(h.edge(id), u) == w) {
          if (uw < 0) uw = id;
        } else {
          ea = id;
        }
      }
      for (int id : h.incident(w)) {
        if (other_end(h.edge(id), w) != u) eb = id;
      }
      VertexId a = other_end(h.edge(ea), u);
      VertexId b = other_end(h.edge(eb), w);
      auto path = joined({path_from(h.edge(ea), a), path_from(h.edge(uw), u),
                          path_from(h.edge(eb), w)});
      h.remove_vertex(u);
      h.remove_vertex(w);
      step.expansion[h.add_edge(a, b, std::move(path))] = {ea, uw, eb};
      step.kind = "double";
      return step;
    }
  }

  if (nbrs.size() != 3) {
    throw std::logic_error("compression: pivot is not a simple cubic vertex");
  }
  VertexId x = nbrs[0], y = nbrs[1], z = nbrs[2];
  int evx = -1, evy = -1;
  for (int id : inc) {
    VertexId o = other_end(h.edge(id), v);
    if (o == x) evx = id;
    if (o == y) evy = id;
  }
  auto path = joined({path_from(h.edge(evx), x), path_from(h.edge(evy), v)});
  h.remove_vertex(v);
  step.expansion[h.add_edge(x, y, std::move(path))] = {evx, evy};
  suppress(h, z, step.expansion);
  step.kind = "split";
  return step;
}

std::optional<std::vector<CubicGraph::EdgeCycle>> greedy_extract(
    const CubicGraph& h, int k) {
  CubicGraph work = h;
  std::vector<CubicGraph::EdgeCycle> out;
  for (int round = 0; round < k; ++round) {
    MultiGraph mg = work.as_multigraph();
    std::vector<VertexId> vs = mg.vertices();
    auto c = shortest_cycle_with_fvs(mg, VertexSet(vs.begin(), vs.end()));
    if (!c) return std::nullopt;
    out.push_back(work.bind(*c));
    for (VertexId v : *c) work.remove_vertex(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// H construction

namespace {

MultiGraph empty_like(const MultiGraph& g) {
  MultiGraph h;
  if (g.capacity() > 0) {
    h.insert_vertex(g.capacity() - 1);
    h.remove_vertex(g.capacity() - 1);
  }
  return h;
}

void add_cycle_edges(MultiGraph& h, const Cycle& c) {
  if (c.size() == 1) {
    h.add_edge(c[0], c[0]);
  } else if (c.size() == 2) {
    h.add_edge(c[0], c[1], 2);
  } else {
    for (std::size_t i = 0; i < c.size(); ++i) {
      h.add_edge(c[i], c[(i + 1) % c.size()]);
    }
  }
}

}  // namespace

std::optional<MultiGraph> maximal_deg23_subgraph(const MultiGraph& g) {
  if (is_acyclic(g)) return std::nullopt;
  MultiGraph h = empty_like(g);
  std::vector<char> in_h(static_cast<std::size_t>(g.capacity()), 0);
  auto outside = [&](VertexId v) { return !in_h[v]; };
  auto absorb = [&](VertexId v) {
    in_h[v] = 1;
    h.insert_vertex(v);
  };
  std::vector<char> target(static_cast<std::size_t>(g.capacity()), 0);

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& comp : components(g, outside)) {
      if (auto c = find_cycle_within(g, comp, outside)) {
        for (VertexId v : *c) absorb(v);
        add_cycle_edges(h, *c);
        changed = true;
        continue;
      }
      std::set<VertexId> att;
      for (VertexId s : comp) {
        for (auto [w, m] : g.adjacency(s)) {
          if (in_h[w] && h.degree(w) == 2) att.insert(w);
        }
      }
      if (att.size() < 2) continue;
      VertexId a = *att.begin(), b = *std::next(att.begin());
      std::vector<VertexId> sources;
      for (VertexId s : comp) {
        if (g.multiplicity(s, a) > 0) sources.push_back(s);
        target[s] = g.multiplicity(s, b) > 0;
      }
      auto path = path_within(g, sources, target, outside);
      for (VertexId s : comp) target[s] = 0;
      if (!path) throw std::logic_error("H construction: component not connected");
      for (VertexId s : *path) absorb(s);
      h.add_edge(a, path->front());
      for (std::size_t i = 0; i + 1 < path->size(); ++i) {
        h.add_edge((*path)[i], (*path)[i + 1]);
      }
      h.add_edge(path->back(), b);
      changed = true;
    }
    for (VertexId a : h.vertices()) {
      for (auto [b, m] : g.adjacency(a)) {
        if (h.degree(a) != 2) break;
        if (in_h[b] && h.degree(b) == 2 && m > h.multiplicity(a, b)) {
          h.add_edge(a, b);
          changed = true;
        }
      }
    }
  }
  return h;
}

// ---------------------------------------------------------------------------

EpOutcome cycles_or_fvs(const MultiGraph& g, int k, const EpConfig& cfg) {
  if (k < 1) throw std::invalid_argument("cycles_or_fvs: k must be >= 1");
  const std::int64_t c = cfg.c();
  EpOutcome out;
  if (is_acyclic(g)) {
    out.route = "acyclic";
    return out;
  }
  if (k == 1) {
    std::vector<VertexId> vs = g.vertices();
    auto cyc = shortest_cycle_with_fvs(g, VertexSet(vs.begin(), vs.end()));
    out.cycles = Packing{*cyc};
    out.route = "shortest";
    return out;
  }

  MultiGraph h = *maximal_deg23_subgraph(g);
  auto outside = [&](VertexId v) { return !h.has_vertex(v); };

  // Degree-2 vertices of H that every cycle avoiding V3 must use, each with
  // a private witness cycle.
  std::map<VertexId, Cycle> witness;
  std::vector<char> target(static_cast<std::size_t>(g.capacity()), 0);
  for (const auto& comp : components(g, outside)) {
    std::set<VertexId> att;
    for (VertexId s : comp) {
      for (auto [w, m] : g.adjacency(s)) {
        if (h.has_vertex(w) && h.degree(w) == 2) att.insert(w);
      }
    }
    if (att.size() > 1) {
      throw std::logic_error("H is not maximal: component sees two degree-2 vertices");
    }
    if (att.empty()) continue;
    VertexId a = *att.begin();
    if (witness.count(a)) continue;
    std::vector<VertexId> touching;
    int copies = 0;
    for (VertexId s : comp) {
      int m = g.multiplicity(a, s);
      copies += m;
      if (m > 0) touching.push_back(s);
      if (m >= 2) {
        witness[a] = {a, s};
        break;
      }
    }
    if (witness.count(a) || copies < 2) continue;
    target[touching[1]] = 1;
    std::set<VertexId> in_comp(comp.begin(), comp.end());
    auto path = path_within(g, {touching[0]}, target,
                            [&](VertexId v) { return in_comp.count(v) > 0; });
    target[touching[1]] = 0;
    Cycle cyc{a};
    cyc.insert(cyc.end(), path->begin(), path->end());
    witness[a] = cyc;
  }
  for (VertexId v : h.vertices()) {
    if (h.degree(v) == 2 && g.loops(v) > 0 && !witness.count(v)) {
      witness[v] = {v};
    }
  }
  for (const auto& comp : components(h, [](VertexId) { return true; })) {
    bool plain = std::all_of(comp.begin(), comp.end(),
                             [&](VertexId v) { return h.degree(v) == 2; });
    if (!plain) continue;
    bool covered = std::any_of(comp.begin(), comp.end(),
                               [&](VertexId v) { return witness.count(v) > 0; });
    if (covered) continue;
    std::set<VertexId> in_comp(comp.begin(), comp.end());
    witness[comp.front()] = *find_cycle_within(
        h, comp, [&](VertexId v) { return in_comp.count(v) > 0; });
  }

  if (static_cast<std::int64_t>(witness.size()) >= k) {
    Packing p;
    for (const auto& [v, cyc] : witness) {
      if (static_cast<int>(p.size()) == k) break;
      p.push_back(cyc);
    }
    if (!verify_packing(g, p, k)) {
      throw std::logic_error("witness cycles failed verification");
    }
    out.cycles = std::move(p);
    out.route = "witnesses";
    return out;
  }

  VertexSet f;
  for (const auto& [v, cyc] : witness) f.insert(v);
  for (VertexId v : h.vertices()) {
    if (h.degree(v) == 3) f.insert(v);
  }
  if (!is_fvs(g, f)) {
    throw std::logic_error("degree-3 and witness vertices do not hit every cycle");
  }
  if (static_cast<std::int64_t>(f.size()) <= fvs_bound(c, k)) {
    out.fvs = std::move(f);
    out.route = "fvs";
    return out;
  }

  const CubicGraph core = cubic_core(h);
  CubicGraph small = core;
  const std::int64_t floor_size = (c - 1) * k * log_term(k);
  while (static_cast<std::int64_t>(small.num_vertices()) > floor_size + 2) {
    compress_once(small);
  }
  auto found = greedy_extract(small, k);
  out.route = "compression";
  if (!found) {
    if (cfg.c_override <= 0) {
      throw std::logic_error("greedy extraction ran out of cycles");
    }
    found = greedy_extract(core, k);
    out.route = "compression-fallback";
    if (!found) {
      throw std::runtime_error("cycles_or_fvs: overridden constant too small");
    }
  }
  Packing p;
  const CubicGraph& source = out.route == "compression" ? small : core;
  for (const auto& ec : *found) p.push_back(source.expand(ec));
  if (!verify_packing(g, p, k)) {
    throw std::logic_error("compressed cycles failed verification");
  }
  out.cycles = std::move(p);
  return out;
}

}  // namespace cyclepack
