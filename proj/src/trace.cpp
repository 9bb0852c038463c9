// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/trace.hpp"

#include <algorithm>

namespace cyclepack {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Copies of {a,b} a cycle walks over.
int uses(const Cycle& c, VertexId a, VertexId b) {
  if (c.size() == 1) return (a == b && c[0] == a) ? 1 : 0;
  if (a == b) return 0;
  if (c.size() == 2) {
    return ((c[0] == a && c[1] == b) || (c[0] == b && c[1] == a)) ? 2 : 0;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    VertexId x = c[i], y = c[(i + 1) % c.size()];
    if ((x == a && y == b) || (x == b && y == a)) return 1;
  }
  return 0;
}

// Inserts `mid` between the cyclically adjacent a and b.
Cycle insert_between(const Cycle& c, VertexId a, VertexId b, VertexId mid) {
  if (c.size() == 1) return {c[0], mid};
  if (c.size() == 2) return {c[0], mid, c[1]};
  Cycle out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    out.push_back(c[i]);
    VertexId y = c[(i + 1) % c.size()];
    if ((c[i] == a && y == b) || (c[i] == b && y == a)) out.push_back(mid);
  }
  return out;
}

int count_in(const std::map<VertexId, int>& m, VertexId v) {
  auto it = m.find(v);
  return it == m.end() ? 0 : it->second;
}

Cycle lift_contraction(const EdgeContracted& e, const Cycle& c) {
  VertexId u = e.survivor, v = e.removed;
  auto pos = std::find(c.begin(), c.end(), u);
  if (pos == c.end()) return c;
  const auto& au = e.survivor_adj;
  const auto& av = e.removed_adj;
  if (c.size() == 1) {
    if (e.survivor_loops > 0) return {u};
    if (e.removed_loops > 0) return {v};
    if (count_in(au, v) < 2) throw LiftError("contraction: no loop at " + std::to_string(u));
    return {u, v};
  }
  if (c.size() == 2) {
    VertexId x = c[0] == u ? c[1] : c[0];
    if (count_in(au, x) >= 2) return {u, x};
    if (count_in(av, x) >= 2) return {v, x};
    if (count_in(au, x) < 1 || count_in(av, x) < 1) {
      throw LiftError("contraction: no 2-cycle through " + std::to_string(u));
    }
    return {u, x, v};
  }
  std::size_t i = static_cast<std::size_t>(pos - c.begin());
  VertexId x = c[(i + c.size() - 1) % c.size()];
  VertexId y = c[(i + 1) % c.size()];
  // rotate so that u sits last, then rebuild the tail
  Cycle out;
  for (std::size_t t = 1; t < c.size(); ++t) out.push_back(c[(i + t) % c.size()]);
  // out = y ... x
  bool ux = count_in(au, x) > 0, uy = count_in(au, y) > 0;
  bool vx = count_in(av, x) > 0, vy = count_in(av, y) > 0;
  if (ux && uy) {
    out.push_back(u);
  } else if (vx && vy) {
    out.push_back(v);
  } else if (ux && vy) {
    out.push_back(u);
    out.push_back(v);
  } else if (vx && uy) {
    out.push_back(v);
    out.push_back(u);
  } else {
    throw LiftError("contraction: cycle " + to_string(c) + " is not in the contracted graph");
  }
  return out;
}

}  // namespace

void apply_event(MultiGraph& g, const TraceEvent& ev) {
  std::visit(
      Overloaded{
          [&](const VertexDeleted& e) { g.remove_vertex(e.v); },
          [&](const EdgeRemoved& e) { g.remove_edge(e.u, e.v, e.count); },
          [&](const EdgeAdded& e) { g.add_edge(e.u, e.v, 1); },
          [&](const MultiplicityClamped& e) {
            g.set_multiplicity(e.u, e.v, e.new_mult);
          },
          [&](const EdgeContracted& e) {
            VertexId u = e.survivor, v = e.removed;
            int between = g.multiplicity(u, v);
            if (between < 1) {
              throw std::invalid_argument("contraction of a missing edge");
            }
            std::map<VertexId, int> nv = g.adjacency(v);
            int lv = g.loops(v);
            g.remove_vertex(v);
            for (auto [w, m] : nv) {
              if (w != u) g.add_edge(u, w, m);
            }
            g.add_edge(u, u, lv + between - 1);
          },
          [&](const EdgeSubdivided& e) {
            g.remove_edge(e.u, e.v, 1);
            VertexId prev = e.u;
            for (VertexId x : e.inserted) {
              g.insert_vertex(x);
              g.add_edge(prev, x);
              prev = x;
            }
            g.add_edge(prev, e.v);
          },
          [&](const PathCollapsed& e) {
            g.remove_vertex(e.removed);
            g.add_edge(e.a, e.b);
          },
      },
      ev);
}

Cycle lift_through(const TraceEvent& ev, const Cycle& c) {
  return std::visit(
      Overloaded{
          [&](const VertexDeleted&) { return c; },
          [&](const EdgeRemoved&) { return c; },
          [&](const MultiplicityClamped&) { return c; },
          [&](const EdgeAdded& e) {
            if (uses(c, e.u, e.v) > e.pre_mult) {
              throw LiftError("cycle " + to_string(c) +
                              " relies on an added edge");
            }
            return c;
          },
          [&](const EdgeContracted& e) { return lift_contraction(e, c); },
          [&](const EdgeSubdivided& e) {
            Cycle out;
            for (VertexId v : c) {
              if (std::find(e.inserted.begin(), e.inserted.end(), v) ==
                  e.inserted.end()) {
                out.push_back(v);
              }
            }
            return out;
          },
          [&](const PathCollapsed& e) {
            if (uses(c, e.a, e.b) > e.pre_mult) {
              return insert_between(c, e.a, e.b, e.removed);
            }
            return c;
          },
      },
      ev);
}

void TransformTrace::append(const TransformTrace& other) {
  events.insert(events.end(), other.events.begin(), other.events.end());
}

MultiGraph TransformTrace::replay(MultiGraph g) const {
  for (const auto& e : events) apply_event(g, e);
  return g;
}

std::vector<VertexId> TransformTrace::representatives(VertexId capacity) const {
  // forward pass: where does each slot currently live
  std::vector<VertexId> slot_of(static_cast<std::size_t>(capacity));
  for (VertexId v = 0; v < capacity; ++v) slot_of[v] = v;
  // owners[s] = original ids currently represented by slot s
  std::map<VertexId, std::vector<VertexId>> owners;
  for (VertexId v = 0; v < capacity; ++v) owners[v].push_back(v);
  auto drop = [&](VertexId s) {
    auto it = owners.find(s);
    if (it == owners.end()) return;
    for (VertexId o : it->second) slot_of[o] = -1;
    owners.erase(it);
  };
  for (const auto& ev : events) {
    if (auto* d = std::get_if<VertexDeleted>(&ev)) {
      drop(d->v);
    } else if (auto* p = std::get_if<PathCollapsed>(&ev)) {
      drop(p->removed);
    } else if (auto* c = std::get_if<EdgeContracted>(&ev)) {
      auto it = owners.find(c->removed);
      if (it == owners.end()) continue;
      auto moved = std::move(it->second);
      owners.erase(it);
      for (VertexId o : moved) {
        slot_of[o] = c->survivor;
        owners[c->survivor].push_back(o);
      }
    }
  }
  return slot_of;
}

VertexId TransformTrace::representative(VertexId v) const {
  VertexId cur = v;
  for (const auto& ev : events) {
    if (auto* d = std::get_if<VertexDeleted>(&ev)) {
      if (d->v == cur) return -1;
    } else if (auto* p = std::get_if<PathCollapsed>(&ev)) {
      if (p->removed == cur) return -1;
    } else if (auto* c = std::get_if<EdgeContracted>(&ev)) {
      if (c->removed == cur) cur = c->survivor;
    }
  }
  return cur;
}

Cycle TransformTrace::lift(const Cycle& c) const {
  Cycle cur = c;
  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    cur = lift_through(*it, cur);
  }
  return cur;
}

Packing TransformTrace::lift(const Packing& p) const {
  Packing out;
  out.reserve(p.size());
  for (const Cycle& c : p) out.push_back(lift(c));
  return out;
}

void TracedGraph::record(TraceEvent e) {
  apply_event(graph, e);
  trace.events.push_back(std::move(e));
}

void TracedGraph::delete_vertex(VertexId v) { record(VertexDeleted{v}); }

void TracedGraph::remove_edge(VertexId u, VertexId v, int count) {
  record(EdgeRemoved{u, v, count});
}

void TracedGraph::add_edge(VertexId u, VertexId v, int label) {
  record(EdgeAdded{u, v, label, graph.multiplicity(u, v)});
}

void TracedGraph::clamp(VertexId u, VertexId v, int new_mult) {
  record(MultiplicityClamped{u, v, graph.multiplicity(u, v), new_mult});
}

void TracedGraph::contract(VertexId survivor, VertexId removed) {
  if (survivor == removed || graph.multiplicity(survivor, removed) < 1) {
    throw std::invalid_argument("contract: {" + std::to_string(survivor) +
                                "," + std::to_string(removed) +
                                "} is not an edge");
  }
  EdgeContracted e;
  e.survivor = survivor;
  e.removed = removed;
  e.survivor_adj = graph.adjacency(survivor);
  e.removed_adj = graph.adjacency(removed);
  e.survivor_loops = graph.loops(survivor);
  e.removed_loops = graph.loops(removed);
  record(std::move(e));
}

std::vector<VertexId> TracedGraph::subdivide(VertexId u, VertexId v,
                                             int pieces) {
  if (graph.multiplicity(u, v) < 1) {
    throw std::invalid_argument("subdivide: missing edge");
  }
  EdgeSubdivided e{u, v, {}};
  for (int i = 0; i < pieces; ++i) {
    e.inserted.push_back(graph.capacity() + i);
  }
  auto ids = e.inserted;
  record(std::move(e));
  return ids;
}

void TracedGraph::collapse(VertexId removed, std::vector<VertexId> origin) {
  if (graph.degree(removed) != 2 || graph.loops(removed) != 0) {
    throw std::invalid_argument("collapse: vertex is not a plain degree-2 vertex");
  }
  const auto& adj = graph.adjacency(removed);
  VertexId a = adj.begin()->first;
  VertexId b = adj.begin()->second == 2 ? a : std::next(adj.begin())->first;
  record(PathCollapsed{a, b, removed, std::move(origin), graph.multiplicity(a, b)});
}

std::pair<MultiGraph, TransformTrace> contract_edge(const MultiGraph& g,
                                                    VertexId u, VertexId v) {
  TracedGraph tg(g);
  tg.contract(u, v);
  return {std::move(tg.graph), std::move(tg.trace)};
}

Cycle lift_cycle_through_contraction(const TransformTrace& trace,
                                     const Cycle& c) {
  return trace.lift(c);
}

std::int64_t discard_cap(std::size_t n, int k, std::int64_t c_ep) {
  return (2 * c_ep * k * log_term(k) + 1) * static_cast<std::int64_t>(n);
}

std::pair<MultiGraph, TransformTrace> discard_excess_edges(
    const MultiGraph& g, int k, std::int64_t c_ep,
    const std::optional<std::vector<VertexId>>& order) {
  if (k < 1) throw std::invalid_argument("discard_excess_edges: k must be >= 1");
  TracedGraph tg(g);
  std::int64_t cap = discard_cap(g.num_vertices(), k, c_ep);
  if (g.num_edges() <= cap) return {std::move(tg.graph), std::move(tg.trace)};

  for (const EdgeEntry& e : g.edges()) {
    int limit = e.u == e.v ? 1 : 2;
    if (e.multiplicity > limit) tg.clamp(e.u, e.v, limit);
  }
  if (tg.graph.num_edges() <= cap) {
    return {std::move(tg.graph), std::move(tg.trace)};
  }

  std::vector<VertexId> seq = order ? *order : g.vertices();
  std::vector<std::int64_t> pos(static_cast<std::size_t>(g.capacity()), -1);
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = static_cast<std::int64_t>(i);
  for (VertexId v : g.vertices()) {
    if (pos[v] < 0) throw std::invalid_argument("discard order misses a vertex");
  }

  std::map<std::pair<VertexId, VertexId>, int> kept;
  std::int64_t x = 0;
  const MultiGraph& h = tg.graph;
  for (VertexId v : seq) {
    if (x >= cap) break;
    std::vector<std::pair<VertexId, int>> incident;
    if (h.loops(v) > 0) incident.push_back({v, h.loops(v)});
    for (auto [w, m] : h.adjacency(v)) {
      if (pos[w] > pos[v]) incident.push_back({w, m});
    }
    for (auto [w, m] : incident) {
      int take = static_cast<int>(std::min<std::int64_t>(m, cap - x));
      if (take <= 0) break;
      kept[{std::min(v, w), std::max(v, w)}] = take;
      x += take;
    }
  }
  for (const EdgeEntry& e : h.edges()) {
    auto it = kept.find({e.u, e.v});
    int keep = it == kept.end() ? 0 : it->second;
    if (keep < e.multiplicity) tg.remove_edge(e.u, e.v, e.multiplicity - keep);
  }
  return {std::move(tg.graph), std::move(tg.trace)};
}

}  // namespace cyclepack
