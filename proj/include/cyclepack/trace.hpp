// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "cyclepack/multigraph.hpp"

namespace cyclepack {

// Each event carries enough of the pre-state that it can be replayed and
// that cycles can be carried backwards through it without the graph.
struct VertexDeleted {
  VertexId v;
};
struct EdgeRemoved {
  VertexId u, v;
  int count;
};
struct EdgeAdded {
  VertexId u, v;
  int label;
  int pre_mult;  // copies of {u,v} present before the addition
};
struct MultiplicityClamped {
  VertexId u, v;
  int old_mult, new_mult;
};
struct EdgeContracted {
  VertexId survivor, removed;
  // adjacency of both endpoints just before the contraction
  std::map<VertexId, int> survivor_adj, removed_adj;
  int survivor_loops = 0, removed_loops = 0;
};
// One copy of {u,v} (a loop when u == v) replaced by u - inserted... - v.
struct EdgeSubdivided {
  VertexId u, v;
  std::vector<VertexId> inserted;
};
// A degree-2 vertex `removed` with neighbors a, b replaced by an edge {a,b}.
struct PathCollapsed {
  VertexId a, b, removed;
  std::vector<VertexId> origin;  // original vertex path the new copy stands for
  int pre_mult;                  // copies of {a,b} before the collapse
};

using TraceEvent =
    std::variant<VertexDeleted, EdgeRemoved, EdgeAdded, MultiplicityClamped,
                 EdgeContracted, EdgeSubdivided, PathCollapsed>;

class LiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void apply_event(MultiGraph& g, const TraceEvent& e);

// Carries a cycle of the graph after `e` to the graph before `e`.
Cycle lift_through(const TraceEvent& e, const Cycle& c);

class TransformTrace {
 public:
  std::vector<TraceEvent> events;

  bool empty() const { return events.empty(); }
  std::size_t size() const { return events.size(); }
  void append(const TransformTrace& other);

  MultiGraph replay(MultiGraph g) const;

  // Surviving vertex for every id below `capacity`, or -1 when gone.
  std::vector<VertexId> representatives(VertexId capacity) const;
  VertexId representative(VertexId v) const;

  Cycle lift(const Cycle& c) const;
  Packing lift(const Packing& p) const;
};

// A graph paired with the log of everything done to it.
class TracedGraph {
 public:
  TracedGraph() = default;
  explicit TracedGraph(MultiGraph g) : graph(std::move(g)) {}

  MultiGraph graph;
  TransformTrace trace;

  void record(TraceEvent e);

  void delete_vertex(VertexId v);
  void remove_edge(VertexId u, VertexId v, int count = 1);
  void add_edge(VertexId u, VertexId v, int label = 0);
  void clamp(VertexId u, VertexId v, int new_mult);
  void contract(VertexId survivor, VertexId removed);
  std::vector<VertexId> subdivide(VertexId u, VertexId v, int pieces);
  void collapse(VertexId removed, std::vector<VertexId> origin = {});
};

std::pair<MultiGraph, TransformTrace> contract_edge(const MultiGraph& g,
                                                    VertexId u, VertexId v);

Cycle lift_cycle_through_contraction(const TransformTrace& trace,
                                     const Cycle& c);

// Thins a dense graph down to the edge budget
// (2*c_ep*k*log_term(k) + 1) * |V|. Multiplicities are first clamped to 2
// and loops to 1. `order` fixes the scan order (default: ascending ids).
std::pair<MultiGraph, TransformTrace> discard_excess_edges(
    const MultiGraph& g, int k, std::int64_t c_ep,
    const std::optional<std::vector<VertexId>>& order = std::nullopt);

std::int64_t discard_cap(std::size_t n, int k, std::int64_t c_ep);

}  // namespace cyclepack
