// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclepack/multigraph.hpp"

namespace cyclepack {

// Smallest integer c >= 2 with c >= 150 * log2(c).
std::int64_t theorem2_constant();

// Size bound c * k * log_term(k) for the feedback vertex set branch.
std::int64_t fvs_bound(std::int64_t c, int k);

struct EpConfig {
  // 0 selects theorem2_constant(). Any other value is a test-only
  // override; the certification of the result does not depend on it.
  std::int64_t c_override = 0;

  std::int64_t c() const;
};

struct EpOutcome {
  std::optional<Packing> cycles;
  VertexSet fvs;
  // Which branch produced the answer: acyclic, shortest, witnesses, fvs,
  // compression, compression-fallback.
  std::string route;

  bool has_cycles() const { return cycles.has_value(); }
};

// Subgraph H (same ids) with all degrees in {2,3} such that every
// component of G - V(H) sees at most one degree-2 vertex of H. nullopt for
// acyclic graphs.
std::optional<MultiGraph> maximal_deg23_subgraph(const MultiGraph& g);

// Either k vertex-disjoint cycles or a feedback vertex set of size at most
// fvs_bound(c, k).
EpOutcome cycles_or_fvs(const MultiGraph& g, int k, const EpConfig& cfg = {});

// Cubic multigraph whose edges stand for paths of the original graph.
class CubicGraph {
 public:
  struct Edge {
    VertexId u = -1, v = -1;
    std::vector<VertexId> path;  // original vertices from u to v
    bool alive = false;
  };

  // One cycle as alternating vertices and edge ids: edges[i] joins
  // verts[i] and verts[i + 1] (cyclically).
  struct EdgeCycle {
    std::vector<VertexId> verts;
    std::vector<int> edges;
  };

  // Edge ids of the previous graph that make up a new edge, in order
  // from its u to its v.
  using Expansion = std::map<int, std::vector<int>>;

  int add_edge(VertexId u, VertexId v, std::vector<VertexId> path);
  void remove_edge(int id);
  void remove_vertex(VertexId v);
  void add_vertex(VertexId v) { incident_[v]; }

  const Edge& edge(int id) const { return edges_.at(id); }
  bool has_vertex(VertexId v) const { return incident_.count(v) > 0; }
  std::size_t num_vertices() const { return incident_.size(); }
  std::vector<VertexId> vertices() const;
  // Incident edge ids; a loop is listed once.
  const std::vector<int>& incident(VertexId v) const { return incident_.at(v); }
  int degree(VertexId v) const;
  int multiplicity(VertexId a, VertexId b) const;
  std::vector<VertexId> neighbors(VertexId v) const;

  MultiGraph as_multigraph() const;
  // Picks concrete edges for a vertex cycle of as_multigraph().
  EdgeCycle bind(const Cycle& c, const std::set<int>& exclude = {}) const;
  // Path in the original graph traced by an edge cycle.
  Cycle expand(const EdgeCycle& c) const;
  // Rewrites a cycle of this graph as one of `previous`, given the
  // expansion recorded by the step that produced this graph.
  EdgeCycle lift_step(const EdgeCycle& c, const CubicGraph& previous,
                      const Expansion& exp) const;

 private:
  std::vector<Edge> edges_;
  std::map<VertexId, std::vector<int>> incident_;
};

// Contracts the degree-2 vertices of H, leaving its degree-3 vertices.
CubicGraph cubic_core(const MultiGraph& h);

struct CompressionStep {
  std::string kind;  // loop, triple, double, split
  CubicGraph::Expansion expansion;
};

// One shrinking step removing two vertices, with the lowest vertex as the
// pivot. Returns nullopt if the graph is empty.
std::optional<CompressionStep> compress_once(CubicGraph& h);

// Repeatedly takes a shortest cycle and drops its vertices. nullopt if
// fewer than k cycles turn up.
std::optional<std::vector<CubicGraph::EdgeCycle>> greedy_extract(
    const CubicGraph& h, int k);

}  // namespace cyclepack
