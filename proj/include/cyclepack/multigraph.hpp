// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclepack {

using VertexId = std::int32_t;
using VertexSet = std::set<VertexId>;

// A cycle is a sequence of distinct vertices. Length 1 is a self-loop,
// length 2 a double edge.
using Cycle = std::vector<VertexId>;
using Packing = std::vector<Cycle>;

struct EdgeEntry {
  VertexId u;
  VertexId v;  // u <= v; u == v is a self-loop
  int multiplicity;
};

// Undirected multigraph over dense integer ids. Removing a vertex leaves a
// dead slot; ids are never handed out twice.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t n);

  VertexId add_vertex();
  // Revives (or creates) the slot `v`. Used to build subgraphs that keep
  // the ids of a parent graph.
  void insert_vertex(VertexId v);
  void remove_vertex(VertexId v);

  void add_edge(VertexId u, VertexId v, int count = 1);
  void remove_edge(VertexId u, VertexId v, int count = 1);
  void set_multiplicity(VertexId u, VertexId v, int m);

  bool has_vertex(VertexId v) const {
    return v >= 0 && v < capacity() && alive_[v];
  }
  // u == v gives the loop count.
  int multiplicity(VertexId u, VertexId v) const;
  int loops(VertexId v) const { return loops_.at(v); }
  int degree(VertexId v) const { return degree_.at(v); }
  // Neighbors other than v itself, with multiplicities.
  const std::map<VertexId, int>& adjacency(VertexId v) const {
    return adj_.at(v);
  }

  VertexId capacity() const { return static_cast<VertexId>(alive_.size()); }
  std::size_t num_vertices() const { return num_alive_; }
  // Number of edge copies, loops included.
  std::int64_t num_edges() const { return num_edges_; }
  std::vector<VertexId> vertices() const;
  std::vector<EdgeEntry> edges() const;
  bool is_simple() const;

  bool operator==(const MultiGraph& o) const;
  bool operator!=(const MultiGraph& o) const { return !(*this == o); }

  // Subgraph induced by `keep`, same ids.
  MultiGraph induced(const VertexSet& keep) const;
  MultiGraph without(const VertexSet& drop) const;

 private:
  void check_vertex(VertexId v, const char* what) const;

  std::vector<char> alive_;
  std::vector<std::map<VertexId, int>> adj_;
  std::vector<int> loops_;
  std::vector<int> degree_;
  std::size_t num_alive_ = 0;
  std::int64_t num_edges_ = 0;
};

std::string to_string(const Cycle& c);

// True iff `c` is a cycle of g.
bool is_valid_cycle(const MultiGraph& g, const Cycle& c);
std::string cycle_problem(const MultiGraph& g, const Cycle& c);

bool verify_packing(const MultiGraph& g, const Packing& p, int k);
bool is_fvs(const MultiGraph& g, const VertexSet& f);
bool is_acyclic(const MultiGraph& g);

// Ceil of log2(max(k, 2)).
int log_term(std::int64_t k);

}  // namespace cyclepack
