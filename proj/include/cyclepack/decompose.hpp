// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclepack/erdos_posa.hpp"
#include "cyclepack/multigraph.hpp"
#include "cyclepack/trace.hpp"

namespace cyclepack {

// 7 for k <= 4, otherwise floor(48 log k / log log k) + 6 (base 2).
int girth_target(int k);

struct SSetResult {
  std::optional<Packing> packing;  // set when k short cycles were found
  VertexSet s;
};

// Removes short cycles of the reduced graph until its girth exceeds g.
SSetResult find_s_set(const MultiGraph& g, int k, int girth, const EpConfig& cfg = {});

struct CoreBound {
  double general;  // (2ckL)^(1 + 6/(g-6)) + 3ckL
  double target;   // 3ckL + 2ck L^1.5, meaningful when g == girth_target(k)
  std::size_t reduced_size;
  bool holds;
};
CoreBound core_size_bound(const MultiGraph& g, const VertexSet& s, int k,
                          int girth, std::int64_t c);
bool check_core_size_bound(const MultiGraph& g, const VertexSet& s, int k,
                           int girth, std::int64_t c = theorem2_constant());

struct PruneResult {
  MultiGraph graph;
  VertexSet deleted;
  std::vector<std::pair<VertexId, VertexId>> contracted;  // (survivor, removed)
  VertexSet marked;
  TransformTrace trace;
};

// Shrinks the parts of G - X with degree <= 1 while keeping the answer for
// every k.
PruneResult prune_low_degree(const MultiGraph& g, const VertexSet& x, int k);

// Vertices outside x whose degree in g - x is at most one.
std::size_t count_low_degree(const MultiGraph& g, const VertexSet& x);

struct CoreStructure {
  VertexSet s, r, t;
  VertexSet t_leq1, t2, t_geq3;
  std::vector<std::vector<VertexId>> paths;  // maximal degree-two paths of T
  VertexSet z_p;                             // path vertices seeing R
  std::vector<std::vector<VertexId>> p_star; // paths minus z_p
  std::size_t x_size = 0;                    // |S u R| used for pruning
};

struct CoreDecomposition {
  MultiGraph graph;  // pruned graph
  CoreStructure core;
  TransformTrace trace;
};

CoreDecomposition core_decomposition(const MultiGraph& g, const VertexSet& s, int k);

// Empty when every structural property holds.
std::vector<std::string> core_violations(const MultiGraph& g, const CoreStructure& c);

}  // namespace cyclepack
