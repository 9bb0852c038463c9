// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cyclepack/multigraph.hpp"
#include "cyclepack/trace.hpp"

namespace cyclepack {

using Path = std::vector<VertexId>;

struct ReduceResult {
  MultiGraph reduced;
  VertexSet pre_image;
  // For each reduced pair (u <= v) the original path behind every copy,
  // oriented from u to v. A loop's path starts and ends at its vertex.
  std::map<std::pair<VertexId, VertexId>, std::vector<Path>> edge_origin;
  // Indexed by original id: surviving vertex or -1.
  std::vector<VertexId> representative;
  TransformTrace trace;
};

// Exhaustively applies: delete vertices of degree <= 1; bypass degree-2
// vertices without a self-loop; clamp parallel pairs to multiplicity 2.
ReduceResult reduce(const MultiGraph& g);

Cycle lift_cycle(const ReduceResult& res, const Cycle& c);
Packing lift_packing(const ReduceResult& res, const Packing& p);

// Maps a feedback vertex set of the input onto the reduced graph.
VertexSet project_fvs(const ReduceResult& res, const VertexSet& f);

}  // namespace cyclepack
