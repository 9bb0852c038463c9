// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cyclepack/multigraph.hpp"

namespace cyclepack {

using VertexFilter = std::function<bool(VertexId)>;

// Connected components of the subgraph induced by vertices passing `keep`,
// each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const MultiGraph& g,
                                              const VertexFilter& keep);

// Some cycle inside the induced subgraph on `members`, preferring loops,
// then double edges.
std::optional<Cycle> find_cycle_within(const MultiGraph& g,
                                       const std::vector<VertexId>& members,
                                       const VertexFilter& inside);

// Shortest path (as vertices) running only through vertices accepted by
// `inside`, from any source to any target.
std::optional<std::vector<VertexId>> path_within(
    const MultiGraph& g, const std::vector<VertexId>& sources,
    const std::vector<char>& is_target, const VertexFilter& inside);

}  // namespace cyclepack
