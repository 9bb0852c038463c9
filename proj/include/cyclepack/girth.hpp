// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>

#include "cyclepack/multigraph.hpp"

namespace cyclepack {

// Shortest cycle of g using BFS from each vertex of the feedback vertex
// set f. Throws std::invalid_argument when f is not a feedback vertex set.
// `on_candidate`, if set, sees every candidate cycle before the minimum
// is taken.
std::optional<Cycle> shortest_cycle_with_fvs(
    const MultiGraph& g, const VertexSet& f,
    const std::function<void(const Cycle&)>& on_candidate = {});

}  // namespace cyclepack
