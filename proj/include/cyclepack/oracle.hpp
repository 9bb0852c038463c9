// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "cyclepack/multigraph.hpp"

namespace cyclepack {

struct OracleResult {
  int k_max = 0;
  Packing packing;
};

// Exact maximum number of vertex-disjoint cycles by exhaustive subset
// dynamic programming. Throws std::invalid_argument above `cap` vertices.
OracleResult max_cycle_packing_bruteforce(const MultiGraph& g, int cap = 12);

// Exact girth from a BFS at every vertex; nullopt for forests.
std::optional<int> girth_bruteforce(const MultiGraph& g, int cap = 60);

}  // namespace cyclepack
