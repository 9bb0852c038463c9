// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclepack/multigraph.hpp"

namespace cyclepack {

using GenParams = std::map<std::string, std::int64_t>;

// Models and their parameters:
//   disjoint_cycles  count, len
//   gnm              n, m, optional multi (0/1: allow repeated pairs),
//                    optional loops (number of self-loops to add)
//   theta            strands, len (edges per strand)
//   grid             rows, cols
//   high_girth       n, girth, optional m (edge limit)
//   cubic            n (even): random 3-regular multigraph
// The result depends only on (model, params, seed).
MultiGraph generate(const std::string& model, const GenParams& params, std::uint64_t seed);

std::vector<std::string> generator_models();

// Uniform draw from [0, bound) that does not depend on the standard
// library's distribution implementation.
template <class Rng>
std::uint64_t bounded_draw(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace cyclepack
