// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "cyclepack/multigraph.hpp"
#include "cyclepack/trace.hpp"

namespace cyclepack {

using BigInt = boost::multiprecision::cpp_int;

struct Simplified {
  MultiGraph graph;
  TransformTrace trace;
};

// Simple graph with the same packing number: multiplicities are clamped
// to 2 (loops to 1), each loop becomes a triangle through two new vertices
// and one copy of each double edge gets a midpoint.
Simplified simplify_for_dp(const MultiGraph& g);

// Number of k-tuples of closed walks in gs - f, each of length >= 3 and
// given as a vertex sequence starting at a marked vertex, with `ell`
// vertex occurrences in total. gs must be simple.
BigInt count_Q(const MultiGraph& gs, const VertexSet& f, int k, int ell);

struct IeOptions {
  int threads = 0;  // 0: hardware concurrency
};

// Signed inclusion-exclusion sums for every k in 1..kmax over the simple
// graph gs (index 0 unused). The sum for k is positive iff gs has k
// vertex-disjoint cycles.
std::vector<BigInt> ie_signed_sums(const MultiGraph& gs, int kmax,
                                   const IeOptions& opt = {});

BigInt ie_signed_sum(const MultiGraph& g, int k, const IeOptions& opt = {});
bool ie_decide(const MultiGraph& g, int k, const IeOptions& opt = {});

// Decision-to-search by deleting vertices and then edges while the answer
// stays yes.
std::optional<Packing> ie_search(const MultiGraph& g, int k,
                                 const IeOptions& opt = {});

}  // namespace cyclepack
