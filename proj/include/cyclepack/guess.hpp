// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cyclepack/decompose.hpp"
#include "cyclepack/multigraph.hpp"
#include "cyclepack/reduce.hpp"
#include "cyclepack/trace.hpp"

namespace cyclepack {

// What a vertex of S is guessed to be next to on its solution cycle: a
// single vertex, or some vertex of one of the P* paths.
struct GuessObject {
  enum class Kind { kVertex, kPath };
  Kind kind = Kind::kVertex;
  int id = -1;  // vertex id or index into CoreStructure::p_star

  bool operator==(const GuessObject& o) const { return kind == o.kind && id == o.id; }
  bool operator<(const GuessObject& o) const {
    return kind != o.kind ? kind < o.kind : id < o.id;
  }
};

// A maximal run of consecutive solution vertices inside S. An open run
// is replaced by one edge between its outside neighbors a and b; a closed
// run (a cycle inside S) by a self-loop at its first vertex.
struct GuessChain {
  std::vector<VertexId> s_path;
  VertexId a = -1, b = -1;
  bool closed = false;
};

// (S vertex, side) where side 0 is the first and side 1 the second guess.
using GuessEntry = std::pair<VertexId, int>;

struct GuessInstance {
  MultiGraph g_prime;
  VertexSet deleted;
  std::map<VertexId, std::pair<GuessObject, GuessObject>> neighbor_assign;
  // per P* path: entries in guessed order and whether each entry shares
  // its vertex with the previous one
  std::map<int, std::vector<GuessEntry>> order;
  std::map<int, std::vector<bool>> shared;
  std::map<GuessEntry, VertexId> resolved;
  std::vector<GuessChain> chains;
  MultiGraph before_reduce;
  ReduceResult reduction;
  TransformTrace prefix;  // deletions, removed S edges, added chain edges
  TransformTrace trace;   // prefix followed by the reduction
};

struct EnumerationStatus {
  std::int64_t yielded = 0;
  bool budget_exhausted = false;  // stream was cut short by the budget
  bool stopped = false;           // the visitor asked to stop
};

// Streams the guessed instances one at a time. The visitor returns false
// to stop. With a budget, at most that many instances are produced and
// budget_exhausted reports whether more were left.
EnumerationStatus enumerate_instances(
    const MultiGraph& g, int k, const VertexSet& s, const CoreStructure& core,
    std::optional<std::int64_t> budget,
    const std::function<bool(const GuessInstance&)>& visit);

// Carries a packing of inst.g_prime back to g.
Packing lift_packing(const GuessInstance& inst, const Packing& p);

}  // namespace cyclepack
