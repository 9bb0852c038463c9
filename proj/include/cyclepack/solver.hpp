// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cyclepack/multigraph.hpp"

namespace cyclepack {

enum class Strategy { kPaper, kIe, kOracle, kAuto };
enum class Verdict { kYes, kNo, kInconclusive };

Strategy parse_strategy(const std::string& s);
std::string to_string(Strategy s);
std::string to_string(Verdict v);

struct SolveConfig {
  Strategy strategy = Strategy::kAuto;
  std::optional<std::int64_t> budget;  // cap on guessed instances
  std::int64_t c_override = 0;         // test-only constant override
  bool search = true;                  // false: decide without a packing
  int threads = 1;
  // auto: graphs whose simplified form has at most this many vertices go
  // straight to the exact solver
  std::size_t auto_ie_limit = 16;
};

struct SolveStats {
  std::int64_t instances_tried = 0;
  std::size_t s_size = 0;
  std::size_t reduce_size = 0;
  int g = 0;
  double elapsed_ms = 0;
  Strategy used = Strategy::kAuto;
  std::string early_exit;               // set when a packing was found before guessing
  std::optional<bool> girth_certified;  // brute-force girth check of the reduced core
  bool s_bound_ok = true;               // |S| < g k
  bool core_bound_ok = true;            // size bound on the reduced core
  std::int64_t constant = 0;
};

struct Decision {
  Verdict verdict = Verdict::kNo;
  int k = 0;
  std::optional<Packing> packing;
  SolveStats stats;
};

// Decides whether g has k vertex-disjoint cycles. A yes with search
// enabled always carries a packing verified against g.
Decision solve(const MultiGraph& g, int k, const SolveConfig& cfg = {});

// Report with 1-based vertex numbers matching the input file. Timing is
// the only field that varies between identical runs.
std::string report_json(const Decision& d, const SolveConfig& cfg, int indent = -1);

}  // namespace cyclepack
