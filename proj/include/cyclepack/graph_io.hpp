// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cyclepack/multigraph.hpp"

namespace cyclepack {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//   c <comment>
//   p cycp <n> <m>
//   e <u> <v> [mult]     (1-based, u == v is a loop, m counts e lines)
// Vertex i of the file becomes id i - 1.
MultiGraph parse_graph(std::string_view text);

// Canonical form: live vertices renumbered 1..n in id order, one e line
// per pair sorted by (u, v), multiplicity written only when above one.
std::string emit_graph(const MultiGraph& g);

}  // namespace cyclepack
