// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/graph_io.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cyclepack;
using namespace cyclepack::testing;

namespace {

int error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse a small file") {
  MultiGraph g = parse_graph("c two vertices\np cycp 3 3\ne 1 2 2\ne 3 3\n\ne 2 3\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.loops(2) == 1);
  CHECK(g.multiplicity(1, 2) == 1);
}

TEST_CASE("repeated edge lines add up") {
  MultiGraph g = parse_graph("p cycp 2 2\ne 1 2\ne 2 1 3\n");
  CHECK(g.multiplicity(0, 1) == 4);
}

TEST_CASE("parse errors carry the line number") {
  CHECK(error_line("p cycp 2 1\ne 1 3\n") == 2);
  CHECK(error_line("e 1 2\np cycp 2 1\n") == 1);
  CHECK(error_line("p cycp 2 1\np cycp 2 1\n") == 2);
  CHECK(error_line("p graph 2 1\n") == 1);
  CHECK(error_line("p cycp 2 1\ne 1 2 0\n") == 2);
  CHECK(error_line("p cycp 2 1\nx 1 2\n") == 2);
  CHECK(error_line("p cycp 2 1\ne 1\n") == 2);
  CHECK(error_line("c only a comment\n") > 0);
  CHECK(error_line("p cycp 2 2\ne 1 2\n") > 0);
  CHECK(error_line("p cycp 2 1\ne 1 2\n") == 0);
}

TEST_CASE("emit is canonical and round-trips") {
  MultiGraph g = make_graph(3, {{0, 1, 2}, {2, 2, 1}, {1, 2, 1}});
  std::string text = emit_graph(g);
  CHECK(text == "p cycp 3 3\ne 1 2 2\ne 2 3\ne 3 3\n");
  CHECK(parse_graph(text) == g);
}

TEST_CASE("emit compacts deleted ids") {
  MultiGraph g = cycle_graph(4);
  g.remove_vertex(1);
  MultiGraph h = parse_graph(emit_graph(g));
  CHECK(h.num_vertices() == 3);
  CHECK(h.num_edges() == 2);
  CHECK(emit_graph(h) == emit_graph(g));
}

TEST_CASE("random round trips") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    MultiGraph g = corpus_graph(i, 20);
    CHECK(parse_graph(emit_graph(g)) == g);
  }
}
