// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/graph_io.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace cyclepack {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t to_int(std::string_view w, int line) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || p != w.data() + w.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(w) + "'");
  }
  return v;
}

}  // namespace

MultiGraph parse_graph(std::string_view text) {
  MultiGraph g;
  std::optional<std::int64_t> n, m;
  std::int64_t seen = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto w = split_words(line);
    if (w.empty() || w[0] == "c") continue;
    if (w[0] == "p") {
      if (n) throw ParseError(line_no, "duplicate header");
      if (w.size() != 4 || w[1] != "cycp") throw ParseError(line_no, "malformed header");
      n = to_int(w[2], line_no);
      m = to_int(w[3], line_no);
      if (*n < 0 || *m < 0) throw ParseError(line_no, "negative count in header");
      if (*n > (1 << 30)) throw ParseError(line_no, "too many vertices");
      for (std::int64_t i = 0; i < *n; ++i) g.add_vertex();
      continue;
    }
    if (w[0] == "e") {
      if (!n) throw ParseError(line_no, "edge before header");
      if (w.size() != 3 && w.size() != 4) throw ParseError(line_no, "malformed edge line");
      std::int64_t u = to_int(w[1], line_no), v = to_int(w[2], line_no);
      std::int64_t mult = w.size() == 4 ? to_int(w[3], line_no) : 1;
      if (u < 1 || u > *n || v < 1 || v > *n) throw ParseError(line_no, "vertex index out of range");
      if (mult < 1) throw ParseError(line_no, "multiplicity must be positive");
      if (mult > (1 << 30)) throw ParseError(line_no, "multiplicity too large");
      g.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), static_cast<int>(mult));
      ++seen;
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(w[0]) + "'");
  }
  if (!n) throw ParseError(line_no, "missing header");
  if (seen != *m) {
    throw ParseError(line_no, "header announces " + std::to_string(*m) + " edge lines, found " +
                                  std::to_string(seen));
  }
  return g;
}

std::string emit_graph(const MultiGraph& g) {
  std::map<VertexId, int> index;
  for (VertexId v : g.vertices()) {
    int next = static_cast<int>(index.size()) + 1;
    index[v] = next;
  }
  auto edges = g.edges();
  std::ostringstream out;
  out << "p cycp " << index.size() << ' ' << edges.size() << '\n';
  for (const EdgeEntry& e : edges) {
    out << "e " << index[e.u] << ' ' << index[e.v];
    if (e.multiplicity > 1) out << ' ' << e.multiplicity;
    out << '\n';
  }
  return out.str();
}

}  // namespace cyclepack
