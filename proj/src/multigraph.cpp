// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cyclepack {

MultiGraph::MultiGraph(std::size_t n)
    : alive_(n, 1), adj_(n), loops_(n, 0), degree_(n, 0), num_alive_(n) {}

VertexId MultiGraph::add_vertex() {
  VertexId v = capacity();
  alive_.push_back(1);
  adj_.emplace_back();
  loops_.push_back(0);
  degree_.push_back(0);
  ++num_alive_;
  return v;
}

void MultiGraph::insert_vertex(VertexId v) {
  if (v < 0) throw std::invalid_argument("negative vertex id");
  if (v >= capacity()) {
    std::size_t n = static_cast<std::size_t>(v) + 1;
    alive_.resize(n, 0);
    adj_.resize(n);
    loops_.resize(n, 0);
    degree_.resize(n, 0);
  }
  if (!alive_[v]) {
    alive_[v] = 1;
    ++num_alive_;
  }
}

void MultiGraph::check_vertex(VertexId v, const char* what) const {
  if (!has_vertex(v)) {
    throw std::invalid_argument(std::string(what) + ": vertex " +
                                std::to_string(v) + " not in graph");
  }
}

void MultiGraph::remove_vertex(VertexId v) {
  check_vertex(v, "remove_vertex");
  for (auto [u, m] : adj_[v]) {
    adj_[u].erase(v);
    degree_[u] -= m;
    num_edges_ -= m;
  }
  num_edges_ -= loops_[v];
  adj_[v].clear();
  loops_[v] = 0;
  degree_[v] = 0;
  alive_[v] = 0;
  --num_alive_;
}

void MultiGraph::add_edge(VertexId u, VertexId v, int count) {
  check_vertex(u, "add_edge");
  check_vertex(v, "add_edge");
  if (count < 0) throw std::invalid_argument("add_edge: negative count");
  if (count == 0) return;
  if (u == v) {
    loops_[u] += count;
    degree_[u] += 2 * count;
  } else {
    adj_[u][v] += count;
    adj_[v][u] += count;
    degree_[u] += count;
    degree_[v] += count;
  }
  num_edges_ += count;
}

void MultiGraph::remove_edge(VertexId u, VertexId v, int count) {
  if (count < 0) throw std::invalid_argument("remove_edge: negative count");
  if (multiplicity(u, v) < count) {
    throw std::invalid_argument("remove_edge: edge {" + std::to_string(u) +
                                "," + std::to_string(v) +
                                "} has too few copies");
  }
  set_multiplicity(u, v, multiplicity(u, v) - count);
}

void MultiGraph::set_multiplicity(VertexId u, VertexId v, int m) {
  check_vertex(u, "set_multiplicity");
  check_vertex(v, "set_multiplicity");
  if (m < 0) throw std::invalid_argument("set_multiplicity: negative");
  int old = multiplicity(u, v);
  int d = m - old;
  if (u == v) {
    loops_[u] = m;
    degree_[u] += 2 * d;
  } else {
    if (m == 0) {
      adj_[u].erase(v);
      adj_[v].erase(u);
    } else {
      adj_[u][v] = m;
      adj_[v][u] = m;
    }
    degree_[u] += d;
    degree_[v] += d;
  }
  num_edges_ += d;
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return 0;
  if (u == v) return loops_[u];
  auto it = adj_[u].find(v);
  return it == adj_[u].end() ? 0 : it->second;
}

std::vector<VertexId> MultiGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(num_alive_);
  for (VertexId v = 0; v < capacity(); ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

std::vector<EdgeEntry> MultiGraph::edges() const {
  std::vector<EdgeEntry> out;
  for (VertexId u = 0; u < capacity(); ++u) {
    if (!alive_[u]) continue;
    if (loops_[u] > 0) out.push_back({u, u, loops_[u]});
    for (auto [v, m] : adj_[u]) {
      if (v > u) out.push_back({u, v, m});
    }
  }
  return out;
}

bool MultiGraph::is_simple() const {
  for (VertexId u = 0; u < capacity(); ++u) {
    if (!alive_[u]) continue;
    if (loops_[u] > 0) return false;
    for (auto [v, m] : adj_[u]) {
      if (m > 1) return false;
    }
  }
  return true;
}

bool MultiGraph::operator==(const MultiGraph& o) const {
  if (num_alive_ != o.num_alive_ || num_edges_ != o.num_edges_) return false;
  VertexId n = std::max(capacity(), o.capacity());
  for (VertexId v = 0; v < n; ++v) {
    if (has_vertex(v) != o.has_vertex(v)) return false;
    if (!has_vertex(v)) continue;
    if (loops_[v] != o.loops_[v] || adj_[v] != o.adj_[v]) return false;
  }
  return true;
}

MultiGraph MultiGraph::induced(const VertexSet& keep) const {
  MultiGraph h;
  for (VertexId v : keep) {
    if (has_vertex(v)) h.insert_vertex(v);
  }
  for (VertexId u : keep) {
    if (!has_vertex(u)) continue;
    if (loops_[u] > 0) h.add_edge(u, u, loops_[u]);
    for (auto [v, m] : adj_[u]) {
      if (v > u && keep.count(v)) h.add_edge(u, v, m);
    }
  }
  if (h.capacity() < capacity()) {
    // keep capacity aligned so ids from this graph stay addressable
    VertexId last = capacity() - 1;
    bool had = h.has_vertex(last);
    h.insert_vertex(last);
    if (!had) h.remove_vertex(last);
  }
  return h;
}

MultiGraph MultiGraph::without(const VertexSet& drop) const {
  MultiGraph h = *this;
  for (VertexId v : drop) {
    if (h.has_vertex(v)) h.remove_vertex(v);
  }
  return h;
}

std::string to_string(const Cycle& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
  os << ")";
  return os.str();
}

std::string cycle_problem(const MultiGraph& g, const Cycle& c) {
  if (c.empty()) return "empty cycle";
  std::vector<VertexId> s(c);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    return "repeated vertex in " + to_string(c);
  }
  for (VertexId v : c) {
    if (!g.has_vertex(v)) return "vertex " + std::to_string(v) + " missing";
  }
  if (c.size() == 1) {
    return g.loops(c[0]) >= 1 ? "" : "no self-loop at " + std::to_string(c[0]);
  }
  if (c.size() == 2) {
    return g.multiplicity(c[0], c[1]) >= 2 ? "" : "2-cycle needs a double edge";
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    VertexId a = c[i], b = c[(i + 1) % c.size()];
    if (g.multiplicity(a, b) < 1) {
      return "missing edge {" + std::to_string(a) + "," + std::to_string(b) +
             "}";
    }
  }
  return "";
}

bool is_valid_cycle(const MultiGraph& g, const Cycle& c) {
  return cycle_problem(g, c).empty();
}

bool verify_packing(const MultiGraph& g, const Packing& p, int k) {
  if (static_cast<long long>(p.size()) < k) return false;
  std::set<VertexId> used;
  for (const Cycle& c : p) {
    if (!is_valid_cycle(g, c)) return false;
    for (VertexId v : c) {
      if (!used.insert(v).second) return false;
    }
  }
  return true;
}

namespace {

struct DisjointSets {
  std::vector<VertexId> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  VertexId find(VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool is_fvs(const MultiGraph& g, const VertexSet& f) {
  DisjointSets ds(static_cast<std::size_t>(g.capacity()));
  for (const EdgeEntry& e : g.edges()) {
    if (f.count(e.u) || f.count(e.v)) continue;
    if (e.u == e.v || e.multiplicity > 1) return false;
    if (!ds.unite(e.u, e.v)) return false;
  }
  return true;
}

bool is_acyclic(const MultiGraph& g) { return is_fvs(g, {}); }

int log_term(std::int64_t k) {
  std::int64_t x = std::max<std::int64_t>(k, 2);
  int r = 0;
  while ((std::int64_t{1} << r) < x) ++r;
  return r;
}

}  // namespace cyclepack
