// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/guess.hpp"

#include <algorithm>
#include <set>

namespace cyclepack {

namespace {

using Pair = std::pair<GuessObject, GuessObject>;

GuessObject vertex_object(VertexId v) { return {GuessObject::Kind::kVertex, v}; }
GuessObject path_object(int i) { return {GuessObject::Kind::kPath, i}; }

class Enumerator {
 public:
  Enumerator(const MultiGraph& g, const VertexSet& s, const CoreStructure& core,
             std::optional<std::int64_t> budget,
             const std::function<bool(const GuessInstance&)>& visit)
      : g_(g), s_(s), core_(core), budget_(budget), visit_(visit),
        s_list_(s.begin(), s.end()) {
    for (std::size_t i = 0; i < core.p_star.size(); ++i) {
      for (VertexId v : core.p_star[i]) path_of_[v] = static_cast<int>(i);
    }
    base_reduced_ = reduce(g.without(s)).reduced.num_vertices();
  }

  EnumerationStatus run() {
    const std::size_t n = s_list_.size();
    if (n > 20) throw std::invalid_argument("enumerate_instances: S too large");
    for (std::uint32_t mask = 0; mask < (1u << n) && !halt_; ++mask) {
      deleted_.clear();
      used_.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) {
          deleted_.insert(s_list_[i]);
        } else {
          used_.push_back(s_list_[i]);
        }
      }
      options_.clear();
      bool feasible = true;
      for (VertexId v : used_) {
        options_.push_back(candidate_pairs(v));
        feasible = feasible && !options_.back().empty();
      }
      if (!feasible) continue;
      assign_.clear();
      assign_rec(0);
    }
    return status_;
  }

 private:
  std::vector<Pair> candidate_pairs(VertexId v) const {
    std::set<GuessObject> cands;
    std::set<VertexId> used(used_.begin(), used_.end());
    for (auto [w, m] : g_.adjacency(v)) {
      if (s_.count(w)) {
        if (used.count(w)) cands.insert(vertex_object(w));
      } else if (auto it = path_of_.find(w); it != path_of_.end()) {
        cands.insert(path_object(it->second));
      } else {
        cands.insert(vertex_object(w));
      }
    }
    std::vector<GuessObject> list(cands.begin(), cands.end());
    std::vector<Pair> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i; j < list.size(); ++j) {
        if (i == j) {
          const GuessObject& o = list[i];
          if (o.kind == GuessObject::Kind::kVertex) {
            if (g_.multiplicity(v, o.id) < 2) continue;
          } else {
            int copies = 0;
            for (VertexId p : core_.p_star[o.id]) copies += g_.multiplicity(v, p);
            if (copies < 2) continue;
          }
        }
        out.push_back({list[i], list[j]});
      }
    }
    if (g_.loops(v) > 0) out.push_back({vertex_object(v), vertex_object(v)});
    return out;
  }

  void assign_rec(std::size_t idx) {
    if (halt_) return;
    if (idx == used_.size()) {
      build_chains();
      return;
    }
    for (const Pair& p : options_[idx]) {
      assign_[used_[idx]] = p;
      assign_rec(idx + 1);
      if (halt_) return;
    }
  }

  const GuessObject& target(VertexId v, int side) const {
    const Pair& p = assign_.at(v);
    return side == 0 ? p.first : p.second;
  }
  bool is_self(VertexId v) const {
    return target(v, 0) == vertex_object(v);
  }
  bool is_link(VertexId v, int side) const {
    const GuessObject& o = target(v, side);
    return o.kind == GuessObject::Kind::kVertex && o.id != v && s_.count(o.id) > 0;
  }

  void build_chains() {
    // S-to-S guesses must agree from both sides
    for (VertexId v : used_) {
      for (int side = 0; side < 2; ++side) {
        if (!is_link(v, side)) continue;
        VertexId u = target(v, side).id;
        int there = (target(v, 0) == vertex_object(u)) + (target(v, 1) == vertex_object(u));
        int back = (target(u, 0) == vertex_object(v)) + (target(u, 1) == vertex_object(v));
        if (there != back) return;
      }
    }
    chains_.clear();
    ends_.clear();
    std::set<VertexId> seen;
    for (VertexId v0 : used_) {
      if (seen.count(v0) || is_self(v0)) continue;
      int ext = !is_link(v0, 0) ? 0 : (!is_link(v0, 1) ? 1 : -1);
      if (ext < 0) continue;
      GuessChain ch;
      ch.s_path.push_back(v0);
      seen.insert(v0);
      GuessEntry first{v0, ext}, last;
      VertexId cur = v0;
      int came = ext;
      while (true) {
        int out = 1 - came;
        if (!is_link(cur, out)) {
          last = {cur, out};
          break;
        }
        VertexId u = target(cur, out).id;
        int back = target(u, 0) == vertex_object(cur) ? 0 : 1;
        ch.s_path.push_back(u);
        seen.insert(u);
        cur = u;
        came = back;
      }
      chains_.push_back(std::move(ch));
      ends_.push_back({first, last});
    }
    for (VertexId v0 : used_) {
      if (seen.count(v0)) continue;
      GuessChain ch;
      ch.closed = true;
      ch.s_path.push_back(v0);
      seen.insert(v0);
      if (!is_self(v0)) {
        VertexId cur = v0;
        int came = 0;
        while (true) {
          VertexId u = target(cur, 1 - came).id;
          if (u == v0) break;
          int back = target(u, 0) == vertex_object(cur) ? 0 : 1;
          ch.s_path.push_back(u);
          seen.insert(u);
          cur = u;
          came = back;
        }
      }
      ch.a = ch.b = v0;
      chains_.push_back(std::move(ch));
      ends_.push_back({{v0, 0}, {v0, 1}});
    }

    entries_.clear();
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      if (chains_[c].closed) continue;
      for (const GuessEntry& e : {ends_[c].first, ends_[c].second}) {
        const GuessObject& o = target(e.first, e.second);
        if (o.kind == GuessObject::Kind::kPath) entries_[o.id].push_back(e);
      }
    }
    paths_.assign(entries_.begin(), entries_.end());
    order_.clear();
    shared_.clear();
    resolved_.clear();
    order_rec(0);
  }

  bool adjacent(VertexId v, VertexId p, int need) const {
    return g_.multiplicity(v, p) >= need;
  }

  // Places the entries of one path by the greedy rule; false if it fails.
  bool place(int path, const std::vector<GuessEntry>& ents, const std::vector<bool>& sh) {
    const auto& pv = core_.p_star[path];
    int last = -1;
    std::size_t i = 0;
    while (i < ents.size()) {
      bool pair = i + 1 < ents.size() && sh[i + 1];
      VertexId v1 = ents[i].first;
      VertexId v2 = pair ? ents[i + 1].first : v1;
      int found = -1;
      for (int idx = last + 1; idx < static_cast<int>(pv.size()); ++idx) {
        bool ok = pair ? (v1 == v2 ? adjacent(v1, pv[idx], 2)
                                   : adjacent(v1, pv[idx], 1) && adjacent(v2, pv[idx], 1))
                       : adjacent(v1, pv[idx], 1);
        if (ok) {
          found = idx;
          break;
        }
      }
      if (found < 0) return false;
      resolved_[ents[i]] = pv[found];
      if (pair) resolved_[ents[i + 1]] = pv[found];
      last = found;
      i += pair ? 2 : 1;
    }
    return true;
  }

  void order_rec(std::size_t pi) {
    if (halt_) return;
    if (pi == paths_.size()) {
      emit();
      return;
    }
    int path = paths_[pi].first;
    std::vector<GuessEntry> ents = paths_[pi].second;
    auto by_vertex = [](const GuessEntry& a, const GuessEntry& b) { return a.first < b.first; };
    std::sort(ents.begin(), ents.end());
    do {
      std::vector<bool> sh(ents.size(), false);
      share_rec(pi, path, ents, sh, 1);
      if (halt_) return;
    } while (std::next_permutation(ents.begin(), ents.end(), by_vertex));
  }

  void share_rec(std::size_t pi, int path, const std::vector<GuessEntry>& ents,
                 std::vector<bool>& sh, std::size_t pos) {
    if (halt_) return;
    if (pos >= ents.size()) {
      auto saved = resolved_;
      if (place(path, ents, sh)) {
        order_[path] = ents;
        shared_[path] = sh;
        order_rec(pi + 1);
      }
      resolved_ = std::move(saved);
      return;
    }
    sh[pos] = false;
    share_rec(pi, path, ents, sh, pos + 1);
    if (!sh[pos - 1]) {
      sh[pos] = true;
      share_rec(pi, path, ents, sh, pos + 1);
      sh[pos] = false;
    }
  }

  VertexId end_vertex(const GuessEntry& e) const {
    const GuessObject& o = target(e.first, e.second);
    if (o.kind == GuessObject::Kind::kVertex) return o.id;
    return resolved_.at(e);
  }

  void emit() {
    if (budget_ && status_.yielded >= *budget_) {
      status_.budget_exhausted = true;
      halt_ = true;
      return;
    }
    GuessInstance inst;
    inst.deleted = deleted_;
    inst.neighbor_assign = assign_;
    inst.order = order_;
    inst.shared = shared_;
    inst.resolved = resolved_;
    inst.chains = chains_;
    for (std::size_t c = 0; c < inst.chains.size(); ++c) {
      if (inst.chains[c].closed) continue;
      inst.chains[c].a = end_vertex(ends_[c].first);
      inst.chains[c].b = end_vertex(ends_[c].second);
    }
    std::set<VertexId> reps;
    for (const auto& ch : inst.chains) {
      if (ch.closed) reps.insert(ch.s_path.front());
    }
    TracedGraph tg(g_);
    for (VertexId v : s_list_) {
      if (!reps.count(v)) {
        tg.delete_vertex(v);
        continue;
      }
      std::vector<std::pair<VertexId, int>> inc(tg.graph.adjacency(v).begin(),
                                                tg.graph.adjacency(v).end());
      for (auto [w, m] : inc) tg.remove_edge(v, w, m);
      if (tg.graph.loops(v) > 0) tg.remove_edge(v, v, tg.graph.loops(v));
    }
    for (std::size_t c = 0; c < inst.chains.size(); ++c) {
      const auto& ch = inst.chains[c];
      tg.add_edge(ch.a, ch.b, static_cast<int>(c));
    }
    inst.before_reduce = tg.graph;
    inst.prefix = std::move(tg.trace);
    inst.reduction = reduce(inst.before_reduce);
    inst.g_prime = inst.reduction.reduced;
    inst.trace = inst.prefix;
    inst.trace.append(inst.reduction.trace);
    if (inst.g_prime.num_vertices() > base_reduced_ + 2 * inst.chains.size()) {
      throw std::logic_error("guessed instance exceeds its size bound");
    }
    ++status_.yielded;
    if (!visit_(inst)) {
      status_.stopped = true;
      halt_ = true;
    }
  }

  const MultiGraph& g_;
  const VertexSet& s_;
  const CoreStructure& core_;
  std::optional<std::int64_t> budget_;
  const std::function<bool(const GuessInstance&)>& visit_;
  std::vector<VertexId> s_list_;
  std::map<VertexId, int> path_of_;
  std::size_t base_reduced_ = 0;

  EnumerationStatus status_;
  bool halt_ = false;

  VertexSet deleted_;
  std::vector<VertexId> used_;
  std::vector<std::vector<Pair>> options_;
  std::map<VertexId, Pair> assign_;
  std::vector<GuessChain> chains_;
  std::vector<std::pair<GuessEntry, GuessEntry>> ends_;
  std::map<int, std::vector<GuessEntry>> entries_;
  std::vector<std::pair<int, std::vector<GuessEntry>>> paths_;
  std::map<int, std::vector<GuessEntry>> order_;
  std::map<int, std::vector<bool>> shared_;
  std::map<GuessEntry, VertexId> resolved_;
};

}  // namespace

EnumerationStatus enumerate_instances(
    const MultiGraph& g, int k, const VertexSet& s, const CoreStructure& core,
    std::optional<std::int64_t> budget,
    const std::function<bool(const GuessInstance&)>& visit) {
  if (k < 1) throw std::invalid_argument("enumerate_instances: k must be >= 1");
  if (budget && *budget < 1) throw std::invalid_argument("enumerate_instances: budget must be >= 1");
  Enumerator e(g, s, core, budget, visit);
  return e.run();
}

Packing lift_packing(const GuessInstance& inst, const Packing& p) {
  for (const Cycle& c : p) {
    std::string why = cycle_problem(inst.g_prime, c);
    if (!why.empty()) throw std::invalid_argument("lift_packing: " + why);
  }
  // chains standing behind each added pair
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> added;
  for (std::size_t c = 0; c < inst.chains.size(); ++c) {
    const auto& ch = inst.chains[c];
    added[{std::min(ch.a, ch.b), std::max(ch.a, ch.b)}].push_back(static_cast<int>(c));
  }
  const MultiGraph& h = inst.before_reduce;
  std::set<int> spent;
  auto original = [&](VertexId a, VertexId b) {
    auto it = added.find({std::min(a, b), std::max(a, b)});
    int extra = it == added.end() ? 0 : static_cast<int>(it->second.size());
    return h.multiplicity(a, b) - extra;
  };
  auto take_chain = [&](VertexId a, VertexId b) {
    for (int c : added.at({std::min(a, b), std::max(a, b)})) {
      if (!spent.count(c)) {
        spent.insert(c);
        return c;
      }
    }
    throw std::logic_error("lift_packing: added edge used twice");
  };
  // S vertices met when crossing chain c from x towards the other end
  auto crossing = [&](int c, VertexId x) {
    const auto& ch = inst.chains[c];
    std::vector<VertexId> s = ch.s_path;
    if (ch.closed) return s;
    if (ch.a != x) std::reverse(s.begin(), s.end());
    return s;
  };

  Packing out;
  for (const Cycle& c : p) {
    Cycle inner = lift_cycle(inst.reduction, c);
    Cycle lifted;
    if (inner.size() == 1) {
      VertexId a = inner[0];
      if (original(a, a) >= 1) {
        lifted = inner;
      } else {
        int ch = take_chain(a, a);
        if (inst.chains[ch].closed) {
          lifted = inst.chains[ch].s_path;
        } else {
          lifted = {a};
          auto s = crossing(ch, a);
          lifted.insert(lifted.end(), s.begin(), s.end());
        }
      }
    } else if (inner.size() == 2) {
      VertexId a = inner[0], b = inner[1];
      int direct = std::min(original(a, b), 2);
      lifted = {a};
      if (direct == 0) {
        auto s = crossing(take_chain(a, b), a);
        lifted.insert(lifted.end(), s.begin(), s.end());
      }
      lifted.push_back(b);
      if (direct < 2) {
        auto s = crossing(take_chain(a, b), b);
        lifted.insert(lifted.end(), s.begin(), s.end());
      }
    } else {
      for (std::size_t i = 0; i < inner.size(); ++i) {
        VertexId a = inner[i], b = inner[(i + 1) % inner.size()];
        lifted.push_back(a);
        if (original(a, b) < 1) {
          auto s = crossing(take_chain(a, b), a);
          lifted.insert(lifted.end(), s.begin(), s.end());
        }
      }
    }
    out.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace cyclepack
