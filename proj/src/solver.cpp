// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/solver.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cyclepack/decompose.hpp"
#include "cyclepack/erdos_posa.hpp"
#include "cyclepack/exact.hpp"
#include "cyclepack/guess.hpp"
#include "cyclepack/oracle.hpp"
#include "cyclepack/reduce.hpp"
#include "json.hpp"

namespace cyclepack {

Strategy parse_strategy(const std::string& s) {
  if (s == "paper") return Strategy::kPaper;
  if (s == "ie") return Strategy::kIe;
  if (s == "oracle") return Strategy::kOracle;
  if (s == "auto") return Strategy::kAuto;
  throw std::invalid_argument("unknown strategy '" + s + "'");
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kPaper: return "paper";
    case Strategy::kIe: return "ie";
    case Strategy::kOracle: return "oracle";
    case Strategy::kAuto: return "auto";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::string graph_key(const MultiGraph& g) {
  std::ostringstream out;
  for (VertexId v : g.vertices()) out << v << ',';
  out << '|';
  for (const EdgeEntry& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.multiplicity << ';';
  return out.str();
}

void certify(const MultiGraph& g, const Packing& p, int k) {
  if (!verify_packing(g, p, k)) {
    throw std::logic_error("solve: lifted packing failed verification");
  }
}

void solve_ie(const MultiGraph& g, int k, const SolveConfig& cfg, Decision& d) {
  IeOptions opt{cfg.threads};
  if (!cfg.search) {
    d.verdict = ie_decide(g, k, opt) ? Verdict::kYes : Verdict::kNo;
    return;
  }
  auto p = ie_search(g, k, opt);
  if (!p) {
    d.verdict = Verdict::kNo;
    return;
  }
  certify(g, *p, k);
  d.verdict = Verdict::kYes;
  d.packing = std::move(p);
}

void solve_oracle(const MultiGraph& g, int k, const SolveConfig& cfg, Decision& d) {
  OracleResult r = max_cycle_packing_bruteforce(g);
  if (r.k_max < k) {
    d.verdict = Verdict::kNo;
    return;
  }
  d.verdict = Verdict::kYes;
  if (cfg.search) {
    Packing p(r.packing.begin(), r.packing.begin() + k);
    certify(g, p, k);
    d.packing = std::move(p);
  }
}

void solve_paper(const MultiGraph& g, int k, const SolveConfig& cfg, Decision& d) {
  SolveStats& st = d.stats;
  EpConfig ep{cfg.c_override};
  st.constant = ep.c();
  auto [g1, discard_trace] = discard_excess_edges(g, k, ep.c());
  const int girth = girth_target(k);
  st.g = girth;

  SSetResult ss = find_s_set(g1, k, girth, ep);
  if (ss.packing) {
    st.early_exit = "short-cycles";
    Packing p = discard_trace.lift(*ss.packing);
    certify(g, p, k);
    d.verdict = Verdict::kYes;
    if (cfg.search) d.packing = std::move(p);
    return;
  }
  const VertexSet& s = ss.s;
  st.s_size = s.size();
  st.s_bound_ok = static_cast<std::int64_t>(s.size()) < static_cast<std::int64_t>(girth) * k;
  if (!st.s_bound_ok) throw std::logic_error("solve: |S| >= g k");

  ReduceResult core_red = reduce(g1.without(s));
  st.reduce_size = core_red.reduced.num_vertices();
  if (st.reduce_size <= 40) {
    auto gb = girth_bruteforce(core_red.reduced);
    st.girth_certified = !gb || *gb > girth;
    if (!*st.girth_certified) throw std::logic_error("solve: reduced core has short cycles");
  }
  st.core_bound_ok = core_size_bound(g1, s, k, girth, ep.c()).holds;
  if (!st.core_bound_ok) throw std::logic_error("solve: reduced core exceeds its size bound");

  CoreDecomposition cd = core_decomposition(g1, s, k);
  IeOptions opt{cfg.threads};
  std::map<std::string, bool> cache;
  std::optional<Packing> found;
  bool decided_yes = false;
  auto status = enumerate_instances(
      cd.graph, k, s, cd.core, cfg.budget, [&](const GuessInstance& inst) {
        ++st.instances_tried;
        std::string key = graph_key(inst.g_prime);
        auto it = cache.find(key);
        bool yes = it != cache.end() ? it->second
                                     : cache.emplace(key, ie_decide(inst.g_prime, k, opt)).first->second;
        if (!yes) return true;
        decided_yes = true;
        if (cfg.search) {
          auto p = ie_search(inst.g_prime, k, opt);
          if (!p) throw std::logic_error("solve: search disagrees with decision");
          Packing lifted = lift_packing(inst, *p);
          lifted = cd.trace.lift(lifted);
          found = discard_trace.lift(lifted);
        }
        return false;
      });
  if (decided_yes) {
    d.verdict = Verdict::kYes;
    if (found) {
      certify(g, *found, k);
      d.packing = std::move(found);
    }
  } else {
    d.verdict = status.budget_exhausted ? Verdict::kInconclusive : Verdict::kNo;
  }
}

}  // namespace

Decision solve(const MultiGraph& g, int k, const SolveConfig& cfg) {
  if (k < 1) throw std::invalid_argument("solve: k must be >= 1");
  if (cfg.budget && *cfg.budget < 1) throw std::invalid_argument("solve: budget must be >= 1");
  auto t0 = std::chrono::steady_clock::now();
  Decision d;
  d.k = k;
  Strategy s = cfg.strategy;
  if (s == Strategy::kAuto) {
    s = simplify_for_dp(g).graph.num_vertices() <= cfg.auto_ie_limit ? Strategy::kIe
                                                                     : Strategy::kPaper;
  }
  d.stats.used = s;
  switch (s) {
    case Strategy::kIe: solve_ie(g, k, cfg, d); break;
    case Strategy::kOracle: solve_oracle(g, k, cfg, d); break;
    default: solve_paper(g, k, cfg, d); break;
  }
  d.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return d;
}

std::string report_json(const Decision& d, const SolveConfig& cfg, int indent) {
  nlohmann::ordered_json j;
  j["decision"] = to_string(d.verdict);
  j["k"] = d.k;
  if (d.packing) {
    nlohmann::json p = nlohmann::json::array();
    for (const Cycle& c : *d.packing) {
      nlohmann::json cj = nlohmann::json::array();
      for (VertexId v : c) cj.push_back(v + 1);
      p.push_back(cj);
    }
    j["packing"] = p;
  } else {
    j["packing"] = nullptr;
  }
  nlohmann::ordered_json st;
  st["instances_tried"] = d.stats.instances_tried;
  st["s_size"] = d.stats.s_size;
  st["reduce_size"] = d.stats.reduce_size;
  st["g"] = d.stats.g;
  st["elapsed_ms"] = d.stats.elapsed_ms;
  st["strategy"] = to_string(d.stats.used);
  if (!d.stats.early_exit.empty()) st["early_exit"] = d.stats.early_exit;
  j["stats"] = st;
  if (cfg.c_override != 0) {
    j["watermark"] = "test-only constant override c=" + std::to_string(cfg.c_override);
  }
  return j.dump(indent);
}

}  // namespace cyclepack
