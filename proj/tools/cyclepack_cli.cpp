// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "cyclepack/erdos_posa.hpp"
#include "cyclepack/generate.hpp"
#include "cyclepack/girth.hpp"
#include "cyclepack/graph_io.hpp"
#include "cyclepack/reduce.hpp"
#include "cyclepack/solver.hpp"
#include "json.hpp"

namespace cp = cyclepack;
using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

cp::MultiGraph load(const std::string& path) { return cp::parse_graph(read_input(path)); }

json one_based(const cp::Cycle& c) {
  json out = json::array();
  for (cp::VertexId v : c) out.push_back(v + 1);
  return out;
}

void print_cycle(const cp::Cycle& c) {
  for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << c[i] + 1;
  std::cout << '\n';
}

// Either a JSON array of cycles, a solve report, or one cycle per line.
cp::Packing load_packing(const std::string& path) {
  std::string text = read_input(path);
  cp::Packing p;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    json j = json::parse(text);
    if (j.is_object()) j = j.at("packing");
    if (j.is_null()) return p;
    for (const auto& c : j) {
      cp::Cycle cyc;
      for (const auto& v : c) cyc.push_back(v.get<cp::VertexId>() - 1);
      p.push_back(std::move(cyc));
    }
    return p;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string w;
    cp::Cycle cyc;
    while (ls >> w) {
      if (w == "c" && cyc.empty()) break;
      cyc.push_back(static_cast<cp::VertexId>(std::stol(w)) - 1);
    }
    if (!cyc.empty()) p.push_back(std::move(cyc));
  }
  return p;
}

cp::GenParams parse_params(const std::vector<std::string>& items) {
  cp::GenParams out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("parameter must be key=value: " + item);
    out[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
  }
  return out;
}

int exit_code(cp::Verdict v) { return v == cp::Verdict::kInconclusive ? 2 : 0; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex-disjoint cycle packing solver"};
  app.require_subcommand(1);

  std::string file = "-";
  int k = 1;
  std::string strategy = "auto";
  std::int64_t budget = 0;
  std::uint64_t seed = 0;
  std::int64_t c_override = 0;
  bool as_json = false;
  int threads = 1;

  auto add_solve_flags = [&](CLI::App* sub) {
    sub->add_option("file", file, "graph file, - for stdin")->required();
    sub->add_option("--k", k, "number of cycles")->check(CLI::PositiveNumber);
    sub->add_option("--strategy", strategy, "paper|ie|oracle|auto")
        ->check(CLI::IsMember({"paper", "ie", "oracle", "auto"}));
    sub->add_option("--budget", budget, "maximum number of guessed instances")
        ->check(CLI::PositiveNumber);
    sub->add_option("--c-override", c_override, "test-only Erdos-Posa constant");
    sub->add_option("--threads", threads, "worker threads for the exact solver");
    sub->add_flag("--json", as_json, "JSON report");
  };
  CLI::App* solve = app.add_subcommand("solve", "find k disjoint cycles");
  add_solve_flags(solve);
  CLI::App* decide = app.add_subcommand("decide", "decide without producing cycles");
  add_solve_flags(decide);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "apply the reduction rules");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_flag("--json", as_json);

  CLI::App* girth_cmd = app.add_subcommand("girth", "shortest cycle");
  girth_cmd->add_option("file", file)->required();
  girth_cmd->add_flag("--json", as_json);

  CLI::App* ep_cmd = app.add_subcommand("epfvs", "k disjoint cycles or a small feedback vertex set");
  ep_cmd->add_option("file", file)->required();
  ep_cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  ep_cmd->add_option("--c-override", c_override);
  ep_cmd->add_flag("--json", as_json);

  std::string model;
  std::vector<std::string> params;
  std::string output;
  CLI::App* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("--model", model)->required()->check(CLI::IsMember(cp::generator_models()));
  gen->add_option("--param", params, "key=value")->take_all();
  gen->add_option("--seed", seed);
  gen->add_option("-o,--output", output);

  std::string packing_file;
  CLI::App* verify = app.add_subcommand("verify", "check a packing");
  verify->add_option("file", file)->required();
  verify->add_option("--packing", packing_file)->required();
  verify->add_option("--k", k)->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", as_json);

  int count = 10;
  CLI::App* bench = app.add_subcommand("bench", "solve a batch of generated graphs");
  bench->add_option("--model", model)->required()->check(CLI::IsMember(cp::generator_models()));
  bench->add_option("--param", params)->take_all();
  bench->add_option("--seed", seed);
  bench->add_option("--count", count)->check(CLI::PositiveNumber);
  bench->add_option("--k", k)->check(CLI::PositiveNumber);
  bench->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"paper", "ie", "oracle", "auto"}));
  bench->add_option("--budget", budget)->check(CLI::PositiveNumber);
  bench->add_option("--c-override", c_override);
  bench->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  auto solve_config = [&](bool search) {
    cp::SolveConfig cfg;
    cfg.strategy = cp::parse_strategy(strategy);
    if (budget > 0) cfg.budget = budget;
    cfg.c_override = c_override;
    cfg.search = search;
    cfg.threads = threads;
    return cfg;
  };

  try {
    if (solve->parsed() || decide->parsed()) {
      cp::MultiGraph g = load(file);
      cp::SolveConfig cfg = solve_config(solve->parsed());
      cp::Decision d = cp::solve(g, k, cfg);
      if (as_json) {
        std::cout << cp::report_json(d, cfg) << '\n';
      } else {
        std::cout << cp::to_string(d.verdict) << '\n';
        if (d.packing) {
          for (const auto& c : *d.packing) print_cycle(c);
        }
      }
      return exit_code(d.verdict);
    }
    if (reduce_cmd->parsed()) {
      cp::MultiGraph g = load(file);
      cp::ReduceResult r = cp::reduce(g);
      if (as_json) {
        json j;
        j["vertices"] = r.reduced.num_vertices();
        j["edges"] = r.reduced.num_edges();
        json pre = json::array();
        for (cp::VertexId v : r.pre_image) pre.push_back(v + 1);
        j["pre_image"] = pre;
        j["graph"] = cp::emit_graph(r.reduced);
        std::cout << j.dump() << '\n';
      } else {
        std::cout << cp::emit_graph(r.reduced);
      }
      return 0;
    }
    if (girth_cmd->parsed()) {
      cp::MultiGraph g = load(file);
      auto vs = g.vertices();
      auto c = cp::shortest_cycle_with_fvs(g, cp::VertexSet(vs.begin(), vs.end()));
      if (as_json) {
        json j;
        j["girth"] = c ? json(c->size()) : json(nullptr);
        j["cycle"] = c ? one_based(*c) : json(nullptr);
        std::cout << j.dump() << '\n';
      } else if (c) {
        std::cout << c->size() << '\n';
        print_cycle(*c);
      } else {
        std::cout << "inf\n";
      }
      return 0;
    }
    if (ep_cmd->parsed()) {
      cp::MultiGraph g = load(file);
      cp::EpConfig cfg{c_override};
      cp::EpOutcome r = cp::cycles_or_fvs(g, k, cfg);
      if (as_json) {
        json j;
        j["route"] = r.route;
        j["c"] = cfg.c();
        if (r.cycles) {
          json cs = json::array();
          for (const auto& c : *r.cycles) cs.push_back(one_based(c));
          j["cycles"] = cs;
        } else {
          json f = json::array();
          for (cp::VertexId v : r.fvs) f.push_back(v + 1);
          j["fvs"] = f;
        }
        if (c_override != 0) j["watermark"] = "test-only constant override c=" + std::to_string(c_override);
        std::cout << j.dump() << '\n';
      } else if (r.cycles) {
        std::cout << "cycles\n";
        for (const auto& c : *r.cycles) print_cycle(c);
      } else {
        std::cout << "fvs\n";
        bool first = true;
        for (cp::VertexId v : r.fvs) {
          std::cout << (first ? "" : " ") << v + 1;
          first = false;
        }
        std::cout << '\n';
      }
      return 0;
    }
    if (gen->parsed()) {
      cp::MultiGraph g = cp::generate(model, parse_params(params), seed);
      std::string text = cp::emit_graph(g);
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write " + output);
        out << text;
      }
      return 0;
    }
    if (verify->parsed()) {
      cp::MultiGraph g = load(file);
      cp::Packing p = load_packing(packing_file);
      bool ok = cp::verify_packing(g, p, k);
      if (as_json) {
        json j;
        j["valid"] = ok;
        j["cycles"] = p.size();
        std::cout << j.dump() << '\n';
      } else {
        std::cout << (ok ? "valid" : "invalid") << '\n';
      }
      return ok ? 0 : 1;
    }
    if (bench->parsed()) {
      cp::GenParams gp = parse_params(params);
      cp::SolveConfig cfg = solve_config(true);
      json rows = json::array();
      int worst = 0;
      for (int i = 0; i < count; ++i) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        cp::MultiGraph g = cp::generate(model, gp, s);
        cp::Decision d = cp::solve(g, k, cfg);
        worst = std::max(worst, exit_code(d.verdict));
        if (as_json) {
          json row = json::parse(cp::report_json(d, cfg));
          row["seed"] = s;
          rows.push_back(row);
        } else {
          std::cout << "seed=" << s << " n=" << g.num_vertices() << " m=" << g.num_edges()
                    << ' ' << cp::to_string(d.verdict) << " instances=" << d.stats.instances_tried
                    << " ms=" << d.stats.elapsed_ms << '\n';
        }
      }
      if (as_json) std::cout << rows.dump() << '\n';
      return worst;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
