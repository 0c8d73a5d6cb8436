// Copyright 2026 The idcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "idcode/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "idcode/baselines.hpp"
#include "idcode/errors.hpp"
#include "idcode/generators.hpp"
#include "idcode/graph_io.hpp"
#include "idcode/harness.hpp"
#include "idcode/lex_dense.hpp"
#include "idcode/lex_sparse.hpp"

namespace idcode {
namespace {

using nlohmann::json;

constexpr int kJsonSchema = 1;
constexpr std::uint64_t kFallbackSeed = 1;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("IDCODE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("IDCODE_SEED is not an integer: ") + env);
    }
  }
  return kFallbackSeed;
}

struct GraphSource {
  std::string path = "-";
  std::string format = "auto";

  void attach(CLI::App* cmd) {
    cmd->add_option("graph", path, "Graph file, or - for standard input");
    cmd->add_option("--format", format, "auto, edgelist or dimacs")
        ->check(CLI::IsMember({"auto", "edgelist", "dimacs"}));
  }

  Graph load(std::istream& in) const {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
      std::ifstream file(path, std::ios::binary);
      if (!file) throw UsageError("cannot open '" + path + "'");
      text.assign(std::istreambuf_iterator<char>(file), {});
    }
    if (format == "edgelist") return parse_edge_list(text);
    if (format == "dimacs") return parse_dimacs(text);
    return parse_graph(text);
  }
};

Code parse_code(const std::string& text) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<Vertex> members;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.front() == '-') {
      throw UsageError("bad code member '" + token + "'");
    }
    members.push_back(static_cast<Vertex>(value));
  }
  return Code(std::move(members));
}

std::string join(const Code& c) {
  std::string out;
  for (Vertex v : c) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

json code_json(const Code& c) {
  return json(std::vector<Vertex>(c.begin(), c.end()));
}

// Prints a construction result. Exit code 2 on twins.
int report(std::ostream& out, bool as_json, const Graph& g, const RunOutcome& outcome,
           const std::string& algorithm, const std::string& ordering) {
  if (as_json) {
    json doc = {{"schema", kJsonSchema},
                {"n", g.n()},
                {"algorithm", algorithm},
                {"ordering", ordering}};
    if (outcome.has_code()) {
      doc["code"] = code_json(outcome.code());
      doc["cardinality"] = outcome.code().size();
      doc["verified"] = is_identifying_code(g, outcome.code());
    } else {
      doc["twins"] = {outcome.twins().k, outcome.twins().j};
    }
    out << doc.dump() << '\n';
  } else if (outcome.has_code()) {
    out << join(outcome.code()) << '\n'
        << "cardinality " << outcome.code().size() << '\n';
  } else {
    out << "not twin-free: " << outcome.twins().k << ' ' << outcome.twins().j << '\n';
  }
  return outcome.has_code() ? kExitOk : kExitTwins;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Identifying codes for undirected graphs", "idcode"};
  app.require_subcommand(1);

  GraphSource source;
  bool as_json = false;
  bool dense = false;
  bool sparse = false;
  std::string ordering = "identity";
  std::string code_text;
  std::size_t max_n = kDefaultMinimumCodeCap;
  std::size_t restarts = 100;
  std::optional<std::uint64_t> seed;
  std::string family;
  std::vector<double> params;
  std::string gen_format = "edgelist";
  std::vector<std::string> families{"grid"};
  std::vector<std::size_t> sizes{256, 512, 1024, 2048, 4096};
  std::size_t repetitions = 3;

  auto* code_cmd = app.add_subcommand("code", "Lexicographic identifying code");
  source.attach(code_cmd);
  auto* dense_flag = code_cmd->add_flag("--dense", dense, "Bit-matrix construction");
  code_cmd->add_flag("--sparse", sparse, "Sorted-list construction (default)")
      ->excludes(dense_flag);
  code_cmd->add_option("--ordering", ordering,
                       "identity, random[:SEED], degree-asc, degree-desc, explicit:v1,v2,...");
  code_cmd->add_option("--seed", seed, "Seed for a bare 'random' ordering");
  code_cmd->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify", "Check whether a vertex set is an identifying code");
  source.attach(verify_cmd);
  verify_cmd->add_option("--code", code_text, "Members, comma or space separated")->required();
  verify_cmd->add_flag("--json", as_json);

  auto* twins_cmd = app.add_subcommand("twins", "Report the first twin pair, if any");
  source.attach(twins_cmd);
  twins_cmd->add_flag("--json", as_json);

  auto* minimum_cmd = app.add_subcommand("minimum", "Exhaustive minimum identifying code");
  source.attach(minimum_cmd);
  minimum_cmd->add_option("--max-n", max_n, "Refuse graphs with more vertices")
      ->check(CLI::Range(1, 64));
  minimum_cmd->add_flag("--json", as_json);

  auto* minimalize_cmd = app.add_subcommand("minimalize", "Shrink a code until it is minimal");
  source.attach(minimalize_cmd);
  minimalize_cmd->add_option("--code", code_text)->required();
  minimalize_cmd->add_flag("--json", as_json);

  auto* greedy_cmd = app.add_subcommand("greedy", "Set-cover greedy identifying code");
  source.attach(greedy_cmd);
  greedy_cmd->add_flag("--json", as_json);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("family", family, "path, cycle, grid, gnp, hypercube or nonminimal")
      ->required();
  gen_cmd->add_option("params", params, "Family parameters, e.g. 'grid 3 3' or 'gnp 20 0.3'");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--format", gen_format)->check(CLI::IsMember({"edgelist", "dimacs"}));

  auto* restarts_cmd = app.add_subcommand("restarts", "Best code over many vertex orderings");
  source.attach(restarts_cmd);
  restarts_cmd->add_option("--restarts", restarts);
  restarts_cmd->add_option("--ordering", ordering)->default_str("random");
  restarts_cmd->add_option("--seed", seed);
  restarts_cmd->add_flag("--json", as_json);

  auto* bench_cmd = app.add_subcommand("bench", "Time both constructions, CSV on stdout");
  bench_cmd->add_option("--families", families)->delimiter(',');
  bench_cmd->add_option("--sizes", sizes)->delimiter(',');
  bench_cmd->add_option("--reps", repetitions)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--ordering", ordering, "Relabeling applied to every instance")
      ->default_str("random");
  bench_cmd->add_option("--seed", seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::uint64_t run_seed = seed ? *seed : default_seed();

    if (code_cmd->parsed()) {
      const Graph g = source.load(in);
      const auto strategy = OrderingStrategy::parse(ordering, run_seed);
      const Permutation p = make_ordering(g, strategy);
      return report(out, as_json, g, lex_code_ordered(g, p, dense),
                    dense ? "dense" : "sparse", strategy.name());
    }

    if (verify_cmd->parsed()) {
      const Graph g = source.load(in);
      const Code c = parse_code(code_text);
      const bool valid = is_identifying_code(g, c);
      if (as_json) {
        out << json{{"schema", kJsonSchema}, {"n", g.n()}, {"code", code_json(c)},
                    {"valid", valid}}
                   .dump()
            << '\n';
      } else {
        out << (valid ? "valid" : "invalid") << '\n';
      }
      return valid ? kExitOk : kExitUsage;
    }

    if (twins_cmd->parsed()) {
      const Graph g = source.load(in);
      const auto twins = find_twins(g);
      if (as_json) {
        json doc = {{"schema", kJsonSchema}, {"n", g.n()}};
        doc["twins"] = twins ? json{twins->k, twins->j} : json(nullptr);
        out << doc.dump() << '\n';
      } else if (twins) {
        out << twins->k << ' ' << twins->j << '\n';
      } else {
        out << "none\n";
      }
      return twins ? kExitTwins : kExitOk;
    }

    if (minimum_cmd->parsed()) {
      const Graph g = source.load(in);
      const MinimumResult result = minimum_code(g, max_n);
      return report(out, as_json, g, result.code, "minimum", "identity");
    }

    if (minimalize_cmd->parsed()) {
      const Graph g = source.load(in);
      return report(out, as_json, g, minimalize(g, parse_code(code_text)), "minimalize",
                    "identity");
    }

    if (greedy_cmd->parsed()) {
      const Graph g = source.load(in);
      return report(out, as_json, g, greedy_code(g), "greedy", "identity");
    }

    if (gen_cmd->parsed()) {
      const Graph g = family == "nonminimal" ? nonminimal_fixture()
                                          : generate(family, params, run_seed);
      out << (gen_format == "dimacs" ? to_dimacs(g) : to_edge_list(g));
      return kExitOk;
    }

    if (restarts_cmd->parsed()) {
      const Graph g = source.load(in);
      if (restarts_cmd->count("--ordering") == 0) ordering = "random";
      const auto strategy = OrderingStrategy::parse(ordering, run_seed);
      const RestartReport rep = run_restarts(g, strategy, restarts, run_seed);
      if (as_json) {
        json runs = json::array();
        for (const auto& r : rep.runs) {
          runs.push_back({{"seed", r.seed}, {"cardinality", r.cardinality},
                          {"seconds", r.seconds}});
        }
        out << json{{"schema", kJsonSchema},
                    {"n", g.n()},
                    {"algorithm", "sparse"},
                    {"ordering", strategy.name()},
                    {"seed", run_seed},
                    {"code", code_json(rep.best_code)},
                    {"cardinality", rep.best_cardinality},
                    {"best_restart", rep.best_restart},
                    {"verified", is_identifying_code(g, rep.best_code)},
                    {"runs", runs}}
                   .dump()
            << '\n';
      } else {
        out << join(rep.best_code) << '\n'
            << "cardinality " << rep.best_cardinality << '\n'
            << "best restart " << rep.best_restart << " of " << rep.runs.size() << '\n';
      }
      return kExitOk;
    }

    if (bench_cmd->parsed()) {
      if (bench_cmd->count("--ordering") == 0) ordering = "random";
      write_bench_csv(out, run_bench(families, sizes, repetitions, run_seed,
                                     OrderingStrategy::parse(ordering, run_seed)));
      return kExitOk;
    }
  } catch (const TwinError& e) {
    err << "error: " << e.what() << '\n';
    out << "not twin-free: " << e.twins().k << ' ' << e.twins().j << '\n';
    return kExitTwins;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace idcode
