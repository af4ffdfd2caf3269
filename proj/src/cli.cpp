// Copyright 2026 The pdakit Authors
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

#include "pdakit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "pdakit/analytics.hpp"
#include "pdakit/combinators.hpp"
#include "pdakit/errors.hpp"
#include "pdakit/families.hpp"
#include "pdakit/graphs.hpp"
#include "pdakit/pda.hpp"
#include "pdakit/pda_io.hpp"
#include "pdakit/scheme_sim.hpp"

namespace pdakit::cli {
namespace {

// Result of a finished subcommand, carried out of the CLI11 callbacks.
struct Outcome {
  int code = kOk;
};

// Every file the tool writes has to pass the validator first.
void write_checked(const std::string& path, const PdaArray& p) {
  const ValidationReport report = validate(p);
  if (!report.is_valid) {
    throw InvariantBreach("refusing to write an invalid array: " +
                          report.describe());
  }
  write_pda_file(path, p);
}

DemandVector parse_demand(const std::string& text) {
  DemandVector d;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 1) {
      throw PreconditionError("bad demand entry '" + tok + "'");
    }
    d.push_back(static_cast<std::size_t>(v));
  }
  return d;
}

PdaArray combine(const std::string& mode, std::size_t m,
                 const std::vector<std::string>& inputs) {
  std::vector<PdaArray> pdas;
  for (const auto& path : inputs) pdas.push_back(read_pda_file(path));
  std::vector<ColoredBipartiteGraph> gs;
  for (const auto& p : pdas) gs.push_back(pda_to_coloring(p));

  if (mode == "same-colors") {
    if (gs.size() < 2) throw PreconditionError("same-colors needs two or more inputs");
    return coloring_to_pda(combine_same_colors(gs).graph);
  }
  if (mode == "star") {
    if (gs.size() < 2) throw PreconditionError("star needs two or more inputs");
    return coloring_to_pda(star_product(gs).graph);
  }
  if (mode == "tensor") {
    if (gs.size() != 2) throw PreconditionError("tensor needs exactly two inputs");
    const ColoredGraph t =
        tensor_product(as_general_graph(gs[0]), as_general_graph(gs[1]));
    const std::size_t n2 = gs[1].left().size() + gs[1].right().size();
    std::vector<int> side(t.vertices().size());
    for (std::size_t v = 0; v < side.size(); ++v) {
      side[v] = v / n2 < gs[0].left().size() ? 0 : 1;
    }
    return coloring_to_pda(split_bipartite(t, side));
  }
  if (mode == "cycle") {
    if (gs.size() != 1) throw PreconditionError("cycle takes exactly one input");
    if (m == 0) throw PreconditionError("cycle needs --m");
    return coloring_to_pda(cycle_product(gs[0], m).graph);
  }
  throw PreconditionError("unknown mode '" + mode + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Build, combine, check and simulate placement delivery arrays",
               "pdakit"};
  app.require_subcommand(1);
  Outcome outcome;

  // build
  auto* build = app.add_subcommand("build", "Write a PDA from a family");
  std::string family;
  FamilySpec spec;
  std::string output;
  build->add_option("--family", family,
                    "disjoint-union|intersection-t|restricted-combined|trivial|star")
      ->required();
  build->add_option("--n", spec.n);
  build->add_option("--a", spec.a);
  build->add_option("--b", spec.b);
  build->add_option("--t", spec.t);
  build->add_option("--m", spec.m);
  build->add_option("-o,--output", output)->required();
  build->callback([&] {
    spec.family = parse_family(family);
    const PdaArray p = coloring_to_pda(build_family(spec));
    write_checked(output, p);
    out << "wrote " << output << ": " << to_string(params(p)) << '\n';
  });

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Check conditions A, B, C");
  std::string file;
  validate_cmd->add_option("file", file)->required();
  validate_cmd->callback([&] {
    const ValidationReport report = validate(read_pda_file(file));
    out << report.describe() << '\n';
    outcome.code = report.is_valid ? kOk : kFailed;
  });

  // params
  auto* params_cmd = app.add_subcommand("params", "Print K, F, Z, S and ratios");
  params_cmd->add_option("file", file)->required();
  params_cmd->callback([&] { out << to_string(params(read_pda_file(file))) << '\n'; });

  // combine
  auto* combine_cmd = app.add_subcommand("combine", "Apply a product operator");
  std::string mode;
  std::size_t m = 0;
  std::vector<std::string> inputs;
  combine_cmd->add_option("--mode", mode)
      ->required()
      ->check(CLI::IsMember({"same-colors", "star", "tensor", "cycle"}));
  combine_cmd->add_option("--m", m, "cycle length for --mode cycle");
  combine_cmd->add_option("files", inputs)->required();
  combine_cmd->add_option("-o,--output", output)->required();
  combine_cmd->callback([&] {
    const PdaArray p = combine(mode, m, inputs);
    write_checked(output, p);
    out << "wrote " << output << ": " << to_string(params(p)) << '\n';
  });

  // simulate
  auto* simulate_cmd = app.add_subcommand("simulate", "Run placement, delivery and decoding");
  std::size_t files = 0;
  std::uint64_t seed = 0;
  std::string demand;
  bool exhaustive = false;
  simulate_cmd->add_option("file", file)->required();
  simulate_cmd->add_option("--files", files, "library size N")->required();
  simulate_cmd->add_option("--seed", seed, "library and demand seed");
  auto* demand_opt = simulate_cmd->add_option("--demand", demand, "d1,d2,...");
  simulate_cmd->add_flag("--exhaustive", exhaustive)->excludes(demand_opt);
  simulate_cmd->callback([&] {
    if (files == 0) throw PreconditionError("--files must be at least 1");
    const PdaArray p = read_pda_file(file);
    const ValidationReport report = validate(p);
    if (!report.is_valid) {
      out << report.describe() << '\n';
      outcome.code = kFailed;
      return;
    }
    std::vector<DemandVector> ds;
    if (!demand.empty()) {
      ds.push_back(parse_demand(demand));
    } else if (exhaustive) {
      ds = all_demands(p.cols(), files, 1000000);
    } else {
      ds = demand_set(p.cols(), files, seed);
    }
    const FileLibrary lib = FileLibrary::random(files, p.rows(), seed);
    const auto results = simulate(p, lib, ds);
    std::size_t passed = 0;
    for (const auto& r : results) {
      out << format_demand(r.demand) << ' ' << (r.ok ? "pass" : "FAIL")
          << " broadcasts=" << r.broadcasts;
      if (!r.ok) out << ' ' << r.failure;
      out << '\n';
      passed += r.ok ? 1 : 0;
    }
    out << passed << '/' << results.size() << " demand vectors decoded, "
        << p.colors() << " broadcasts each\n";
    if (passed != results.size()) {
      throw InvariantBreach("a valid array failed to decode");
    }
  });

  // table
  auto* table_cmd = app.add_subcommand("table", "Emit a comparison table as CSV");
  std::string which;
  bool estimate = false;
  table_cmd->add_option("which", which, "II..IX")->required();
  table_cmd->add_flag("--estimate", estimate, "append the floating F estimate");
  table_cmd->callback([&] { write_csv(out, table_report(parse_table(which)), estimate); });

  // equiv
  auto* equiv_cmd = app.add_subcommand("equiv", "Compare two PDAs up to relabeling");
  std::string file2;
  std::uint64_t budget = kDefaultEquivalenceBudget;
  equiv_cmd->add_option("file1", file)->required();
  equiv_cmd->add_option("file2", file2)->required();
  equiv_cmd->add_option("--budget", budget, "search node limit");
  equiv_cmd->callback([&] {
    const Equivalence e = equivalent(read_pda_file(file), read_pda_file(file2), budget);
    out << to_string(e) << '\n';
    outcome.code = e == Equivalence::kEquivalent     ? kOk
                   : e == Equivalence::kInequivalent ? kFailed
                                                     : kUsage;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const InvariantBreach& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PdaError& e) {
    // Parse errors, color gaps and invalid inputs.
    err << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return outcome.code;
}

}  // namespace pdakit::cli
