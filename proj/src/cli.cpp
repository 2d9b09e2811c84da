// Copyright 2026 The wafmatrix Authors
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

#include "wafmatrix/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "wafmatrix/bench.hpp"
#include "wafmatrix/builders.hpp"
#include "wafmatrix/check.hpp"
#include "wafmatrix/error.hpp"
#include "wafmatrix/reduction.hpp"
#include "wafmatrix/verify.hpp"
#include "wafmatrix/wapx.hpp"

namespace waf {

namespace {

struct Flags {
  std::string input = "-";
  std::string semantics;
  std::optional<std::string> set;
  std::optional<std::string> keep;
  bool paper_faithful = false;
  bool trace = false;
  std::uint64_t seed = 1;
  std::size_t limit = kDefaultOracleLimit;
  double density = 0.5;
  std::size_t args = 0;
  std::string semiring = "weighted";
  std::optional<std::string> weights;
  std::size_t count = 500;
  std::size_t samples = 5;
  std::vector<std::size_t> sizes = {25, 50, 100, 200};
};

std::vector<std::string> SplitNames(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Semantics RequireSemantics(const std::string& name) {
  auto s = SemanticsFromName(name);
  if (!s) {
    throw Error(ErrorCode::kPreconditionViolation,
                "--semantics must be one of cf, adm, stb, com, prf, grd");
  }
  return *s;
}

Framework Load(const Flags& flags, std::istream& in) {
  if (flags.input == "-") {
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return ParseWapx(text);
  }
  return ParseWapx(ReadTextFile(flags.input));
}

ArgSet RequireSet(const Framework& f, const Flags& flags) {
  if (!flags.set) {
    throw Error(ErrorCode::kPreconditionViolation, "--set is required");
  }
  return f.set_of(SplitNames(*flags.set));
}

std::string FormatWitness(const Framework& f, const Witness& w) {
  std::string out = f.name(w.first);
  if (w.second) out += "," + f.name(*w.second);
  return out;
}

int Check(const Flags& flags, std::istream& in, std::ostream& out) {
  const Semantics s = RequireSemantics(flags.semantics);
  const Framework f = Load(flags, in);
  const ArgSet z = RequireSet(f, flags);
  const CheckMode mode =
      flags.paper_faithful ? CheckMode::kPaperFaithful : CheckMode::kDefault;
  const Verdict v = waf::Check(f, z, s, mode, flags.limit);
  if (v.accepted) {
    out << "YES\n";
    return 0;
  }
  out << "NO\nwitness: " << FormatWitness(f, *v.witness) << "\n";
  return 1;
}

int Enum(const Flags& flags, std::istream& in, std::ostream& out, std::ostream& err) {
  const Semantics s = RequireSemantics(flags.semantics);
  const Framework f = Load(flags, in);
  const Classification all = ClassifyAll(f, flags.limit);
  if (s == Semantics::kGrd && !all.least_complete_exists()) {
    err << "NO-LEAST-COMPLETE: minimal w-complete sets:";
    for (const ArgSet& m : all.minimal_complete()) err << " " << f.format(m);
    err << "\n";
  }
  for (const ArgSet& e : all.extensions(s)) out << f.format(e) << "\n";
  return 0;
}

int Ground(const Flags& flags, std::istream& in, std::ostream& out) {
  const Framework f = Load(flags, in);
  const BuildResult r = BuildWGrounded(f);
  out << f.format(r.extension) << "\n";
  if (flags.trace) out << FormatTrace(f, r.trace);
  return 0;
}

int Prefer(const Flags& flags, std::istream& in, std::ostream& out) {
  const Framework f = Load(flags, in);
  const Selector selector = flags.set ? SeededSelector(RequireSet(f, flags))
                                      : FirstAdmissibleSelector();
  const BuildResult r = BuildWPreferred(f, selector);
  out << f.format(r.extension) << "\n";
  if (flags.trace) out << FormatTrace(f, r.trace);
  return 0;
}

int Reduce(const Flags& flags, std::istream& in, std::ostream& out) {
  const Framework f = Load(flags, in);
  const ArgSet z = RequireSet(f, flags);
  std::size_t keep = 0;
  if (flags.keep) {
    const ArgIndex target = f.index_of(*flags.keep);
    auto it = std::find(z.begin(), z.end(), target);
    if (it == z.end()) {
      throw Error(ErrorCode::kPreconditionViolation,
                  "--keep must name a member of --set");
    }
    keep = static_cast<std::size_t>(it - z.begin());
  }
  const ReducedFramework r = Contract(f, z, keep);
  for (std::size_t k = 0; k < r.origin.size(); ++k) {
    out << "# origin " << r.waf.name(k) << " <-";
    for (const std::string& o : r.origin[k]) out << " " << o;
    out << "\n";
  }
  out << SerializeWapx(r.waf);
  return 0;
}

int Gen(const Flags& flags, std::ostream& out) {
  GeneratorSpec spec;
  spec.arguments = flags.args;
  spec.density = flags.density;
  spec.semiring = Semiring::FromName(flags.semiring);
  spec.weights = flags.weights ? ParseWeightRange(*flags.weights)
                               : DefaultWeightRange(spec.semiring.kind());
  spec.seed = flags.seed;
  out << SerializeWapx(GenerateFramework(spec));
  return 0;
}

int Bench(const Flags& flags, const CLI::App& cmd, std::ostream& out,
          std::ostream& err) {
  BenchOptions options;
  options.sizes = flags.sizes;
  options.density = cmd.count("--density") ? flags.density : 0.1;
  options.samples = flags.samples;
  options.seed = flags.seed;
  options.semiring = Semiring::FromName(flags.semiring).kind();
  const BenchSummary summary = RunGroundedBench(options);
  out << FormatBenchCsv(options, summary);
  err << "# informal: median grounded-builder time per size, log-log slope "
      << summary.loglog_slope << "\n";
  return 0;
}

int Verify(const Flags& flags, const CLI::App& cmd, std::istream& in,
           std::ostream& out) {
  SweepReport report;
  if (cmd.count("input")) {
    const Framework f = Load(flags, in);
    CompareWithOracle(f, flags.input, report, flags.limit);
  } else {
    SweepOptions options;
    options.count = flags.count;
    options.seed = flags.seed;
    if (cmd.count("--args")) options.max_arguments = flags.args;
    if (cmd.count("--semiring")) {
      options.semirings = {Semiring::FromName(flags.semiring).kind()};
    }
    report = RandomSweep(options);
  }
  out << FormatReport(report);
  return report.disagreements.empty() ? 0 : 1;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Semiring-based weighted argumentation: matrix checkers, "
               "oracle, reductions and builders"};
  app.require_subcommand(1);
  Flags flags;

  auto input = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("input", flags.input, ".wapx file, '-' for stdin");
    if (required) opt->required();
  };
  auto semantics = [&](CLI::App* cmd) {
    cmd->add_option("--semantics", flags.semantics, "cf|adm|stb|com|prf|grd")
        ->required();
  };
  auto limit = [&](CLI::App* cmd) {
    cmd->add_option("--limit", flags.limit, "oracle argument limit");
  };

  auto* check = app.add_subcommand("check", "decide one semantics for a set");
  input(check, true);
  semantics(check);
  check->add_option("--set", flags.set, "comma-separated arguments")->required();
  check->add_flag("--paper-faithful", flags.paper_faithful,
                  "literal theorem conditions for stb/com");
  limit(check);

  auto* enumerate = app.add_subcommand("enum", "list all extensions");
  input(enumerate, true);
  semantics(enumerate);
  limit(enumerate);

  auto* ground = app.add_subcommand("ground", "build the w-grounded extension");
  input(ground, true);
  ground->add_flag("--trace", flags.trace, "print the build rounds");

  auto* prefer = app.add_subcommand("prefer", "build a w-preferred extension");
  input(prefer, true);
  prefer->add_flag("--trace", flags.trace, "print the build rounds");
  prefer->add_option("--set", flags.set, "initial w-admissible set");

  auto* reduce = app.add_subcommand("reduce", "contract a w-conflict-free set");
  input(reduce, true);
  reduce->add_option("--set", flags.set, "set to contract")->required();
  reduce->add_option("--keep", flags.keep, "member that represents the set");

  auto* gen = app.add_subcommand("gen", "generate a random framework");
  gen->add_option("--args", flags.args, "number of arguments")->required();
  gen->add_option("--density", flags.density, "attack probability per pair")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--semiring", flags.semiring, "semiring instance");
  gen->add_option("--weights", flags.weights, "weight grid LO..HI");
  gen->add_option("--seed", flags.seed, "generator seed");

  auto* bench = app.add_subcommand("bench", "time the grounded builder (CSV)");
  bench->add_option("--sizes", flags.sizes, "argument counts")->delimiter(',');
  bench->add_option("--density", flags.density, "attack probability per pair")
      ->check(CLI::Range(0.0, 1.0));
  bench->add_option("--samples", flags.samples, "frameworks per size");
  bench->add_option("--seed", flags.seed, "first generator seed");
  bench->add_option("--semiring", flags.semiring, "semiring instance");

  auto* verify = app.add_subcommand("verify", "compare checkers with the oracle");
  input(verify, false);
  verify->add_option("--count", flags.count, "random frameworks to sweep");
  verify->add_option("--args", flags.args, "largest framework size");
  verify->add_option("--seed", flags.seed, "first generator seed");
  verify->add_option("--semiring", flags.semiring, "restrict to one instance");
  limit(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return Check(flags, in, out);
    if (*enumerate) return Enum(flags, in, out, err);
    if (*ground) return Ground(flags, in, out);
    if (*prefer) return Prefer(flags, in, out);
    if (*reduce) return Reduce(flags, in, out);
    if (*gen) return Gen(flags, out);
    if (*bench) return Bench(flags, *bench, out, err);
    if (*verify) return Verify(flags, *verify, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace waf
