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

#include "wafmatrix/verify.hpp"

#include <array>

#include "wafmatrix/checkers.hpp"

namespace waf {

namespace {

void Record(std::vector<Discrepancy>& into, const Framework& f,
            const std::string& label, const ArgSet& z, Semantics s,
            const char* route, bool oracle, bool verdict) {
  if (oracle == verdict) return;
  into.push_back({label, f.format(z), std::string(SemanticsName(s)), route,
                  oracle, verdict});
}

}  // namespace

void CompareWithOracle(const Framework& f, const std::string& label,
                       SweepReport& report, std::size_t limit) {
  const Classification oracle = ClassifyAll(f, limit);
  ++report.frameworks;
  for (unsigned long long m = 0; m < oracle.subset_count(); ++m) {
    ++report.subsets;
    const ArgSet z = ArgSet::FromMask(m);
    const SemanticsLabel& l = oracle.label(m);
    Record(report.disagreements, f, label, z, Semantics::kCf, "default", l.cf,
           IsWConflictFree(f, z).accepted);
    Record(report.disagreements, f, label, z, Semantics::kAdm, "default", l.adm,
           IsWAdmissible(f, z).accepted);
    Record(report.disagreements, f, label, z, Semantics::kStb, "default", l.stb,
           IsWStable(f, z).accepted);
    Record(report.disagreements, f, label, z, Semantics::kCom, "default", l.com,
           IsWComplete(f, z).accepted);
    Record(report.ledger, f, label, z, Semantics::kStb, "paper-faithful", l.stb,
           IsWStable(f, z, CheckMode::kPaperFaithful).accepted);
    Record(report.ledger, f, label, z, Semantics::kCom, "paper-faithful", l.com,
           IsWComplete(f, z, CheckMode::kPaperFaithful).accepted);
    Record(report.ledger, f, label, z, Semantics::kCom, "complete-by-extension",
           l.com, oracle.complete_by_extension(m));
  }
}

GeneratorSpec SweepFramework(const SweepOptions& options, std::size_t i) {
  static constexpr std::array<double, 3> kDensities = {0.2, 0.35, 0.5};
  const std::size_t k = options.semirings.size();
  const SemiringKind kind = options.semirings[i % k];
  GeneratorSpec spec;
  spec.arguments = (i / k) % (options.max_arguments + 1);
  spec.density = kDensities[i % kDensities.size()];
  spec.semiring = Semiring(kind);
  spec.weights = (kind == SemiringKind::kFuzzy || kind == SemiringKind::kProbabilistic)
                     ? ParseWeightRange("0.0..1.0")
                     : ParseWeightRange("1..5");
  spec.seed = options.seed + i;
  return spec;
}

SweepReport RandomSweep(const SweepOptions& options) {
  SweepReport report;
  for (std::size_t i = 0; i < options.count; ++i) {
    const GeneratorSpec spec = SweepFramework(options, i);
    const std::string label = std::string(spec.semiring.name()) + " n=" +
                              std::to_string(spec.arguments) + " seed=" +
                              std::to_string(spec.seed);
    CompareWithOracle(GenerateFramework(spec), label, report);
  }
  return report;
}

std::string FormatReport(const SweepReport& report) {
  std::string out = "frameworks: " + std::to_string(report.frameworks) +
                    "\nsubsets: " + std::to_string(report.subsets) +
                    "\ndefault-mode disagreements: " +
                    std::to_string(report.disagreements.size()) +
                    "\nledger entries: " + std::to_string(report.ledger.size()) + "\n";
  auto line = [](const Discrepancy& d) {
    return d.framework + " " + d.subset + " " + d.semantics + " " + d.route +
           " oracle=" + (d.oracle ? "yes" : "no") +
           " route=" + (d.route_verdict ? "yes" : "no") + "\n";
  };
  for (const Discrepancy& d : report.disagreements) out += "DISAGREE " + line(d);
  for (const Discrepancy& d : report.ledger) out += "LEDGER " + line(d);
  return out;
}

}  // namespace waf
