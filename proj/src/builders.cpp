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

#include "wafmatrix/builders.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "wafmatrix/check.hpp"
#include "wafmatrix/checkers.hpp"
#include "wafmatrix/error.hpp"

namespace waf {

namespace {

ArgSet FromRestriction(const ArgSet& b, const ArgSet& local) {
  std::vector<ArgIndex> out;
  for (ArgIndex k : local) out.push_back(b.members()[k]);
  return ArgSet(std::move(out));
}

// One round: accept seed members w-defended by the
// extension, retry the others until a pass changes nothing, then shrink the
// remainder by the seed and everything it attacks.
BuildRound RunRound(const Framework& f, const ArgSet& extension, const ArgSet& seed,
                    const ArgSet& remaining, ScanOrder order) {
  BuildRound round;
  round.seed = seed;
  std::vector<ArgIndex> accepted;
  std::vector<ArgIndex> pending;
  for (ArgIndex a : seed) {
    (WDefends(f, extension, a) ? accepted : pending).push_back(a);
  }
  ArgSet z = extension.united(ArgSet(accepted));
  if (order == ScanOrder::kReversed) std::reverse(pending.begin(), pending.end());

  for (bool changed = !accepted.empty() && !pending.empty(); changed;) {
    changed = false;
    ++round.fixpoint_passes;
    for (auto it = pending.begin(); it != pending.end();) {
      if (WDefends(f, z, *it)) {
        z = z.with(*it);
        accepted.push_back(*it);
        it = pending.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  round.accepted = ArgSet(std::move(accepted));
  round.rejected = ArgSet(std::move(pending));
  round.remaining = remaining.minus(seed.united(AttackedBy(f, seed)));
  round.accumulated = std::move(z);
  return round;
}

BuildRound FirstRound(const Framework& f, const ArgSet& seed) {
  BuildRound round;
  round.seed = seed;
  round.accepted = seed;
  round.remaining = f.all().minus(seed.united(AttackedBy(f, seed)));
  round.accumulated = seed;
  return round;
}

bool Finished(const BuildRound& r) {
  return r.remaining.empty() || r.accepted.empty();
}

[[noreturn]] void Inconsistent(const Framework& f, const BuildTrace& trace,
                               const std::string& what) {
  throw Error(ErrorCode::kInternalInconsistency,
              what + "\n" + FormatTrace(f, trace));
}

ArgSet SelectChecked(const Framework& sub, const Selector& selector,
                     std::size_t round, bool& none) {
  std::optional<ArgSet> pick = selector(sub, round);
  none = !pick.has_value();
  if (none) return {};
  sub.require_members(*pick);
  if (pick->empty() || !IsWAdmissible(sub, *pick)) {
    throw Error(ErrorCode::kSelectorContract,
                "selector returned " + sub.format(*pick) + " in round " +
                    std::to_string(round) +
                    ", which is not a nonempty w-admissible set");
  }
  return *pick;
}

// Calls `visit` on nonempty subsets of {0..n-1} in lexicographic order of
// their sorted member lists until it returns true.
template <typename Visit>
bool ForEachLexicographic(std::size_t n, Visit&& visit) {
  std::vector<ArgIndex> prefix;
  auto descend = [&](auto&& self, ArgIndex from) -> bool {
    for (ArgIndex i = from; i < n; ++i) {
      prefix.push_back(i);
      if (visit(ArgSet(prefix)) || self(self, i + 1)) return true;
      prefix.pop_back();
    }
    return false;
  };
  return descend(descend, 0);
}

std::vector<ArgSet> NonemptyAdmissible(const Framework& f, std::size_t limit) {
  std::vector<ArgSet> out;
  for (ArgSet& s : Enumerate(f, Semantics::kAdm, limit)) {
    if (!s.empty()) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

BuildResult BuildWGrounded(const Framework& f, const BuildOptions& options) {
  BuildTrace trace;
  const ArgSet initial = InitialArguments(f);
  if (!initial.empty()) {
    trace.rounds.push_back(FirstRound(f, initial));
    while (!trace.rounds.back().remaining.empty()) {
      const BuildRound& prev = trace.rounds.back();
      const ArgSet seed = FromRestriction(
          prev.remaining, InitialArguments(Restrict(f, prev.remaining)));
      trace.rounds.push_back(
          RunRound(f, prev.accumulated, seed, prev.remaining, options.order));
      if (Finished(trace.rounds.back())) break;
    }
    trace.result = trace.rounds.back().accumulated;
  }
  if (options.verify && !IsWComplete(f, trace.result)) {
    Inconsistent(f, trace, "grounded builder produced " + f.format(trace.result) +
                               ", which is not w-complete");
  }
  return {trace.result, std::move(trace)};
}

Selector FirstAdmissibleSelector() {
  return [](const Framework& sub, std::size_t) -> std::optional<ArgSet> {
    std::optional<ArgSet> found;
    ForEachLexicographic(sub.size(), [&](const ArgSet& candidate) {
      if (IsWAdmissible(sub, candidate)) found = candidate;
      return found.has_value();
    });
    return found;
  };
}

Selector SeededSelector(ArgSet first, Selector then) {
  return [first = std::move(first), then = std::move(then)](
             const Framework& sub, std::size_t round) -> std::optional<ArgSet> {
    if (round == 1) return first;
    return then(sub, round);
  };
}

BuildResult BuildWPreferred(const Framework& f, const Selector& selector,
                            const BuildOptions& options) {
  BuildTrace trace;
  bool none = false;
  const ArgSet first = SelectChecked(f, selector, 1, none);
  if (!none) {
    trace.rounds.push_back(FirstRound(f, first));
    while (!trace.rounds.back().remaining.empty()) {
      const BuildRound& prev = trace.rounds.back();
      const Framework sub = Restrict(f, prev.remaining);
      const ArgSet local =
          SelectChecked(sub, selector, trace.rounds.size() + 1, none);
      if (none) break;
      trace.rounds.push_back(RunRound(f, prev.accumulated,
                                      FromRestriction(prev.remaining, local),
                                      prev.remaining, options.order));
      if (Finished(trace.rounds.back())) break;
    }
    trace.result = trace.rounds.back().accumulated;
  }
  if (options.verify) {
    if (!IsWAdmissible(f, trace.result)) {
      Inconsistent(f, trace, "preferred builder produced " + f.format(trace.result) +
                                 ", which is not w-admissible");
    }
    if (f.size() <= kDefaultOracleLimit &&
        !Check(f, trace.result, Semantics::kPrf)) {
      Inconsistent(f, trace, "preferred builder produced " + f.format(trace.result) +
                                 ", which has a w-admissible proper superset");
    }
  }
  return {trace.result, std::move(trace)};
}

PreferredEnumeration ExploreWPreferred(const Framework& f, std::size_t limit) {
  if (f.size() > limit) {
    throw Error(ErrorCode::kOracleLimit,
                "framework has " + std::to_string(f.size()) +
                    " arguments; selector exploration is capped at " +
                    std::to_string(limit));
  }
  PreferredEnumeration result;
  std::set<ArgSet> outputs;
  std::set<std::pair<ArgSet, ArgSet>> seen;  // (extension, remainder)

  // Depth-first over (extension, remainder) states.
  std::vector<std::pair<ArgSet, ArgSet>> stack;
  const std::vector<ArgSet> firsts = NonemptyAdmissible(f, limit);
  if (firsts.empty()) outputs.insert(ArgSet{});
  for (const ArgSet& z1 : firsts) {
    BuildRound r = FirstRound(f, z1);
    if (r.remaining.empty()) {
      outputs.insert(r.accumulated);
      ++result.branches;
    } else if (seen.emplace(r.accumulated, r.remaining).second) {
      stack.emplace_back(r.accumulated, r.remaining);
    }
  }
  while (!stack.empty()) {
    auto [z, b] = std::move(stack.back());
    stack.pop_back();
    const std::vector<ArgSet> choices = NonemptyAdmissible(Restrict(f, b), limit);
    if (choices.empty()) {
      outputs.insert(z);
      ++result.branches;
      continue;
    }
    for (const ArgSet& local : choices) {
      BuildRound r = RunRound(f, z, FromRestriction(b, local), b, ScanOrder::kCanonical);
      if (Finished(r)) {
        outputs.insert(r.accumulated);
        ++result.branches;
      } else if (seen.emplace(r.accumulated, r.remaining).second) {
        stack.emplace_back(r.accumulated, r.remaining);
      }
    }
  }
  result.outputs.assign(outputs.begin(), outputs.end());
  std::sort(result.outputs.begin(), result.outputs.end());
  for (const ArgSet& s : result.outputs) {
    const bool dominated = std::any_of(
        result.outputs.begin(), result.outputs.end(), [&](const ArgSet& o) {
          return o.size() > s.size() && s.is_subset_of(o);
        });
    if (!dominated) result.maximal.push_back(s);
  }
  return result;
}

std::vector<ArgSet> EnumerateWPreferred(const Framework& f, std::size_t limit) {
  return ExploreWPreferred(f, limit).outputs;
}

std::string FormatTrace(const Framework& f, const BuildTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const BuildRound& r = trace.rounds[i];
    const std::string k = std::to_string(i + 1);
    out += "  round " + k + ": seed=" + f.format(r.seed) +
           " accepted=" + f.format(r.accepted) + " rejected=" + f.format(r.rejected) +
           " remaining=" + f.format(r.remaining) +
           " extension=" + f.format(r.accumulated) +
           " passes=" + std::to_string(r.fixpoint_passes) + "\n";
  }
  out += "  result: " + f.format(trace.result) + "\n";
  return out;
}

}  // namespace waf
