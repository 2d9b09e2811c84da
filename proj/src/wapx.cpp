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

#include "wafmatrix/wapx.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "wafmatrix/error.hpp"

namespace waf {

namespace {

struct RawAttack {
  std::string source;
  std::string target;
  std::optional<std::string> weight;
  int line;
  int column;
  int weight_column;
};

// Cursor over one line with the comment already removed.
class LineScanner {
 public:
  LineScanner(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ErrorCode::kSyntax, line_, column(), message);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  // Letters only; used for the keywords.
  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string id(text_.substr(start, pos_ - start));
    if (!IsValidArgumentName(id)) {
      pos_ = start;
      fail("expected an argument identifier");
    }
    return id;
  }
  // Everything up to whitespace, ',' or ')'.
  std::string literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a weight");
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

Framework ParseWapx(std::string_view text) {
  std::optional<Semiring> semiring;
  std::vector<std::string> names;
  std::map<std::string, int> declared_at;
  std::vector<RawAttack> raw;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    LineScanner scan(line, line_no);
    if (scan.at_end()) {
      if (end == text.size()) break;
      continue;
    }

    const int keyword_column = scan.column();
    const std::string keyword = scan.word();
    if (!semiring) {
      if (keyword != "semiring") scan.fail("expected 'semiring <name>' header");
      scan.skip_space();
      const int name_column = scan.column();
      const std::string name = scan.identifier();
      if (!scan.at_end()) scan.fail("unexpected text after semiring name");
      auto kind = SemiringFromName(name);
      if (!kind) {
        throw ParseError(ErrorCode::kUnknownSemiring, line_no, name_column,
                         "unknown semiring '" + name + "'");
      }
      semiring = Semiring(*kind);
    } else if (keyword == "arg") {
      scan.expect('(');
      scan.skip_space();
      const int id_column = scan.column();
      std::string id = scan.identifier();
      scan.expect(')');
      scan.expect('.');
      if (!scan.at_end()) scan.fail("unexpected text after declaration");
      if (!declared_at.emplace(id, line_no).second) {
        throw ParseError(ErrorCode::kDuplicateArgument, line_no, id_column,
                         "argument '" + id + "' already declared on line " +
                             std::to_string(declared_at[id]));
      }
      names.push_back(std::move(id));
    } else if (keyword == "att") {
      RawAttack att{{}, {}, std::nullopt, line_no, keyword_column, 0};
      scan.expect('(');
      att.source = scan.identifier();
      scan.expect(',');
      att.target = scan.identifier();
      if (scan.accept(',')) {
        scan.skip_space();
        att.weight_column = scan.column();
        att.weight = scan.literal();
      }
      scan.expect(')');
      scan.expect('.');
      if (!scan.at_end()) scan.fail("unexpected text after declaration");
      raw.push_back(std::move(att));
    } else {
      throw ParseError(ErrorCode::kSyntax, line_no, keyword_column,
                       keyword.empty() ? "expected 'arg' or 'att'"
                                       : "unknown declaration '" + keyword + "'");
    }
    if (end == text.size()) break;
  }
  if (!semiring) {
    throw ParseError(ErrorCode::kSyntax, line_no, 1, "missing 'semiring' header");
  }

  std::vector<Framework::Attack> attacks;
  std::set<std::pair<std::string, std::string>> pairs;
  const Value top = semiring->top();
  for (const RawAttack& att : raw) {
    for (const std::string* end : {&att.source, &att.target}) {
      if (!declared_at.count(*end)) {
        throw ParseError(ErrorCode::kUndeclaredArgument, att.line, att.column,
                         "attack mentions undeclared argument '" + *end + "'");
      }
    }
    if (!pairs.emplace(att.source, att.target).second) {
      throw ParseError(ErrorCode::kDuplicateAttack, att.line, att.column,
                       "second attack from '" + att.source + "' to '" +
                           att.target + "'");
    }
    std::optional<Value> weight;
    if (semiring->kind() == SemiringKind::kBoolean) {
      if (att.weight) {
        throw ParseError(ErrorCode::kUnexpectedWeight, att.line, att.weight_column,
                         "boolean attacks carry no weight");
      }
      weight = semiring->bot();
    } else {
      if (!att.weight) {
        throw ParseError(ErrorCode::kMissingWeight, att.line, att.column,
                         "attack needs a weight under " +
                             std::string(semiring->name()));
      }
      try {
        weight = semiring->parse_value(*att.weight);
      } catch (const Error& e) {
        throw ParseError(e.code(), att.line, att.weight_column, e.what());
      }
      if (*weight == top) {
        throw ParseError(ErrorCode::kTopWeightAttack, att.line, att.weight_column,
                         "weight " + *att.weight + " is top, which means no attack");
      }
    }
    attacks.push_back({att.source, att.target, std::move(*weight)});
  }
  return Framework(*semiring, std::move(names), attacks);
}

std::string SerializeWapx(const Framework& f) {
  std::string out = "semiring " + std::string(f.semiring().name()) + "\n";
  for (const std::string& n : f.names()) out += "arg(" + n + ").\n";
  const bool crisp = f.semiring().kind() == SemiringKind::kBoolean;
  for (ArgIndex s = 0; s < f.size(); ++s) {
    for (ArgIndex t : f.attacked(s)) {
      out += "att(" + f.name(s) + "," + f.name(t);
      if (!crisp) out += "," + f.semiring().format(f.weight(s, t));
      out += ").\n";
    }
  }
  return out;
}

std::string ReadTextFile(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

std::size_t DecimalPlaces(std::string_view literal) {
  auto dot = literal.find('.');
  return dot == std::string_view::npos ? 0 : literal.size() - dot - 1;
}

mpq_class ParseNonnegativeDecimal(std::string_view literal) {
  // Any unbounded instance accepts every nonnegative decimal.
  return Semiring(SemiringKind::kWeighted).parse_value(literal).as_rational();
}

}  // namespace

WeightRange ParseWeightRange(std::string_view text) {
  const auto sep = text.find("..");
  if (sep == std::string_view::npos) {
    throw Error(ErrorCode::kInvalidRange,
                "weight range '" + std::string(text) + "' is not LO..HI");
  }
  const std::string_view lo = text.substr(0, sep);
  const std::string_view hi = text.substr(sep + 2);
  WeightRange range;
  try {
    range.lo = ParseNonnegativeDecimal(lo);
    range.hi = ParseNonnegativeDecimal(hi);
  } catch (const Error&) {
    throw Error(ErrorCode::kInvalidRange,
                "weight range '" + std::string(text) + "' needs decimal bounds");
  }
  if (range.lo > range.hi) {
    throw Error(ErrorCode::kInvalidRange, "weight range is empty");
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, std::max(DecimalPlaces(lo), DecimalPlaces(hi)));
  range.step = mpq_class(1, scale);
  range.step.canonicalize();
  return range;
}

WeightRange DefaultWeightRange(SemiringKind kind) {
  switch (kind) {
    case SemiringKind::kFuzzy:
    case SemiringKind::kProbabilistic: return ParseWeightRange("0.0..1.0");
    default: return ParseWeightRange("1..10");
  }
}

Framework GenerateFramework(const GeneratorSpec& spec) {
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw Error(ErrorCode::kInvalidRange, "density must lie in [0, 1]");
  }
  const Semiring& s = spec.semiring;
  const bool crisp = s.kind() == SemiringKind::kBoolean;

  std::vector<Value> grid;
  if (!crisp) {
    if (sgn(spec.weights.step) <= 0) {
      throw Error(ErrorCode::kInvalidRange, "weight step must be positive");
    }
    const mpq_class span = (spec.weights.hi - spec.weights.lo) / spec.weights.step;
    if (span.get_den() != 1 || span.get_num() > 1'000'000) {
      throw Error(ErrorCode::kInvalidRange, "weight grid is too large");
    }
    const unsigned long count = span.get_num().get_ui() + 1;
    const Value top = s.top();
    for (unsigned long i = 0; i < count; ++i) {
      mpq_class q = spec.weights.lo + spec.weights.step * i;
      Value v = [&] {
        try {
          return s.number(q);
        } catch (const Error&) {
          throw Error(ErrorCode::kInvalidRange,
                      "weight range leaves the carrier of " + std::string(s.name()));
        }
      }();
      if (!(v == top)) grid.push_back(std::move(v));
    }
    if (grid.empty()) {
      throw Error(ErrorCode::kInvalidRange, "weight range contains only top");
    }
  }

  std::vector<std::string> names;
  names.reserve(spec.arguments);
  for (std::size_t i = 0; i < spec.arguments; ++i) names.push_back("a" + std::to_string(i));

  std::mt19937_64 rng(spec.seed);
  const std::uint64_t k = grid.size();
  const std::uint64_t accept_below =
      k == 0 ? 0 : (std::numeric_limits<std::uint64_t>::max() / k) * k;
  std::vector<Value> weights;
  weights.reserve(spec.arguments * spec.arguments);
  for (std::size_t p = 0; p < spec.arguments * spec.arguments; ++p) {
    const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
    if (!(u < spec.density)) {
      weights.push_back(s.top());
    } else if (crisp) {
      weights.push_back(s.bot());
    } else {
      std::uint64_t x;
      do {
        x = rng();
      } while (x >= accept_below);
      weights.push_back(grid[x % k]);
    }
  }
  return Framework(s, std::move(names), std::move(weights));
}

}  // namespace waf
