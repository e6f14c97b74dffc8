// Copyright 2026 The VBE Social Requirements Authors
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

#include "vbe/requirements_parser.h"

#include <cctype>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "vbe/errors.h"

namespace vbe {

namespace {

enum class TokenType { kWord, kNumber, kSymbol, kEnd };

struct Token {
  TokenType type;
  std::string text;
  std::size_t column;  // 1-based byte offset in the line
};

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

// Splits one line into tokens. Comments have been stripped already.
std::vector<Token> Tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const std::size_t column = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      auto digits = [&] {
        while (j < line.size() &&
               std::isdigit(static_cast<unsigned char>(line[j]))) {
          ++j;
        }
      };
      digits();
      if (j < line.size() && line[j] == '.') {
        ++j;
        digits();
      }
      if (j < line.size() && line[j] == '/') {
        ++j;
        digits();
      }
      if (j < line.size() && line[j] == '%') ++j;
      if (j < line.size() && IsWordChar(line[j])) {
        // Digit-led word such as a label "2nd_rule".
        while (j < line.size() && IsWordChar(line[j])) ++j;
        tokens.push_back({TokenType::kWord, std::string(line.substr(i, j - i)),
                          column});
      } else {
        tokens.push_back({TokenType::kNumber,
                          std::string(line.substr(i, j - i)), column});
      }
      i = j;
      continue;
    }
    if (IsWordChar(c)) {
      std::size_t j = i;
      while (j < line.size() &&
             (IsWordChar(line[j]) ||
              (line[j] == '-' && j + 1 < line.size() && IsWordChar(line[j + 1])))) {
        ++j;
      }
      tokens.push_back(
          {TokenType::kWord, std::string(line.substr(i, j - i)), column});
      i = j;
      continue;
    }
    static constexpr std::string_view kSymbols[] = {
        "->", "<=", ">=", "==", "\xE2\x89\xA4", "\xE2\x89\xA5",
        "<",  ">",  "=",  "(",  ")",            ":",
        "@"};
    bool matched = false;
    for (std::string_view symbol : kSymbols) {
      if (line.substr(i, symbol.size()) == symbol) {
        tokens.push_back({TokenType::kSymbol, std::string(symbol), column});
        i += symbol.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      // Left to the grammar to reject; anchor ids and set names read the raw
      // line instead of tokens.
      tokens.push_back({TokenType::kSymbol, std::string(1, c), column});
      ++i;
    }
  }
  tokens.push_back({TokenType::kEnd, "", line.size() + 1});
  return tokens;
}

struct NumberLiteral {
  Rational value;
  bool percent = false;
  bool integral = true;  // no '.', '/' or '%'
};

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no), tokens_(Tokenize(line)) {}

  const Token& Peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool AtEnd() const { return Peek().type == TokenType::kEnd; }

  [[noreturn]] void Fail(const std::string& message, const Token& at) const {
    throw ParseError(message, line_no_, at.column);
  }
  [[noreturn]] void Fail(const std::string& message) const {
    Fail(message, Peek());
  }

  const Token& Next() {
    const Token& token = Peek();
    if (token.type != TokenType::kEnd) ++pos_;
    return token;
  }

  bool AcceptWord(std::string_view word) {
    if (Peek().type == TokenType::kWord && Peek().text == word) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool AcceptSymbol(std::string_view symbol) {
    if (Peek().type == TokenType::kSymbol && Peek().text == symbol) {
      ++pos_;
      return true;
    }
    return false;
  }
  void ExpectWord(std::string_view word) {
    if (!AcceptWord(word)) {
      Fail(fmt::format("expected '{}', found '{}'", word, Describe(Peek())));
    }
  }
  void ExpectSymbol(std::string_view symbol) {
    if (!AcceptSymbol(symbol)) {
      Fail(fmt::format("expected '{}', found '{}'", symbol, Describe(Peek())));
    }
  }
  void ExpectEnd() {
    if (!AtEnd()) {
      Fail(fmt::format("unexpected '{}' after requirement", Peek().text));
    }
  }

  static std::string Describe(const Token& token) {
    return token.type == TokenType::kEnd ? "end of line" : token.text;
  }

  // Raw remainder of the line from the current token, trimmed.
  std::string Rest() {
    const std::size_t start = Peek().column - 1;
    pos_ = tokens_.size() - 1;
    std::string_view rest = line_.substr(std::min(start, line_.size()));
    while (!rest.empty() &&
           std::isspace(static_cast<unsigned char>(rest.back()))) {
      rest.remove_suffix(1);
    }
    return std::string(rest);
  }

  std::size_t line_no() const { return line_no_; }

  Comparator ParseComparator() {
    const Token& token = Peek();
    if (token.type == TokenType::kSymbol) {
      static const std::pair<std::string_view, Comparator> kTable[] = {
          {"<", Comparator::kLess},
          {"<=", Comparator::kLessEqual},
          {"\xE2\x89\xA4", Comparator::kLessEqual},
          {"=", Comparator::kEqual},
          {"==", Comparator::kEqual},
          {">=", Comparator::kGreaterEqual},
          {"\xE2\x89\xA5", Comparator::kGreaterEqual},
          {">", Comparator::kGreater},
      };
      for (const auto& [text, cmp] : kTable) {
        if (token.text == text) {
          ++pos_;
          return cmp;
        }
      }
    }
    Fail(fmt::format("expected a comparator, found '{}'", Describe(token)));
  }

  MetricId ParseMetric() {
    const Token& token = Peek();
    if (token.type != TokenType::kWord) {
      Fail(fmt::format("expected a metric name, found '{}'", Describe(token)));
    }
    auto metric = MetricFromName(token.text);
    if (!metric) Fail(fmt::format("unknown metric '{}'", token.text));
    ++pos_;
    return *metric;
  }

  NumberLiteral ParseNumber() {
    const Token& token = Peek();
    if (token.type != TokenType::kNumber) {
      Fail(fmt::format("expected a number, found '{}'", Describe(token)));
    }
    ++pos_;
    std::string_view text = token.text;
    NumberLiteral literal;
    if (text.ends_with('%')) {
      literal.percent = true;
      literal.integral = false;
      text.remove_suffix(1);
    }
    Rational value = 0;
    const auto slash = text.find('/');
    std::string_view whole = text.substr(0, slash);
    const auto dot = whole.find('.');
    if (dot != std::string_view::npos || slash != std::string_view::npos) {
      literal.integral = false;
    }
    if (whole.empty() || whole.back() == '.') {
      Fail(fmt::format("malformed number '{}'", token.text), token);
    }
    Rational scale = 1;
    for (char c : whole) {
      if (c == '.') continue;
      value = value * 10 + (c - '0');
    }
    if (dot != std::string_view::npos) {
      for (std::size_t k = dot + 1; k < whole.size(); ++k) scale *= 10;
    }
    value /= scale;
    if (slash != std::string_view::npos) {
      std::string_view den_text = text.substr(slash + 1);
      if (den_text.empty()) {
        Fail(fmt::format("malformed number '{}'", token.text), token);
      }
      Rational den = 0;
      for (char c : den_text) den = den * 10 + (c - '0');
      if (den == 0) Fail("zero denominator", token);
      value /= den;
    }
    if (literal.percent) value /= 100;
    literal.value = value;
    return literal;
  }

  Rational ParseThreshold(MetricId metric) {
    const Token& token = Peek();
    const NumberLiteral literal = ParseNumber();
    if (literal.percent && !IsFractionValued(metric)) {
      Fail(fmt::format("percentage threshold for non-fraction metric '{}'",
                       MetricName(metric)),
           token);
    }
    if (IsFractionValued(metric) && literal.value > 1) {
      Fail(fmt::format("threshold {} for '{}': thresholds are fractions in "
                       "[0,1] or carry an explicit '%' suffix",
                       token.text, MetricName(metric)),
           token);
    }
    return literal.value;
  }

  Atom ParseAtom() {
    const Token& start = Peek();
    const MetricId metric = ParseMetric();
    if (IsNetworkScoped(metric)) {
      Fail(fmt::format("network metric '{}' cannot appear in an actor "
                       "predicate",
                       MetricName(metric)),
           start);
    }
    const Comparator cmp = ParseComparator();
    Atom atom{metric, cmp, Reference(Rational(0)), false};
    if (AcceptWord("avg_others")) {
      ExpectSymbol("(");
      const Token& inner = Peek();
      const MetricId reference = ParseMetric();
      if (IsNetworkScoped(reference)) {
        Fail(fmt::format("avg_others needs an actor metric, got '{}'",
                         MetricName(reference)),
             inner);
      }
      ExpectSymbol(")");
      atom.reference = AvgOfOthers{reference};
    } else {
      atom.reference = ParseThreshold(metric);
    }
    if (AcceptSymbol("@")) {
      ExpectWord("parent");
      atom.on_parent = true;
    }
    return atom;
  }

  ActorPredicate ParseUnary() {
    if (AcceptWord("not")) return ActorPredicate::Not(ParseUnary());
    if (AcceptSymbol("(")) {
      ActorPredicate inner = ParseOr();
      ExpectSymbol(")");
      return inner;
    }
    return ParseAtom();
  }

  ActorPredicate ParseAnd() {
    std::vector<ActorPredicate> operands;
    operands.push_back(ParseUnary());
    while (AcceptWord("and")) operands.push_back(ParseUnary());
    return ActorPredicate::And(std::move(operands));
  }

  ActorPredicate ParseOr() {
    std::vector<ActorPredicate> operands;
    operands.push_back(ParseAnd());
    while (AcceptWord("or")) operands.push_back(ParseAnd());
    return ActorPredicate::Or(std::move(operands));
  }

  ActorPredicate ParseParenthesizedPredicate() {
    ExpectSymbol("(");
    ActorPredicate predicate = ParseOr();
    ExpectSymbol(")");
    return predicate;
  }

  CountBound ParseCountBound() {
    const Token& token = Peek();
    const NumberLiteral literal = ParseNumber();
    if (literal.integral) return CountBound{literal.value, false};
    if (literal.value > 1) {
      Fail("fraction-of-size bound must be in [0,1]", token);
    }
    return CountBound{literal.value, true};
  }

  RequirementBody ParseBody() {
    if (AcceptWord("anchor")) {
      if (AtEnd()) return AnchorDesignation{};
      return AnchorDesignation{Rest()};
    }
    if (AcceptWord("forall")) {
      ExpectWord("actor");
      bool except_anchor = false;
      if (AcceptWord("except")) {
        ExpectWord("anchor");
        except_anchor = true;
      }
      ForAllActors body{ParseParenthesizedPredicate(), except_anchor};
      ExpectEnd();
      return body;
    }
    if (AcceptWord("count")) {
      ExpectWord("actor");
      ActorPredicate predicate = ParseParenthesizedPredicate();
      const Comparator cmp = ParseComparator();
      CountActors body{std::move(predicate), cmp, ParseCountBound()};
      ExpectEnd();
      return body;
    }
    if (AcceptWord("exists")) {
      const Comparator cmp = ParseComparator();
      CountBound bound = ParseCountBound();
      ExpectWord("actor");
      CountActors body{ParseParenthesizedPredicate(), cmp, std::move(bound)};
      ExpectEnd();
      return body;
    }
    if (AcceptWord("path")) {
      PathScope scope;
      if (AcceptWord("all")) {
        scope = PathScope::kAllPairs;
      } else if (AcceptWord("anchor")) {
        ExpectSymbol("->");
        ExpectWord("others");
        scope = PathScope::kAnchorToOthers;
      } else if (AcceptWord("others")) {
        ExpectSymbol("->");
        ExpectWord("others");
        scope = PathScope::kOthersToOthers;
      } else {
        Fail(fmt::format("expected 'all', 'anchor->others' or "
                         "'others->others', found '{}'",
                         Describe(Peek())));
      }
      const Comparator cmp = ParseComparator();
      const Token& token = Peek();
      const NumberLiteral literal = ParseNumber();
      if (!literal.integral) Fail("path thresholds are integers", token);
      ExpectEnd();
      return PairwisePath{scope, cmp,
                          boost::multiprecision::numerator(literal.value)
                              .convert_to<int>()};
    }

    const Token& start = Peek();
    const MetricId metric = ParseMetric();
    if (!IsNetworkScoped(metric)) {
      Fail(fmt::format("actor metric '{}' needs 'forall actor' or "
                       "'count actor'",
                       MetricName(metric)),
           start);
    }
    const Comparator cmp = ParseComparator();
    NetworkConstraint body{metric, cmp, ParseThreshold(metric)};
    ExpectEnd();
    return body;
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string_view StripComment(std::string_view line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '#' &&
        (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))) {
      return line.substr(0, i);
    }
  }
  return line;
}

std::string Trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return std::string(text);
}

std::string OperandToString(const ActorPredicate& operand) {
  if (operand.kind() == ActorPredicate::Kind::kAnd ||
      operand.kind() == ActorPredicate::Kind::kOr) {
    return "(" + PredicateToString(operand) + ")";
  }
  return PredicateToString(operand);
}

std::string CountBoundToString(const CountBound& bound) {
  if (!bound.fraction_of_size) return LiteralString(bound.value);
  return LiteralString(bound.value * 100) + "%";
}

std::string_view PathScopeToString(PathScope scope) {
  switch (scope) {
    case PathScope::kAllPairs:
      return "all";
    case PathScope::kAnchorToOthers:
      return "anchor->others";
    case PathScope::kOthersToOthers:
      return "others->others";
  }
  return "all";
}

}  // namespace

RequirementSet ParseRequirements(std::string_view text,
                                 std::string default_name) {
  RequirementSet set(std::move(default_name));
  std::istringstream input{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(input, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string_view line = StripComment(raw);
    if (Trim(line).empty()) continue;

    LineParser parser(line, line_no);
    const Token& keyword = parser.Peek();
    try {
      if (parser.AcceptWord("name")) {
        std::string name = parser.AtEnd() ? "" : parser.Rest();
        if (name.empty()) parser.Fail("missing set name");
        set.set_name(std::move(name));
      } else if (parser.AcceptWord("anchor")) {
        AnchorDesignation anchor;
        if (!parser.AtEnd()) anchor.anchor = parser.Rest();
        set.Add("anchor", std::move(anchor));
      } else if (parser.AcceptWord("require")) {
        std::string label = fmt::format("R{}", set.size() + 1);
        if (parser.Peek().type == TokenType::kWord &&
            parser.Peek(1).type == TokenType::kSymbol &&
            parser.Peek(1).text == ":") {
          label = parser.Next().text;
          parser.Next();
        }
        set.Add(std::move(label), parser.ParseBody());
      } else {
        parser.Fail(fmt::format("expected 'require', 'anchor' or 'name', "
                                "found '{}'",
                                LineParser::Describe(keyword)));
      }
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), line_no, keyword.column);
    }
  }
  return set;
}

std::string AtomToString(const Atom& atom) {
  std::string out = fmt::format("{} {} ", MetricName(atom.metric),
                                ComparatorSymbol(atom.cmp));
  if (const auto* avg = std::get_if<AvgOfOthers>(&atom.reference)) {
    out += fmt::format("avg_others({})", MetricName(avg->metric));
  } else {
    out += LiteralString(std::get<Rational>(atom.reference));
  }
  if (atom.on_parent) out += " @parent";
  return out;
}

std::string PredicateToString(const ActorPredicate& predicate) {
  switch (predicate.kind()) {
    case ActorPredicate::Kind::kAtom:
      return AtomToString(predicate.atom());
    case ActorPredicate::Kind::kNot:
      return "not " + OperandToString(predicate.operands().front());
    case ActorPredicate::Kind::kAnd:
    case ActorPredicate::Kind::kOr: {
      const std::string_view glue =
          predicate.kind() == ActorPredicate::Kind::kAnd ? " and " : " or ";
      std::string out;
      for (std::size_t i = 0; i < predicate.operands().size(); ++i) {
        if (i > 0) out += glue;
        out += OperandToString(predicate.operands()[i]);
      }
      return out;
    }
  }
  return "";
}

std::string RequirementBodyToString(const RequirementBody& body) {
  return std::visit(
      [](const auto& b) -> std::string {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, NetworkConstraint>) {
          return fmt::format("{} {} {}", MetricName(b.metric),
                             ComparatorSymbol(b.cmp),
                             LiteralString(b.threshold));
        } else if constexpr (std::is_same_v<T, ForAllActors>) {
          return fmt::format("forall actor {}({})",
                             b.except_anchor ? "except anchor " : "",
                             PredicateToString(b.predicate));
        } else if constexpr (std::is_same_v<T, CountActors>) {
          return fmt::format("count actor ({}) {} {}",
                             PredicateToString(b.predicate),
                             ComparatorSymbol(b.cmp),
                             CountBoundToString(b.bound));
        } else if constexpr (std::is_same_v<T, PairwisePath>) {
          return fmt::format("path {} {} {}", PathScopeToString(b.scope),
                             ComparatorSymbol(b.cmp), b.threshold);
        } else {
          return b.anchor ? "anchor " + *b.anchor : "anchor";
        }
      },
      body);
}

std::string SerializeRequirements(const RequirementSet& set) {
  std::string out;
  if (!set.name().empty()) out += "name " + set.name() + "\n";
  for (const Requirement& r : set.requirements()) {
    out += fmt::format("require {} : {}\n", r.label,
                       RequirementBodyToString(r.body));
  }
  return out;
}

}  // namespace vbe
