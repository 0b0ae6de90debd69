#include "odom/ideal_text.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

#include "odom/errors.hpp"

namespace odom {

namespace {

struct Token {
  char c;
  std::size_t pos;  // offset in the original text
};

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) chars_.push_back({text[i], i});
    }
    end_pos_ = text.size();
  }

  using Factors = std::vector<std::pair<std::string, Exponent>>;

  std::vector<std::pair<Factors, std::size_t>> parse() {
    if (chars_.empty()) throw ParseError("empty ideal", 0);
    std::vector<std::pair<Factors, std::size_t>> generators;
    while (true) {
      std::size_t start = position();
      generators.emplace_back(generator(), start);
      if (at_end()) break;
      expect(',');
    }
    return generators;
  }

 private:
  bool at_end() const { return cursor_ >= chars_.size(); }
  char peek() const { return at_end() ? '\0' : chars_[cursor_].c; }
  std::size_t position() const { return at_end() ? end_pos_ : chars_[cursor_].pos; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++cursor_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string found = at_end() ? "end of input" : std::string("'") + peek() + "'";
    throw ParseError(what + ", found " + found, position());
  }

  Factors generator() {
    Factors factors;
    factors.push_back(factor());
    while (peek() == '*') {
      ++cursor_;
      factors.push_back(factor());
    }
    return factors;
  }

  std::pair<std::string, Exponent> factor() {
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable");
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      name.push_back(peek());
      ++cursor_;
    }
    Exponent k = 1;
    if (peek() == '^') {
      ++cursor_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      std::size_t start = position();
      std::uint64_t value = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
        if (value > std::numeric_limits<Exponent>::max()) {
          throw ParseError("exponent too large", start);
        }
        ++cursor_;
      }
      if (value == 0) throw ParseError("exponent must be at least 1", start);
      k = static_cast<Exponent>(value);
    }
    return {std::move(name), k};
  }

  std::vector<Token> chars_;
  std::size_t cursor_ = 0;
  std::size_t end_pos_ = 0;
};

}  // namespace

ParsedIdeal parse_ideal(std::string_view text, const std::optional<std::vector<std::string>>& vars) {
  auto generators = Parser(text).parse();

  std::vector<std::string> names;
  if (vars) {
    names = *vars;
  } else {
    for (const auto& [factors, pos] : generators) {
      for (const auto& [name, k] : factors) {
        if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
      }
    }
  }
  auto table = std::make_shared<const VariableTable>(std::move(names));

  std::vector<Monomial> monomials;
  for (const auto& [factors, pos] : generators) {
    Monomial m(table->size());
    for (const auto& [name, k] : factors) {
      auto index = table->find(name);
      if (!index) throw ParseError("unknown variable '" + name + "'", pos);
      m[*index] += k;
    }
    monomials.push_back(std::move(m));
  }
  auto ideal = minimalize(table, monomials);
  bool reduced = ideal.q() != monomials.size();
  return {std::move(ideal), reduced};
}

std::vector<std::string> parse_variable_list(std::string_view text) {
  std::vector<std::string> names;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      names.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  names.push_back(std::move(current));
  // VariableTable validates names and uniqueness.
  VariableTable check(names);
  return names;
}

std::string render(const Monomial& m, const VariableTable& table) {
  if (m.size() != table.size()) throw StructuralError("monomial does not match variable table");
  std::string out;
  for (VarIndex i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += table.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string render(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += render(g, ideal.table());
  }
  return out;
}

std::string render_variables(VarSet vars, const VariableTable& table) {
  std::string out = "{";
  for (std::size_t i : members(vars)) {
    if (out.size() > 1) out += ", ";
    out += table.name(i);
  }
  return out + "}";
}

}  // namespace odom
