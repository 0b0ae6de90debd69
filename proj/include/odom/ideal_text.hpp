#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "odom/monomial.hpp"

namespace odom {

// Text form of an ideal:
//
//   ideal     := generator ("," generator)*
//   generator := factor ("*" factor)*
//   factor    := var | var "^" k        k >= 1, decimal
//   var       := [A-Za-z][A-Za-z0-9_]*
//
// Whitespace is ignored everywhere.
struct ParsedIdeal {
  MonomialIdeal ideal;
  // True when some generator was dropped as redundant or duplicate.
  bool reduced = false;
};

// Without `vars` the table lists variables in order of first appearance.
// With `vars` the table is exactly that list, so unused variables still
// count towards n.
ParsedIdeal parse_ideal(std::string_view text,
                        const std::optional<std::vector<std::string>>& vars = std::nullopt);

// Comma separated variable list, e.g. "a,b,c,d".
std::vector<std::string> parse_variable_list(std::string_view text);

std::string render(const Monomial& m, const VariableTable& table);
std::string render(const MonomialIdeal& ideal);
std::string render_variables(VarSet vars, const VariableTable& table);

}  // namespace odom
