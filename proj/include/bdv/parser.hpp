#ifndef BDV_PARSER_HPP
#define BDV_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "bdv/ast.hpp"
#include "bdv/span.hpp"

namespace bdv {

struct ParsedRules {
  std::vector<Rule> rules;  // valid only when diags is empty
  std::vector<Diagnostic> diags;

  bool ok() const { return diags.empty(); }
};

struct ParsedPred {
  PredPtr pred;
  std::vector<Diagnostic> diags;

  bool ok() const { return diags.empty(); }
};

struct ParsedExpr {
  ExprPtr expr;
  std::vector<Diagnostic> diags;

  bool ok() const { return diags.empty(); }
};

/// Parses a `.bdr` rule file. All-or-nothing per file: any diagnostic means
/// no rules are returned. Duplicate rule names within the file are rejected.
ParsedRules parse_rule_file(std::string_view source, std::string file);

/// Parses a single predicate (used by tests and the explain command).
ParsedPred parse_predicate(std::string_view source, std::string file = "<predicate>");

/// Parses a single expression (used by fixtures and tests).
ParsedExpr parse_expression(std::string_view source, std::string file = "<expression>");

}  // namespace bdv

#endif
