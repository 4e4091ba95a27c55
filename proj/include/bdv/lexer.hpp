#ifndef BDV_LEXER_HPP
#define BDV_LEXER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bdv/span.hpp"

namespace bdv {

struct Token {
  enum class Kind : std::uint8_t { Ident, Keyword, Integer, String, Symbol, Eof };

  Kind kind = Kind::Eof;
  std::string text;          // identifier, keyword, symbol or decoded string
  std::int64_t int_val = 0;  // Integer
  SourceSpan span;

  bool is_symbol(std::string_view s) const {
    return kind == Kind::Symbol && text == s;
  }
  bool is_keyword(std::string_view s) const {
    return kind == Kind::Keyword && text == s;
  }
};

struct LexResult {
  std::vector<Token> tokens;  // always ends with an Eof token
  std::vector<Diagnostic> diags;
};

/// Tokenizes rule/schema/scenario/predicate source. Comments are `//` to end
/// of line and `/* */` blocks. Keywords are reserved and never lex as
/// identifiers.
LexResult lex(std::string_view source, std::string file);

bool is_reserved_word(std::string_view word);

}  // namespace bdv

#endif
