// Internal recursive-descent machinery shared by the rule, schema and
// scenario parsers. Not installed; include from src/ only.
#ifndef BDV_PARSER_IMPL_HPP
#define BDV_PARSER_IMPL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bdv/ast.hpp"
#include "bdv/lexer.hpp"
#include "bdv/span.hpp"

namespace bdv::detail {

struct ParseError {
  Diagnostic diag;
  std::size_t pos;  // token index of the failure, for furthest-failure choice
};

class TokenStream {
 public:
  TokenStream(std::vector<Token> tokens, std::string file)
      : tokens_(std::move(tokens)), file_(std::move(file)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& advance() {
    const Token& t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_eof() const { return peek().kind == Token::Kind::Eof; }
  std::size_t pos() const { return pos_; }
  void rewind(std::size_t p) { pos_ = p; }
  const std::string& file() const { return file_; }

  bool match_symbol(std::string_view s) {
    if (peek().is_symbol(s)) {
      advance();
      return true;
    }
    return false;
  }
  bool match_keyword(std::string_view s) {
    if (peek().is_keyword(s)) {
      advance();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::string message) const {
    throw ParseError{{DiagSeverity::Error, peek().span, std::move(message)}, pos_};
  }
  [[noreturn]] void fail_at(SourceSpan span, std::string message) const {
    throw ParseError{{DiagSeverity::Error, std::move(span), std::move(message)}, pos_};
  }

  void expect_symbol(std::string_view s) {
    if (!match_symbol(s)) {
      fail("expected '" + std::string(s) + "', found " + describe(peek()));
    }
  }
  void expect_keyword(std::string_view s) {
    if (!match_keyword(s)) {
      fail("expected '" + std::string(s) + "', found " + describe(peek()));
    }
  }
  std::string expect_ident(std::string_view what) {
    if (peek().kind != Token::Kind::Ident) {
      fail("expected " + std::string(what) + ", found " + describe(peek()));
    }
    return advance().text;
  }
  std::string expect_string(std::string_view what) {
    if (peek().kind != Token::Kind::String) {
      fail("expected " + std::string(what) + ", found " + describe(peek()));
    }
    return advance().text;
  }
  std::int64_t expect_integer(std::string_view what) {
    if (peek().kind != Token::Kind::Integer) {
      fail("expected " + std::string(what) + ", found " + describe(peek()));
    }
    return advance().int_val;
  }

  /// Span covering tokens [from, current).
  SourceSpan span_from(std::size_t from) const {
    SourceSpan s = tokens_[from].span;
    if (pos_ > from) {
      const SourceSpan& last = tokens_[pos_ - 1].span;
      s.end_line = last.end_line;
      s.end_col = last.end_col;
    }
    return s;
  }

  static std::string describe(const Token& t);

 private:
  std::vector<Token> tokens_;
  std::string file_;
  std::size_t pos_ = 0;
};

/// Full expression grammar, loosest binding level (maplet).
ExprPtr parse_expr(TokenStream& ts);

/// Full predicate grammar, loosest binding level (<=>).
PredPtr parse_pred(TokenStream& ts);

/// One `&`-separated predicate item (binds tighter than `&`); the WHERE
/// clause uses this for filters.
PredPtr parse_pred_item(TokenStream& ts);

/// Type syntax used by schemas and scenario fixtures:
///   INTEGER | BOOL | carrier | POW(T) | T*T | T <-> T | T arrow T
struct DeclaredType {
  Type type;                   // arrows and <-> normalize to POW(left*right)
  std::optional<Arrow> arrow;  // set when a function arrow was written
};
DeclaredType parse_declared_type(TokenStream& ts);

std::optional<Arrow> arrow_from_symbol(std::string_view sym);

/// Raises a ParseError naming arrows we deliberately do not support.
void reject_unsupported_arrow(TokenStream& ts);

}  // namespace bdv::detail

#endif
