#include "bdv/lexer.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <unordered_set>

namespace bdv {

namespace {

const std::unordered_set<std::string_view>& reserved_words() {
  static const std::unordered_set<std::string_view> kWords = {
      // file structure
      "RULE", "WHERE", "VERIFY", "MESSAGE", "END", "DOC", "CLASS", "SEVERITY",
      "CARRIER", "CONSTANT", "COLLECT", "FROM", "COLS", "PATH", "PATHS",
      "SCENARIO", "GIVEN", "EXPECT", "OK", "KO", "COUNT", "WITH",
      // types and literals
      "INTEGER", "BOOL", "POW", "ERROR", "WARNING", "TRUE", "FALSE",
      // expression keywords
      "or", "not", "mod", "dom", "ran", "card", "min", "max",
  };
  return kWords;
}

// Multi-character symbols, longest first. `>+>`, `+->>` and `>+>>` are
// unsupported arrows lexed as single tokens so the parser can name them in
// its diagnostic.
constexpr std::array<std::string_view, 25> kSymbols = {
    ">+>>", ">->>", "-->>", "+->>",
    "+->", "-->", ">->", ">+>", "<->", "|->", "<<|", "|>>", "<=>", "/<:",
    "..", "\\/", "/\\", "<=", ">=", "/=", "/:", "<:", "<|", "|>", "=>",
};
constexpr std::string_view kSingleSymbols = "+-*/(){}[],:=<>&~.|!#;";

}  // namespace

bool is_reserved_word(std::string_view word) {
  return reserved_words().count(word) != 0;
}

LexResult lex(std::string_view src, std::string file) {
  LexResult out;
  std::size_t i = 0;
  int line = 1, col = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto here = [&]() {
    SourceSpan s;
    s.file = file;
    s.start_line = s.end_line = line;
    s.start_col = s.end_col = col;
    return s;
  };
  auto push = [&](Token::Kind kind, std::string text, SourceSpan span) {
    span.end_line = line;
    span.end_col = col;
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.span = std::move(span);
    out.tokens.push_back(std::move(t));
  };
  auto error = [&](SourceSpan span, std::string msg) {
    span.end_line = line;
    span.end_col = col;
    out.diags.push_back({DiagSeverity::Error, std::move(span), std::move(msg)});
  };

  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
      SourceSpan span = here();
      advance(2);
      bool closed = false;
      while (i < src.size()) {
        if (src[i] == '*' && i + 1 < src.size() && src[i + 1] == '/') {
          advance(2);
          closed = true;
          break;
        }
        advance(1);
      }
      if (!closed) error(span, "unterminated block comment");
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      SourceSpan span = here();
      std::string digits;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        digits += src[i];
        advance(1);
      }
      Token t;
      t.kind = Token::Kind::Integer;
      t.text = digits;
      try {
        std::size_t pos = 0;
        t.int_val = std::stoll(digits, &pos);
      } catch (const std::out_of_range&) {
        error(span, "integer literal out of 64-bit range: " + digits);
        t.int_val = 0;
      }
      t.span = span;
      t.span.end_line = line;
      t.span.end_col = col;
      out.tokens.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      SourceSpan span = here();
      std::string word;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        word += src[i];
        advance(1);
      }
      push(is_reserved_word(word) ? Token::Kind::Keyword : Token::Kind::Ident,
           std::move(word), span);
      continue;
    }
    if (c == '"') {
      SourceSpan span = here();
      advance(1);
      std::string text;
      bool closed = false;
      while (i < src.size()) {
        char d = src[i];
        if (d == '"') {
          advance(1);
          closed = true;
          break;
        }
        if (d == '\n') break;  // strings do not span lines
        if (d == '\\' && i + 1 < src.size()) {
          char e = src[i + 1];
          switch (e) {
            case '"': text += '"'; break;
            case '\\': text += '\\'; break;
            case 'n': text += '\n'; break;
            case 't': text += '\t'; break;
            default:
              error(here(), std::string("unknown escape sequence \\") + e);
              text += e;
          }
          advance(2);
          continue;
        }
        text += d;
        advance(1);
      }
      if (!closed) {
        error(span, "unterminated string literal");
      }
      push(Token::Kind::String, std::move(text), span);
      continue;
    }
    // multi-character symbols, longest match first
    {
      std::string_view rest = src.substr(i);
      bool matched = false;
      for (std::string_view sym : kSymbols) {
        if (rest.substr(0, sym.size()) == sym) {
          SourceSpan span = here();
          advance(sym.size());
          push(Token::Kind::Symbol, std::string(sym), span);
          matched = true;
          break;
        }
      }
      if (matched) continue;
    }
    if (kSingleSymbols.find(c) != std::string_view::npos) {
      SourceSpan span = here();
      advance(1);
      push(Token::Kind::Symbol, std::string(1, c), span);
      continue;
    }
    {
      SourceSpan span = here();
      advance(1);
      error(span, std::string("unexpected character '") + c + "'");
    }
  }

  Token eof;
  eof.kind = Token::Kind::Eof;
  eof.text = "<eof>";
  eof.span = here();
  out.tokens.push_back(std::move(eof));
  return out;
}

}  // namespace bdv
