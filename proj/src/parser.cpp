#include "bdv/parser.hpp"

#include <set>
#include <utility>

#include "bdv/lexer.hpp"
#include "parser_impl.hpp"

namespace bdv {

namespace detail {

std::string TokenStream::describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::Ident: return "identifier '" + t.text + "'";
    case Token::Kind::Keyword: return "keyword '" + t.text + "'";
    case Token::Kind::Integer: return "integer " + t.text;
    case Token::Kind::String: return "string literal";
    case Token::Kind::Symbol: return "'" + t.text + "'";
    case Token::Kind::Eof: return "end of input";
  }
  return "token";
}

std::optional<Arrow> arrow_from_symbol(std::string_view sym) {
  if (sym == "+->") return Arrow::PartialFn;
  if (sym == "-->") return Arrow::TotalFn;
  if (sym == ">->") return Arrow::TotalInj;
  if (sym == "-->>") return Arrow::TotalSurj;
  if (sym == ">->>") return Arrow::TotalBij;
  return std::nullopt;
}

void reject_unsupported_arrow(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.is_symbol(">+>") || t.is_symbol("+->>") || t.is_symbol(">+>>")) {
    ts.fail("unsupported arrow '" + t.text +
            "' (supported arrows: +->, -->, >->, -->>, >->>)");
  }
}

namespace {

bool peek_arrow(const TokenStream& ts) {
  return ts.peek().kind == Token::Kind::Symbol &&
         arrow_from_symbol(ts.peek().text).has_value();
}

// ---------------------------------------------------------------------------
// Expressions
//
// Binding levels, loosest first:
//   maplet |->  <  compose ;  <  union \/  <  restrictions <| <<| |> |>>
//   <  inter /\  <  interval ..  <  additive + -  <  multiplicative * / mod
//   <  unary -  <  postfix apply/image/inverse  <  primary

ExprPtr parse_maplet(TokenStream& ts);

ExprPtr binary(Expr::Op op, ExprPtr lhs, ExprPtr rhs, SourceSpan span) {
  auto e = make_expr(op, std::move(span));
  e->args = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr parse_set_braces(TokenStream& ts) {
  std::size_t start = ts.pos();
  ts.expect_symbol("{");
  // comprehension: {x | x : E & P}
  if (ts.peek().kind == Token::Kind::Ident && ts.peek(1).is_symbol("|")) {
    std::string var = ts.expect_ident("variable");
    ts.expect_symbol("|");
    PredPtr body = parse_pred(ts);
    ts.expect_symbol("}");
    auto e = make_expr(Expr::Op::Comprehension, ts.span_from(start));
    e->var = std::move(var);
    e->body = std::move(body);
    return e;
  }
  auto e = make_expr(Expr::Op::SetExt, {});
  if (!ts.peek().is_symbol("}")) {
    e->args.push_back(parse_expr(ts));
    while (ts.match_symbol(",")) e->args.push_back(parse_expr(ts));
  }
  ts.expect_symbol("}");
  e->span = ts.span_from(start);
  return e;
}

ExprPtr parse_primary(TokenStream& ts) {
  std::size_t start = ts.pos();
  const Token& t = ts.peek();
  if (t.kind == Token::Kind::Integer) {
    ts.advance();
    auto e = make_expr(Expr::Op::IntLit, ts.span_from(start));
    e->int_val = t.int_val;
    return e;
  }
  if (t.is_keyword("TRUE") || t.is_keyword("FALSE")) {
    bool v = t.is_keyword("TRUE");
    ts.advance();
    auto e = make_expr(Expr::Op::BoolLit, ts.span_from(start));
    e->bool_val = v;
    return e;
  }
  if (t.kind == Token::Kind::Ident) {
    ts.advance();
    auto e = make_expr(Expr::Op::Ident, ts.span_from(start));
    e->name = t.text;
    return e;
  }
  // dom / ran / card / min / max
  for (const char* fn : {"dom", "ran", "card", "min", "max"}) {
    if (t.is_keyword(fn)) {
      ts.advance();
      ts.expect_symbol("(");
      ExprPtr arg = parse_expr(ts);
      ts.expect_symbol(")");
      Expr::Op op = t.text == "dom"   ? Expr::Op::Dom
                    : t.text == "ran" ? Expr::Op::Ran
                    : t.text == "card" ? Expr::Op::Card
                    : t.text == "min"  ? Expr::Op::Min
                                       : Expr::Op::Max;
      auto e = make_expr(op, ts.span_from(start));
      e->args = {std::move(arg)};
      return e;
    }
  }
  if (t.is_symbol("(")) {
    ts.advance();
    ExprPtr inner = parse_expr(ts);
    ts.expect_symbol(")");
    return inner;
  }
  if (t.is_symbol("{")) return parse_set_braces(ts);
  reject_unsupported_arrow(ts);
  ts.fail("expected expression, found " + TokenStream::describe(t));
}

ExprPtr parse_postfix(TokenStream& ts) {
  std::size_t start = ts.pos();
  ExprPtr e = parse_primary(ts);
  for (;;) {
    if (ts.peek().is_symbol("(")) {
      ts.advance();
      ExprPtr arg = parse_expr(ts);
      ts.expect_symbol(")");
      e = binary(Expr::Op::Apply, std::move(e), std::move(arg), ts.span_from(start));
    } else if (ts.peek().is_symbol("[")) {
      ts.advance();
      ExprPtr arg = parse_expr(ts);
      ts.expect_symbol("]");
      e = binary(Expr::Op::Image, std::move(e), std::move(arg), ts.span_from(start));
    } else if (ts.peek().is_symbol("~")) {
      ts.advance();
      auto inv = make_expr(Expr::Op::Inverse, ts.span_from(start));
      inv->args = {std::move(e)};
      e = std::move(inv);
    } else {
      return e;
    }
  }
}

ExprPtr parse_unary(TokenStream& ts) {
  std::size_t start = ts.pos();
  if (ts.match_symbol("-")) {
    ExprPtr arg = parse_unary(ts);
    auto e = make_expr(Expr::Op::Neg, ts.span_from(start));
    e->args = {std::move(arg)};
    return e;
  }
  return parse_postfix(ts);
}

ExprPtr parse_multiplicative(TokenStream& ts) {
  std::size_t start = ts.pos();
  ExprPtr e = parse_unary(ts);
  for (;;) {
    Expr::Op op;
    if (ts.peek().is_symbol("*")) op = Expr::Op::Mul;
    else if (ts.peek().is_symbol("/")) op = Expr::Op::Div;
    else if (ts.peek().is_keyword("mod")) op = Expr::Op::Mod;
    else return e;
    ts.advance();
    e = binary(op, std::move(e), parse_unary(ts), ts.span_from(start));
  }
}

ExprPtr parse_additive(TokenStream& ts) {
  std::size_t start = ts.pos();
  ExprPtr e = parse_multiplicative(ts);
  for (;;) {
    Expr::Op op;
    if (ts.peek().is_symbol("+")) op = Expr::Op::Add;
    else if (ts.peek().is_symbol("-")) op = Expr::Op::Sub;
    else return e;
    ts.advance();
    e = binary(op, std::move(e), parse_multiplicative(ts), ts.span_from(start));
  }
}

ExprPtr parse_interval(TokenStream& ts) {
  std::size_t start = ts.pos();
  ExprPtr e = parse_additive(ts);
  if (ts.match_symbol("..")) {
    e = binary(Expr::Op::Interval, std::move(e), parse_additive(ts),
               ts.span_from(start));
  }
  return e;
}

ExprPtr parse_inter(TokenStream& ts) {
  std::size_t start = ts.pos();
  ExprPtr e = parse_interval(ts);
  while (ts.match_symbol("/\\")) {
    e = binary(Expr::Op::Inter, std::move(e), parse_interval(ts),
               ts.span_from(start));
  }
  return e;
}

ExprPtr parse_restrict(TokenStream& ts) {
  std::size_t start = ts.pos();
  ExprPtr e = parse_inter(ts);
  for (;;) {
    Expr::Op op;
    if (ts.peek().is_symbol("<|")) op = Expr::Op::DomRestrict;
    else if (ts.peek().is_symbol("<<|")) op = Expr::Op::DomSubtract;
    else if (ts.peek().is_symbol("|>")) op = Expr::Op::RanRestrict;
    else if (ts.peek().is_symbol("|>>")) op = Expr::Op::RanSubtract;
    else return e;
    ts.advance();
    e = binary(op, std::move(e), parse_inter(ts), ts.span_from(start));
  }
}

ExprPtr parse_union(TokenStream& ts) {
  std::size_t start = ts.pos();
  ExprPtr e = parse_restrict(ts);
  while (ts.match_symbol("\\/")) {
    e = binary(Expr::Op::Union, std::move(e), parse_restrict(ts),
               ts.span_from(start));
  }
  return e;
}

ExprPtr parse_compose(TokenStream& ts) {
  std::size_t start = ts.pos();
  ExprPtr e = parse_union(ts);
  while (ts.match_symbol(";")) {
    e = binary(Expr::Op::Compose, std::move(e), parse_union(ts),
               ts.span_from(start));
  }
  return e;
}

ExprPtr parse_maplet(TokenStream& ts) {
  std::size_t start = ts.pos();
  ExprPtr e = parse_compose(ts);
  while (ts.match_symbol("|->")) {
    e = binary(Expr::Op::Maplet, std::move(e), parse_compose(ts),
               ts.span_from(start));
  }
  return e;
}

// ---------------------------------------------------------------------------
// Predicates

PredPtr relational(Pred::Op op, ExprPtr lhs, ExprPtr rhs, SourceSpan span) {
  auto p = make_pred(op, std::move(span));
  p->exprs = {std::move(lhs), std::move(rhs)};
  return p;
}

PredPtr parse_relational(TokenStream& ts) {
  std::size_t start = ts.pos();
  ExprPtr lhs = parse_expr(ts);
  const Token& t = ts.peek();
  Pred::Op op;
  if (t.is_symbol("=")) op = Pred::Op::Eq;
  else if (t.is_symbol("/=")) op = Pred::Op::Neq;
  else if (t.is_symbol(":")) op = Pred::Op::Mem;
  else if (t.is_symbol("/:")) op = Pred::Op::NotMem;
  else if (t.is_symbol("<:")) op = Pred::Op::Subset;
  else if (t.is_symbol("/<:")) op = Pred::Op::NotSubset;
  else if (t.is_symbol("<")) op = Pred::Op::Lt;
  else if (t.is_symbol("<=")) op = Pred::Op::Le;
  else if (t.is_symbol(">")) op = Pred::Op::Gt;
  else if (t.is_symbol(">=")) op = Pred::Op::Ge;
  else {
    reject_unsupported_arrow(ts);
    ts.fail("expected a relational operator after expression, found " +
            TokenStream::describe(t));
  }
  ts.advance();
  ExprPtr rhs = parse_expr(ts);

  if (op == Pred::Op::Mem && peek_arrow(ts)) {
    Arrow arrow = *arrow_from_symbol(ts.advance().text);
    ExprPtr codomain = parse_expr(ts);
    if (peek_arrow(ts)) ts.fail("function arrows do not chain");
    reject_unsupported_arrow(ts);
    auto p = make_pred(Pred::Op::ArrowMem, ts.span_from(start));
    p->exprs = {std::move(lhs), std::move(rhs), std::move(codomain)};
    p->arrow = arrow;
    return p;
  }
  reject_unsupported_arrow(ts);
  if (peek_arrow(ts)) {
    ts.fail("arrow membership is only supported with ':'");
  }
  return relational(op, std::move(lhs), std::move(rhs), ts.span_from(start));
}

PredPtr parse_quantifier(TokenStream& ts, Pred::Op op) {
  std::size_t start = ts.pos();
  ts.advance();  // ! or #
  ts.expect_symbol("(");
  std::string var = ts.expect_ident("quantified variable");
  ts.expect_symbol(")");
  ts.expect_symbol(".");
  ts.expect_symbol("(");
  PredPtr body = parse_pred(ts);
  ts.expect_symbol(")");
  auto p = make_pred(op, ts.span_from(start));
  p->var = std::move(var);
  p->body = std::move(body);
  return p;
}

PredPtr parse_pred_atom(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.is_symbol("!")) return parse_quantifier(ts, Pred::Op::Forall);
  if (t.is_symbol("#")) return parse_quantifier(ts, Pred::Op::Exists);
  if (t.is_symbol("(")) {
    // Either a parenthesized predicate or a parenthesized expression that
    // starts a relational atom; try the predicate reading first and keep
    // whichever parse reaches further on failure.
    std::size_t save = ts.pos();
    ParseError pred_err{{}, 0};
    try {
      ts.advance();
      PredPtr p = parse_pred(ts);
      ts.expect_symbol(")");
      return p;
    } catch (ParseError& e) {
      pred_err = std::move(e);
      ts.rewind(save);
    }
    try {
      return parse_relational(ts);
    } catch (ParseError& e) {
      throw e.pos >= pred_err.pos ? e : pred_err;
    }
  }
  return parse_relational(ts);
}

PredPtr parse_negation(TokenStream& ts) {
  std::size_t start = ts.pos();
  if (ts.match_keyword("not")) {
    PredPtr arg = parse_negation(ts);
    auto p = make_pred(Pred::Op::Not, ts.span_from(start));
    p->preds = {std::move(arg)};
    return p;
  }
  return parse_pred_atom(ts);
}

PredPtr connective(Pred::Op op, PredPtr lhs, PredPtr rhs, SourceSpan span) {
  auto p = make_pred(op, std::move(span));
  p->preds = {std::move(lhs), std::move(rhs)};
  return p;
}

PredPtr parse_conj(TokenStream& ts) {
  std::size_t start = ts.pos();
  PredPtr p = parse_negation(ts);
  while (ts.match_symbol("&")) {
    p = connective(Pred::Op::And, std::move(p), parse_negation(ts),
                   ts.span_from(start));
  }
  return p;
}

PredPtr parse_disj(TokenStream& ts) {
  std::size_t start = ts.pos();
  PredPtr p = parse_conj(ts);
  while (ts.match_keyword("or")) {
    p = connective(Pred::Op::Or, std::move(p), parse_conj(ts),
                   ts.span_from(start));
  }
  return p;
}

PredPtr parse_implies(TokenStream& ts) {
  std::size_t start = ts.pos();
  PredPtr p = parse_disj(ts);
  if (ts.match_symbol("=>")) {
    // right-associative
    p = connective(Pred::Op::Implies, std::move(p), parse_implies(ts),
                   ts.span_from(start));
  }
  return p;
}

PredPtr parse_iff(TokenStream& ts) {
  std::size_t start = ts.pos();
  PredPtr p = parse_implies(ts);
  if (ts.match_symbol("<=>")) {
    p = connective(Pred::Op::Iff, std::move(p), parse_iff(ts),
                   ts.span_from(start));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Types (schemas and fixtures)

Type parse_type_atom(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.is_keyword("INTEGER")) {
    ts.advance();
    return Type::integer();
  }
  if (t.is_keyword("BOOL")) {
    ts.advance();
    return Type::boolean();
  }
  if (t.is_keyword("POW")) {
    ts.advance();
    ts.expect_symbol("(");
    DeclaredType inner = parse_declared_type(ts);
    ts.expect_symbol(")");
    return Type::power(inner.type);
  }
  if (t.kind == Token::Kind::Ident) {
    ts.advance();
    return Type::given(t.text);
  }
  if (t.is_symbol("(")) {
    ts.advance();
    DeclaredType inner = parse_declared_type(ts);
    ts.expect_symbol(")");
    return inner.type;
  }
  ts.fail("expected a type, found " + TokenStream::describe(t));
}

Type parse_type_prod(TokenStream& ts) {
  Type t = parse_type_atom(ts);
  while (ts.match_symbol("*")) {
    t = Type::prod(std::move(t), parse_type_atom(ts));
  }
  return t;
}

}  // namespace

ExprPtr parse_expr(TokenStream& ts) { return parse_maplet(ts); }

PredPtr parse_pred(TokenStream& ts) { return parse_iff(ts); }

PredPtr parse_pred_item(TokenStream& ts) { return parse_negation(ts); }

DeclaredType parse_declared_type(TokenStream& ts) {
  Type left = parse_type_prod(ts);
  reject_unsupported_arrow(ts);
  if (ts.match_symbol("<->")) {
    Type right = parse_type_prod(ts);
    return {Type::power(Type::prod(std::move(left), std::move(right))),
            std::nullopt};
  }
  if (peek_arrow(ts)) {
    Arrow arrow = *arrow_from_symbol(ts.advance().text);
    Type right = parse_type_prod(ts);
    return {Type::power(Type::prod(std::move(left), std::move(right))), arrow};
  }
  return {std::move(left), std::nullopt};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rule files

namespace {

using detail::ParseError;
using detail::TokenStream;

MessageTemplate parse_message_template(const std::string& raw,
                                       const SourceSpan& span,
                                       const std::vector<Binding>& bindings,
                                       std::vector<Diagnostic>& diags) {
  MessageTemplate tmpl;
  tmpl.source = raw;
  std::string literal;
  std::size_t i = 0;
  auto flush = [&] {
    if (!literal.empty()) {
      tmpl.parts.push_back({false, literal});
      literal.clear();
    }
  };
  while (i < raw.size()) {
    if (raw[i] == '$' && i + 1 < raw.size() && raw[i + 1] == '{') {
      std::size_t close = raw.find('}', i + 2);
      if (close == std::string::npos) {
        diags.push_back({DiagSeverity::Error, span,
                         "unterminated ${...} placeholder in message"});
        break;
      }
      std::string name = raw.substr(i + 2, close - i - 2);
      bool known = false;
      for (const auto& b : bindings) known = known || b.var == name;
      if (!known) {
        diags.push_back({DiagSeverity::Error, span,
                         "message placeholder ${" + name +
                             "} does not name a WHERE binding variable"});
      }
      flush();
      tmpl.parts.push_back({true, std::move(name)});
      i = close + 1;
      continue;
    }
    literal += raw[i];
    ++i;
  }
  flush();
  return tmpl;
}

Rule parse_rule_block(TokenStream& ts, std::vector<Diagnostic>& diags) {
  std::size_t start = ts.pos();
  ts.expect_keyword("RULE");
  Rule rule;
  rule.name = ts.expect_ident("rule name");
  if (ts.match_keyword("DOC")) {
    if (ts.peek().kind != Token::Kind::String) {
      ts.fail("expected string after DOC");
    }
    rule.doc = ts.advance().text;
  }
  if (ts.match_keyword("CLASS")) {
    rule.error_class = ts.expect_ident("error class");
  }
  if (ts.match_keyword("SEVERITY")) {
    if (ts.match_keyword("ERROR")) {
      rule.severity = Severity::Error;
    } else if (ts.match_keyword("WARNING")) {
      rule.severity = Severity::Warning;
    } else {
      ts.fail("expected ERROR or WARNING after SEVERITY");
    }
  }
  ts.expect_keyword("WHERE");

  // WHERE items are & -separated. `x : E` with a fresh x introduces a
  // binding; anything else (including a parenthesized membership and `x : E`
  // with x already bound) is a filter.
  for (;;) {
    std::size_t item_start = ts.pos();
    bool binding_shape = ts.peek().kind == Token::Kind::Ident &&
                         ts.peek(1).is_symbol(":");
    if (binding_shape) {
      std::string var = ts.expect_ident("binding variable");
      ts.expect_symbol(":");
      ExprPtr domain = detail::parse_expr(ts);
      if (ts.peek().kind == Token::Kind::Symbol &&
          detail::arrow_from_symbol(ts.peek().text)) {
        // arrow membership filter, e.g. `linked : t_signal +-> t_ik`
        Arrow arrow = *detail::arrow_from_symbol(ts.advance().text);
        ExprPtr codomain = detail::parse_expr(ts);
        auto f = make_expr(Expr::Op::Ident, ts.span_from(item_start));
        f->name = var;
        auto p = make_pred(Pred::Op::ArrowMem, ts.span_from(item_start));
        p->exprs = {std::move(f), std::move(domain), std::move(codomain)};
        p->arrow = arrow;
        rule.filters.push_back(std::move(p));
      } else {
        bool already_bound = false;
        for (const auto& b : rule.bindings) {
          already_bound = already_bound || b.var == var;
        }
        if (already_bound) {
          auto lhs = make_expr(Expr::Op::Ident, ts.span_from(item_start));
          lhs->name = var;
          auto p = make_pred(Pred::Op::Mem, ts.span_from(item_start));
          p->exprs = {std::move(lhs), std::move(domain)};
          rule.filters.push_back(std::move(p));
        } else {
          rule.bindings.push_back(
              {std::move(var), std::move(domain), ts.span_from(item_start)});
        }
      }
    } else {
      rule.filters.push_back(detail::parse_pred_item(ts));
    }
    if (!ts.match_symbol("&")) break;
  }
  if (rule.bindings.empty()) {
    ts.fail_at(ts.span_from(start),
               "rule '" + rule.name + "' has no WHERE binding (write `x : E`)");
  }

  ts.expect_keyword("VERIFY");
  rule.verify = detail::parse_pred(ts);
  ts.expect_keyword("MESSAGE");
  if (ts.peek().kind != Token::Kind::String) {
    ts.fail("expected message string after MESSAGE");
  }
  SourceSpan msg_span = ts.peek().span;
  std::string raw = ts.advance().text;
  rule.message = parse_message_template(raw, msg_span, rule.bindings, diags);
  ts.expect_keyword("END");
  rule.span = ts.span_from(start);
  return rule;
}

}  // namespace

ParsedRules parse_rule_file(std::string_view source, std::string file) {
  ParsedRules out;
  LexResult lexed = lex(source, file);
  out.diags = lexed.diags;
  TokenStream ts(std::move(lexed.tokens), file);

  std::set<std::string> seen;
  while (!ts.at_eof()) {
    if (!ts.peek().is_keyword("RULE")) {
      out.diags.push_back({DiagSeverity::Error, ts.peek().span,
                           "expected RULE, found " +
                               TokenStream::describe(ts.peek())});
      // resynchronize on the next RULE keyword
      while (!ts.at_eof() && !ts.peek().is_keyword("RULE")) ts.advance();
      continue;
    }
    try {
      Rule r = parse_rule_block(ts, out.diags);
      if (!seen.insert(r.name).second) {
        out.diags.push_back({DiagSeverity::Error, r.span,
                             "duplicate rule name '" + r.name + "'"});
      } else {
        out.rules.push_back(std::move(r));
      }
    } catch (ParseError& e) {
      out.diags.push_back(std::move(e.diag));
      if (ts.peek().is_keyword("RULE")) continue;  // resume at the next rule
      ts.advance();
      while (!ts.at_eof() && !ts.peek().is_keyword("RULE")) ts.advance();
    }
  }
  if (!out.diags.empty()) out.rules.clear();
  return out;
}

ParsedPred parse_predicate(std::string_view source, std::string file) {
  ParsedPred out;
  LexResult lexed = lex(source, file);
  out.diags = lexed.diags;
  if (!out.diags.empty()) return out;
  TokenStream ts(std::move(lexed.tokens), file);
  try {
    out.pred = detail::parse_pred(ts);
    if (!ts.at_eof()) {
      ts.fail("unexpected " + TokenStream::describe(ts.peek()) +
              " after predicate");
    }
  } catch (ParseError& e) {
    out.pred = nullptr;
    out.diags.push_back(std::move(e.diag));
  }
  return out;
}

ParsedExpr parse_expression(std::string_view source, std::string file) {
  ParsedExpr out;
  LexResult lexed = lex(source, file);
  out.diags = lexed.diags;
  if (!out.diags.empty()) return out;
  TokenStream ts(std::move(lexed.tokens), file);
  try {
    out.expr = detail::parse_expr(ts);
    if (!ts.at_eof()) {
      ts.fail("unexpected " + TokenStream::describe(ts.peek()) +
              " after expression");
    }
  } catch (ParseError& e) {
    out.expr = nullptr;
    out.diags.push_back(std::move(e.diag));
  }
  return out;
}

}  // namespace bdv
