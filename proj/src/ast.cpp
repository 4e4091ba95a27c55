#include "bdv/ast.hpp"

namespace bdv {

const char* arrow_text(Arrow a) {
  switch (a) {
    case Arrow::PartialFn: return "+->";
    case Arrow::TotalFn: return "-->";
    case Arrow::TotalInj: return ">->";
    case Arrow::TotalSurj: return "-->>";
    case Arrow::TotalBij: return ">->>";
  }
  return "?";
}

ExprPtr make_expr(Expr::Op op, SourceSpan span) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->span = std::move(span);
  return e;
}

PredPtr make_pred(Pred::Op op, SourceSpan span) {
  auto p = std::make_shared<Pred>();
  p->op = op;
  p->span = std::move(span);
  return p;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.op != b.op) return false;
  switch (a.op) {
    case Expr::Op::Ident:
      if (a.name != b.name) return false;
      break;
    case Expr::Op::IntLit:
      if (a.int_val != b.int_val) return false;
      break;
    case Expr::Op::BoolLit:
      if (a.bool_val != b.bool_val) return false;
      break;
    case Expr::Op::Comprehension:
      if (a.var != b.var) return false;
      if (!pred_equal(*a.body, *b.body)) return false;
      break;
    default:
      break;
  }
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!expr_equal(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

bool pred_equal(const Pred& a, const Pred& b) {
  if (a.op != b.op) return false;
  if (a.op == Pred::Op::Forall || a.op == Pred::Op::Exists) {
    return a.var == b.var && pred_equal(*a.body, *b.body);
  }
  if (a.op == Pred::Op::ArrowMem && a.arrow != b.arrow) return false;
  if (a.preds.size() != b.preds.size()) return false;
  if (a.exprs.size() != b.exprs.size()) return false;
  for (std::size_t i = 0; i < a.preds.size(); ++i) {
    if (!pred_equal(*a.preds[i], *b.preds[i])) return false;
  }
  for (std::size_t i = 0; i < a.exprs.size(); ++i) {
    if (!expr_equal(*a.exprs[i], *b.exprs[i])) return false;
  }
  return true;
}

bool operator==(const MessageTemplate& a, const MessageTemplate& b) {
  return a.source == b.source;
}

}  // namespace bdv
