#ifndef BDV_AST_HPP
#define BDV_AST_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "bdv/span.hpp"
#include "bdv/value.hpp"

namespace bdv {

struct Expr;
struct Pred;
using ExprPtr = std::shared_ptr<Expr>;
using PredPtr = std::shared_ptr<Pred>;

/// Function arrows accepted in arrow-membership predicates and in schema
/// type declarations.
enum class Arrow : std::uint8_t {
  PartialFn,   // +->
  TotalFn,     // -->
  TotalInj,    // >->
  TotalSurj,   // -->>
  TotalBij,    // >->>
};

const char* arrow_text(Arrow a);

/// How an identifier was resolved by the typechecker.
enum class IdentKind : std::uint8_t {
  Unresolved,
  BoundVar,        // quantifier / comprehension / WHERE binding variable
  Constant,        // universe constant
  CarrierSet,      // carrier name, denotes the full carrier as a set
  CarrierElement,  // element of an explicitly enumerated carrier
};

/// Expression node. `Sub` and `Mul` are what the parser emits for `-` and
/// `*`; the typechecker rewrites them to `Diff` / `Cartesian` when the
/// operands are set-typed.
struct Expr {
  enum class Op : std::uint8_t {
    Ident,
    IntLit,
    BoolLit,
    SetExt,         // {e1,...,en}; empty vector is the empty set
    Comprehension,  // {x | x : E & P}; args[0] = E, body = full predicate
    Maplet,         // a|->b
    Interval,       // a..b
    Add, Sub, Mul, Div, Mod, Neg,
    Union, Inter, Diff, Cartesian,
    Dom, Ran, Inverse,
    Image,          // r[s]
    Apply,          // f(e)
    Card, Min, Max,
    DomRestrict,    // s <| r
    DomSubtract,    // s <<| r
    RanRestrict,    // r |> s
    RanSubtract,    // r |>> s
    Compose,        // r1 ; r2
  };

  Op op;
  SourceSpan span;

  std::string name;           // Ident
  std::int64_t int_val = 0;   // IntLit
  bool bool_val = false;      // BoolLit
  std::vector<ExprPtr> args;  // operands, in source order
  std::string var;            // Comprehension variable
  PredPtr body;               // Comprehension body

  // Filled in by the typechecker.
  Type type;
  IdentKind ident_kind = IdentKind::Unresolved;
  std::string carrier;  // CarrierElement: owning carrier
};

/// Predicate node.
struct Pred {
  enum class Op : std::uint8_t {
    And, Or, Not, Implies, Iff,
    Forall,  // !(x).(body)
    Exists,  // #(x).(body)
    Eq, Neq, Mem, NotMem, Subset, NotSubset,
    Lt, Le, Gt, Ge,
    ArrowMem,  // f : A arrow B
  };

  Op op;
  SourceSpan span;

  std::vector<PredPtr> preds;  // connective children
  std::vector<ExprPtr> exprs;  // relational operands; ArrowMem: f, A, B
  std::string var;             // quantifier variable
  PredPtr body;                // quantifier body
  Arrow arrow = Arrow::PartialFn;
};

ExprPtr make_expr(Expr::Op op, SourceSpan span);
PredPtr make_pred(Pred::Op op, SourceSpan span);

/// Structural equality, spans ignored (typing annotations ignored too).
bool expr_equal(const Expr& a, const Expr& b);
bool pred_equal(const Pred& a, const Pred& b);

/// Message template: literal text interleaved with ${var} references.
struct MessageTemplate {
  struct Part {
    bool is_var = false;
    std::string text;  // literal text or variable name
  };
  std::vector<Part> parts;
  std::string source;  // raw template text as written

  friend bool operator==(const MessageTemplate&, const MessageTemplate&);
};

enum class Severity : std::uint8_t { Error, Warning };

/// One WHERE binding: `var : domain`.
struct Binding {
  std::string var;
  ExprPtr domain;
  SourceSpan span;
};

/// Named validation rule: WHERE bindings and filters select the data, VERIFY
/// states the condition, MESSAGE renders one line per counterexample.
struct Rule {
  std::string name;
  std::string doc;
  std::string error_class;
  Severity severity = Severity::Error;
  std::vector<Binding> bindings;
  std::vector<PredPtr> filters;
  PredPtr verify;
  MessageTemplate message;
  SourceSpan span;
};

}  // namespace bdv

#endif
