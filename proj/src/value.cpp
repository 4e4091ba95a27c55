#include "bdv/value.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace bdv {

// ---------------------------------------------------------------------------
// Type

Type Type::given(std::string carrier) {
  Type t(Kind::Given);
  t.name_ = std::move(carrier);
  return t;
}

Type Type::prod(Type left, Type right) {
  Type t(Kind::Prod);
  t.a_ = std::make_shared<const Type>(std::move(left));
  t.b_ = std::make_shared<const Type>(std::move(right));
  return t;
}

Type Type::power(Type elem) {
  Type t(Kind::Power);
  t.a_ = std::make_shared<const Type>(std::move(elem));
  return t;
}

Type Type::var(std::uint32_t id) {
  Type t(Kind::Var);
  t.var_id_ = id;
  return t;
}

std::string Type::text() const {
  switch (kind_) {
    case Kind::Integer: return "INTEGER";
    case Kind::Bool: return "BOOL";
    case Kind::Given: return name_;
    case Kind::Any: return "?";
    case Kind::Var: return "?" + std::to_string(var_id_);
    case Kind::Power: return "POW(" + a_->text() + ")";
    case Kind::Prod: {
      auto side = [](const Type& t) {
        return t.kind() == Kind::Prod ? "(" + t.text() + ")" : t.text();
      };
      return side(*a_) + "*" + side(*b_);
    }
  }
  return "?";
}

bool operator==(const Type& a, const Type& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Type::Kind::Integer:
    case Type::Kind::Bool:
    case Type::Kind::Any:
      return true;
    case Type::Kind::Var:
      return a.var_id_ == b.var_id_;
    case Type::Kind::Given:
      return a.name_ == b.name_;
    case Type::Kind::Power:
      return *a.a_ == *b.a_;
    case Type::Kind::Prod:
      return *a.a_ == *b.a_ && *a.b_ == *b.b_;
  }
  return false;
}

bool Type::conforms(const Type& concrete, const Type& declared) {
  if (concrete.kind() == Kind::Any) return true;
  if (concrete.kind() != declared.kind()) return false;
  switch (concrete.kind()) {
    case Kind::Integer:
    case Kind::Bool:
      return true;
    case Kind::Given:
      return concrete.given_name() == declared.given_name();
    case Kind::Power:
      return conforms(concrete.elem(), declared.elem());
    case Kind::Prod:
      return conforms(concrete.left(), declared.left()) &&
             conforms(concrete.right(), declared.right());
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Value

Value Value::atom(std::string carrier, std::string element) {
  return Value(Rep(std::make_shared<const AtomRep>(
      AtomRep{std::move(carrier), std::move(element)})));
}

Value Value::atom(std::shared_ptr<const AtomRep> rep) {
  return Value(Rep(std::move(rep)));
}

Value Value::pair(Value left, Value right) {
  return Value(Rep(std::make_shared<const PairRep>(
      PairRep{std::move(left), std::move(right)})));
}

Value Value::set(SetRep elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Value(Rep(std::make_shared<const SetRep>(std::move(elems))));
}

Value Value::set_sorted(SetRep elems) {
#ifndef NDEBUG
  for (std::size_t i = 1; i < elems.size(); ++i) {
    assert(compare(elems[i - 1], elems[i]) < 0 && "set_sorted: not canonical");
  }
#endif
  return Value(Rep(std::make_shared<const SetRep>(std::move(elems))));
}

Value::Kind Value::kind() const {
  switch (rep_.index()) {
    case 0: return Kind::Int;
    case 1: return Kind::Bool;
    case 2: return Kind::Atom;
    case 3: return Kind::Pair;
    default: return Kind::Set;
  }
}

const Value& Value::pair_left() const { return std::get<PairPtr>(rep_)->left; }
const Value& Value::pair_right() const { return std::get<PairPtr>(rep_)->right; }

int compare(const Value& a, const Value& b) {
  auto rank = [](Value::Kind k) { return static_cast<int>(k); };
  if (a.kind() != b.kind()) return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Value::Kind::Int: {
      std::int64_t x = a.as_int(), y = b.as_int();
      return x < y ? -1 : x > y ? 1 : 0;
    }
    case Value::Kind::Bool:
      return static_cast<int>(a.as_bool()) - static_cast<int>(b.as_bool());
    case Value::Kind::Atom: {
      const auto& x = a.as_atom();
      const auto& y = b.as_atom();
      if (&x == &y) return 0;  // interned atoms share reps
      if (int c = x.carrier.compare(y.carrier)) return c < 0 ? -1 : 1;
      if (int c = x.element.compare(y.element)) return c < 0 ? -1 : 1;
      return 0;
    }
    case Value::Kind::Pair: {
      if (int c = compare(a.pair_left(), b.pair_left())) return c;
      return compare(a.pair_right(), b.pair_right());
    }
    case Value::Kind::Set: {
      const auto& xs = a.elems();
      const auto& ys = b.elems();
      if (&xs == &ys) return 0;
      std::size_t n = std::min(xs.size(), ys.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (int c = compare(xs[i], ys[i])) return c;
      }
      if (xs.size() == ys.size()) return 0;
      return xs.size() < ys.size() ? -1 : 1;
    }
  }
  return 0;
}

namespace {

void hash_combine(std::size_t& seed, std::size_t h) {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

void append_text(const Value& v, std::string& out, bool parenthesize_pair) {
  switch (v.kind()) {
    case Value::Kind::Int:
      out += std::to_string(v.as_int());
      break;
    case Value::Kind::Bool:
      out += v.as_bool() ? "TRUE" : "FALSE";
      break;
    case Value::Kind::Atom:
      out += v.as_atom().element;
      break;
    case Value::Kind::Pair:
      // Left-associative chains print without parentheses; a pair on the
      // right keeps its parentheses so the text re-parses to the same tree.
      if (parenthesize_pair) out += '(';
      append_text(v.pair_left(), out, false);
      out += "|->";
      append_text(v.pair_right(), out, true);
      if (parenthesize_pair) out += ')';
      break;
    case Value::Kind::Set: {
      out += '{';
      bool first = true;
      for (const Value& e : v.elems()) {
        if (!first) out += ',';
        first = false;
        append_text(e, out, false);
      }
      out += '}';
      break;
    }
  }
}

}  // namespace

std::string Value::text() const {
  std::string out;
  append_text(*this, out, false);
  return out;
}

std::size_t Value::hash() const {
  std::size_t seed = static_cast<std::size_t>(kind()) * 0x9e3779b9u;
  switch (kind()) {
    case Kind::Int:
      hash_combine(seed, std::hash<std::int64_t>{}(as_int()));
      break;
    case Kind::Bool:
      hash_combine(seed, as_bool() ? 2u : 1u);
      break;
    case Kind::Atom:
      hash_combine(seed, std::hash<std::string>{}(as_atom().carrier));
      hash_combine(seed, std::hash<std::string>{}(as_atom().element));
      break;
    case Kind::Pair:
      hash_combine(seed, pair_left().hash());
      hash_combine(seed, pair_right().hash());
      break;
    case Kind::Set:
      for (const Value& e : elems()) hash_combine(seed, e.hash());
      break;
  }
  return seed;
}

Value normalize(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Int:
    case Value::Kind::Bool:
    case Value::Kind::Atom:
      return v;
    case Value::Kind::Pair:
      return Value::pair(normalize(v.pair_left()), normalize(v.pair_right()));
    case Value::Kind::Set: {
      Value::SetRep out;
      out.reserve(v.set_size());
      for (const Value& e : v.elems()) out.push_back(normalize(e));
      return Value::set(std::move(out));
    }
  }
  return v;
}

bool value_eq(const Value& a, const Value& b) { return compare(a, b) == 0; }

Type type_of(const Value& v, const CarrierDecls& decls) {
  switch (v.kind()) {
    case Value::Kind::Int:
      return Type::integer();
    case Value::Kind::Bool:
      return Type::boolean();
    case Value::Kind::Atom: {
      const auto& a = v.as_atom();
      if (!decls.count(a.carrier)) {
        throw std::logic_error("type_of: atom of undeclared carrier " +
                               a.carrier);
      }
      return Type::given(a.carrier);
    }
    case Value::Kind::Pair:
      return Type::prod(type_of(v.pair_left(), decls),
                        type_of(v.pair_right(), decls));
    case Value::Kind::Set: {
      if (v.elems().empty()) return Type::power(Type::any());
      Type elem = type_of(v.elems().front(), decls);
      for (std::size_t i = 1; i < v.set_size(); ++i) {
        if (type_of(v.elems()[i], decls) != elem) {
          throw std::logic_error("type_of: heterogeneous set");
        }
      }
      return Type::power(elem);
    }
  }
  throw std::logic_error("type_of: unreachable");
}

}  // namespace bdv
