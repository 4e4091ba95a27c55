#ifndef BDV_VALUE_HPP
#define BDV_VALUE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bdv {

class Type;

/// Simple type of the B mathematical sublanguage.
///
/// `Any` is the polymorphic marker produced for the element type of an empty
/// set by `type_of`; `Var` is reserved for the typechecker's unification
/// variables and never appears in a fully resolved type.
class Type {
 public:
  enum class Kind : std::uint8_t { Integer, Bool, Given, Prod, Power, Any, Var };

  Type() : kind_(Kind::Any) {}

  static Type integer() { return Type(Kind::Integer); }
  static Type boolean() { return Type(Kind::Bool); }
  static Type given(std::string carrier);
  static Type prod(Type left, Type right);
  static Type power(Type elem);
  static Type any() { return Type(Kind::Any); }
  static Type var(std::uint32_t id);

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }
  const std::string& given_name() const { return name_; }
  std::uint32_t var_id() const { return var_id_; }
  const Type& left() const { return *a_; }    // Prod
  const Type& right() const { return *b_; }   // Prod
  const Type& elem() const { return *a_; }    // Power

  bool is_relation() const {
    return kind_ == Kind::Power && a_->kind() == Kind::Prod;
  }

  /// Rendered in the concrete type syntax, e.g. "POW(t_signal*INTEGER)".
  std::string text() const;

  /// Structural equality; Any matches only Any, Var only the same Var.
  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

  /// True when `concrete` satisfies `declared`, treating Any in `concrete`
  /// as a wildcard (the empty-set marker conforms to every element type).
  static bool conforms(const Type& concrete, const Type& declared);

 private:
  explicit Type(Kind k) : kind_(k) {}

  Kind kind_;
  std::uint32_t var_id_ = 0;
  std::string name_;
  std::shared_ptr<const Type> a_, b_;
};

/// Closed recursive datum: integer, boolean, atom of a carrier set, pair
/// (maplet) or finite set. Values are immutable and canonical from
/// construction: sets are sorted in canonical order and duplicate-free.
class Value {
 public:
  enum class Kind : std::uint8_t { Int, Bool, Atom, Pair, Set };

  struct AtomRep {
    std::string carrier;
    std::string element;
  };
  struct PairRep;
  using SetRep = std::vector<Value>;

  Value() : rep_(std::int64_t{0}) {}

  static Value integer(std::int64_t v) { return Value(Rep(v)); }
  static Value boolean(bool v) { return Value(Rep(v)); }
  static Value atom(std::string carrier, std::string element);
  static Value atom(std::shared_ptr<const AtomRep> rep);
  static Value pair(Value left, Value right);
  /// Sorts and deduplicates; the canonical constructor for sets.
  static Value set(SetRep elems);
  /// Trusted variant for elements already in canonical order without
  /// duplicates (checked in debug builds).
  static Value set_sorted(SetRep elems);
  static Value empty_set() { return set_sorted({}); }

  Kind kind() const;
  bool is_int() const { return kind() == Kind::Int; }
  bool is_bool() const { return kind() == Kind::Bool; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_pair() const { return kind() == Kind::Pair; }
  bool is_set() const { return kind() == Kind::Set; }

  std::int64_t as_int() const { return std::get<std::int64_t>(rep_); }
  bool as_bool() const { return std::get<bool>(rep_); }
  const AtomRep& as_atom() const { return *std::get<AtomPtr>(rep_); }
  std::shared_ptr<const AtomRep> atom_rep() const {
    return std::get<AtomPtr>(rep_);
  }
  const Value& pair_left() const;
  const Value& pair_right() const;
  const SetRep& elems() const { return *std::get<SetPtr>(rep_); }
  std::size_t set_size() const { return elems().size(); }

  /// Canonical text: 12, TRUE, s1, a|->b, {1,2}. No whitespace.
  std::string text() const;

  std::size_t hash() const;

  friend bool operator==(const Value& a, const Value& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const Value& a, const Value& b) {
    return compare(a, b) != 0;
  }
  friend bool operator<(const Value& a, const Value& b) {
    return compare(a, b) < 0;
  }

  /// Canonical total order: Int by value, FALSE < TRUE, Atom by
  /// (carrier, element), Pair by (left, right), Set by element sequence
  /// with a shorter prefix first. Kinds are ranked Int < Bool < Atom <
  /// Pair < Set so the order is total even across kinds, although
  /// typechecked code never compares across kinds.
  friend int compare(const Value& a, const Value& b);

 private:
  using AtomPtr = std::shared_ptr<const AtomRep>;
  using PairPtr = std::shared_ptr<const PairRep>;
  using SetPtr = std::shared_ptr<const SetRep>;
  using Rep = std::variant<std::int64_t, bool, AtomPtr, PairPtr, SetPtr>;

  explicit Value(Rep rep) : rep_(std::move(rep)) {}

  Rep rep_;
};

struct Value::PairRep {
  Value left;
  Value right;
};

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

/// Carrier-set declarations visible to `type_of`: name -> explicitly
/// enumerated elements (empty optional for carriers collected from data).
using CarrierDecls = std::map<std::string, std::optional<std::vector<std::string>>>;

/// Deep renormalization. Values are canonical by construction, so this is
/// the identity on anything built through the factories; it exists as the
/// idempotence anchor for property tests.
Value normalize(const Value& v);

/// Structural equality on canonical forms.
bool value_eq(const Value& a, const Value& b);

/// Unique type of a normalized value; the empty set reports POW(Any).
/// Heterogeneous sets and atoms of undeclared carriers cannot arise from
/// typechecked ASTs and throw std::logic_error.
Type type_of(const Value& v, const CarrierDecls& decls);

}  // namespace bdv

#endif
