#ifndef HOL_TERM_HPP
#define HOL_TERM_HPP

#include <memory>
#include <optional>
#include <string>

#include "hol/type.hpp"

namespace hol {

enum class ConstKind : unsigned char {
  Top, Bot, Not, Imp, And, Or, Forall, Exists, Eq, User
};

// Logical and user constants. Forall/Exists/Eq are type-indexed families.
class Constant {
 public:
  static Constant top();
  static Constant bot();
  static Constant negation();
  static Constant implication();
  static Constant conjunction();
  static Constant disjunction();
  static Constant forall(Type index);
  static Constant exists(Type index);
  static Constant equality(Type index);
  static Constant user(std::string name, Type type);

  ConstKind kind() const { return kind_; }
  bool is(ConstKind k) const { return kind_ == k; }
  // Pre: Forall/Exists/Eq.
  const Type& index() const { return *index_; }
  // Pre: User.
  const std::string& name() const { return name_; }

  Type type_of() const;

  bool operator==(const Constant& other) const;
  bool operator!=(const Constant& other) const { return !(*this == other); }

 private:
  Constant(ConstKind kind, std::optional<Type> index, std::string name)
      : kind_(kind), index_(std::move(index)), name_(std::move(name)) {}
  ConstKind kind_;
  std::optional<Type> index_;  // Forall/Exists/Eq index, or User declared type
  std::string name_;           // User only
};

// Immutable, intrinsically typed lambda terms. The public constructors
// reject ill-typed applications, so every Term carries its simple type.
// Copies share structure.
class Term {
 public:
  enum class Kind : unsigned char { Var, Const, Lam, App };

  static Term var(std::string name, Type type);
  static Term constant(Constant c);
  static Term lam(std::string binder, Type binder_type, Term body);
  // Throws TypeError unless fun : a -> b and arg : a.
  static Term app(Term fun, Term arg);

  Kind kind() const;
  const Type& type() const;

  bool is_var() const { return kind() == Kind::Var; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_lam() const { return kind() == Kind::Lam; }
  bool is_app() const { return kind() == Kind::App; }

  // Pre: Var.
  const std::string& var_name() const;
  // Pre: Const.
  const Constant& as_const() const;
  // Pre: Lam.
  const std::string& binder() const;
  const Type& binder_type() const;
  const Term& body() const;
  // Pre: App.
  const Term& fun() const;
  const Term& arg() const;

  bool is_const(ConstKind k) const {
    return is_const() && as_const().is(k);
  }

  // Physical identity of the underlying node; implies alpha-equality.
  bool same_node(const Term& other) const { return rep_ == other.rep_; }

 private:
  struct Rep;
  explicit Term(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

struct Term::Rep {
  Kind kind;
  Type type;
  std::string name;               // Var name or Lam binder
  std::optional<Constant> cnst;   // Const
  std::optional<Term> sub1;       // Lam body, App fun
  std::optional<Term> sub2;       // App arg
};

// A formula is a term of type o; the alias documents intent where an
// interface demands one.
using Formula = Term;

// Formula constructors. All take/yield terms of type o and throw TypeError
// on anything else.
Term truth();
Term falsity();
Term neg(Term a);
Term imp(Term a, Term b);
Term conj(Term a, Term b);
Term disj(Term a, Term b);
// A <=> B is not a primitive connective: expands to (A => B) /\ (B => A).
Term iff(Term a, Term b);
// forall x:t. body and exists x:t. body, i.e. the quantifier constant
// applied to a lambda.
Term forall(std::string var, Type var_type, Term body);
Term exists(std::string var, Type var_type, Term body);
// Quantifier constant applied to an arbitrary predicate term p : t -> o.
Term forall_pred(Term p);
Term exists_pred(Term p);
// a = b at the operands' common type.
Term eq(Term a, Term b);

bool is_formula(const Term& t);

// Shape probes used by the checker and the printers. They match one
// syntactic layer only (no beta steps).
struct BinSplit { Term lhs, rhs; };
std::optional<BinSplit> match_imp(const Term& t);
std::optional<BinSplit> match_and(const Term& t);
std::optional<BinSplit> match_or(const Term& t);
std::optional<BinSplit> match_eq(const Term& t);  // either operand type
std::optional<Term> match_not(const Term& t);
// Quantifier constant applied to anything: returns the predicate argument.
std::optional<Term> match_forall(const Term& t);
std::optional<Term> match_exists(const Term& t);

}  // namespace hol

#endif
