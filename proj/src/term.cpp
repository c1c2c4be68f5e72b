#include "hol/term.hpp"

#include "hol/errors.hpp"

namespace hol {

Constant Constant::top() { return {ConstKind::Top, std::nullopt, {}}; }
Constant Constant::bot() { return {ConstKind::Bot, std::nullopt, {}}; }
Constant Constant::negation() { return {ConstKind::Not, std::nullopt, {}}; }
Constant Constant::implication() { return {ConstKind::Imp, std::nullopt, {}}; }
Constant Constant::conjunction() { return {ConstKind::And, std::nullopt, {}}; }
Constant Constant::disjunction() { return {ConstKind::Or, std::nullopt, {}}; }
Constant Constant::forall(Type index) {
  return {ConstKind::Forall, std::move(index), {}};
}
Constant Constant::exists(Type index) {
  return {ConstKind::Exists, std::move(index), {}};
}
Constant Constant::equality(Type index) {
  return {ConstKind::Eq, std::move(index), {}};
}
Constant Constant::user(std::string name, Type type) {
  return {ConstKind::User, std::move(type), std::move(name)};
}

Type Constant::type_of() const {
  const Type& o = Type::omicron();
  switch (kind_) {
    case ConstKind::Top:
    case ConstKind::Bot:
      return o;
    case ConstKind::Not:
      return Type::arrow(o, o);
    case ConstKind::Imp:
    case ConstKind::And:
    case ConstKind::Or:
      return Type::arrow(o, Type::arrow(o, o));
    case ConstKind::Forall:
    case ConstKind::Exists:
      return Type::arrow(Type::arrow(*index_, o), o);
    case ConstKind::Eq:
      return Type::arrow(*index_, Type::arrow(*index_, o));
    case ConstKind::User:
      return *index_;
  }
  return o;
}

bool Constant::operator==(const Constant& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case ConstKind::Forall:
    case ConstKind::Exists:
    case ConstKind::Eq:
      return *index_ == *other.index_;
    case ConstKind::User:
      return name_ == other.name_ && *index_ == *other.index_;
    default:
      return true;
  }
}

Term Term::var(std::string name, Type type) {
  return Term{std::make_shared<const Rep>(Rep{
      Kind::Var, std::move(type), std::move(name), std::nullopt,
      std::nullopt, std::nullopt})};
}

Term Term::constant(Constant c) {
  Type t = c.type_of();
  return Term{std::make_shared<const Rep>(Rep{
      Kind::Const, std::move(t), {}, std::move(c), std::nullopt,
      std::nullopt})};
}

Term Term::lam(std::string binder, Type binder_type, Term body) {
  Type t = Type::arrow(binder_type, body.type());
  return Term{std::make_shared<const Rep>(Rep{
      Kind::Lam, std::move(t), std::move(binder), std::nullopt,
      std::move(body), std::nullopt})};
}

Term Term::app(Term fun, Term arg) {
  const Type& ft = fun.type();
  if (!ft.is_arrow())
    throw TypeError("application of non-function of type " + ft.to_string());
  if (ft.domain() != arg.type())
    throw TypeError("argument type " + arg.type().to_string() +
                    " does not match domain " + ft.domain().to_string());
  Type t = ft.codomain();
  return Term{std::make_shared<const Rep>(Rep{
      Kind::App, std::move(t), {}, std::nullopt, std::move(fun),
      std::move(arg)})};
}

Term::Kind Term::kind() const { return rep_->kind; }
const Type& Term::type() const { return rep_->type; }
const std::string& Term::var_name() const { return rep_->name; }
const Constant& Term::as_const() const { return *rep_->cnst; }
const std::string& Term::binder() const { return rep_->name; }
const Type& Term::binder_type() const { return rep_->type.domain(); }
const Term& Term::body() const { return *rep_->sub1; }
const Term& Term::fun() const { return *rep_->sub1; }
const Term& Term::arg() const { return *rep_->sub2; }

Term truth() { return Term::constant(Constant::top()); }
Term falsity() { return Term::constant(Constant::bot()); }

static void require_formula(const Term& t, const char* what) {
  if (!t.type().is_omicron())
    throw TypeError(std::string(what) + " must have type o, got " +
                    t.type().to_string());
}

Term neg(Term a) {
  require_formula(a, "negand");
  return Term::app(Term::constant(Constant::negation()), std::move(a));
}

static Term binop(Constant c, Term a, Term b) {
  return Term::app(Term::app(Term::constant(std::move(c)), std::move(a)),
                   std::move(b));
}

Term imp(Term a, Term b) {
  require_formula(a, "antecedent");
  require_formula(b, "consequent");
  return binop(Constant::implication(), std::move(a), std::move(b));
}

Term conj(Term a, Term b) {
  require_formula(a, "conjunct");
  require_formula(b, "conjunct");
  return binop(Constant::conjunction(), std::move(a), std::move(b));
}

Term disj(Term a, Term b) {
  require_formula(a, "disjunct");
  require_formula(b, "disjunct");
  return binop(Constant::disjunction(), std::move(a), std::move(b));
}

Term iff(Term a, Term b) {
  return conj(imp(a, b), imp(b, a));
}

Term forall(std::string var, Type var_type, Term body) {
  require_formula(body, "quantifier body");
  Term p = Term::lam(std::move(var), var_type, std::move(body));
  return Term::app(Term::constant(Constant::forall(std::move(var_type))),
                   std::move(p));
}

Term exists(std::string var, Type var_type, Term body) {
  require_formula(body, "quantifier body");
  Term p = Term::lam(std::move(var), var_type, std::move(body));
  return Term::app(Term::constant(Constant::exists(std::move(var_type))),
                   std::move(p));
}

static Type pred_domain(const Term& p) {
  const Type& t = p.type();
  if (!t.is_arrow() || !t.codomain().is_omicron())
    throw TypeError("predicate must have type t -> o, got " + t.to_string());
  return t.domain();
}

Term forall_pred(Term p) {
  Type d = pred_domain(p);
  return Term::app(Term::constant(Constant::forall(std::move(d))),
                   std::move(p));
}

Term exists_pred(Term p) {
  Type d = pred_domain(p);
  return Term::app(Term::constant(Constant::exists(std::move(d))),
                   std::move(p));
}

Term eq(Term a, Term b) {
  if (a.type() != b.type())
    throw TypeError("equality operands differ: " + a.type().to_string() +
                    " vs " + b.type().to_string());
  Type at = a.type();
  return binop(Constant::equality(std::move(at)), std::move(a), std::move(b));
}

bool is_formula(const Term& t) { return t.type().is_omicron(); }

static std::optional<BinSplit> match_bin(const Term& t, ConstKind k) {
  if (!t.is_app() || !t.fun().is_app()) return std::nullopt;
  const Term& head = t.fun().fun();
  if (!head.is_const(k)) return std::nullopt;
  return BinSplit{t.fun().arg(), t.arg()};
}

std::optional<BinSplit> match_imp(const Term& t) {
  return match_bin(t, ConstKind::Imp);
}
std::optional<BinSplit> match_and(const Term& t) {
  return match_bin(t, ConstKind::And);
}
std::optional<BinSplit> match_or(const Term& t) {
  return match_bin(t, ConstKind::Or);
}
std::optional<BinSplit> match_eq(const Term& t) {
  return match_bin(t, ConstKind::Eq);
}

std::optional<Term> match_not(const Term& t) {
  if (t.is_app() && t.fun().is_const(ConstKind::Not)) return t.arg();
  return std::nullopt;
}

std::optional<Term> match_forall(const Term& t) {
  if (t.is_app() && t.fun().is_const(ConstKind::Forall)) return t.arg();
  return std::nullopt;
}

std::optional<Term> match_exists(const Term& t) {
  if (t.is_app() && t.fun().is_const(ConstKind::Exists)) return t.arg();
  return std::nullopt;
}

}  // namespace hol
