#include "hol/prooffile.hpp"

#include <map>

#include "hol/errors.hpp"
#include "hol/kernel.hpp"
#include "hol/print.hpp"
#include "hol/sexpr.hpp"

namespace hol {

namespace {

void collect_constants(const Term& t, Signature& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return;
    case Term::Kind::Const:
      if (t.as_const().is(ConstKind::User)) {
        auto [it, inserted] =
            out.emplace(t.as_const().name(), t.as_const().index());
        if (!inserted && it->second != t.as_const().index())
          throw FileFormatError("constant " + t.as_const().name() +
                                " used at two types");
      }
      return;
    case Term::Kind::Lam:
      collect_constants(t.body(), out);
      return;
    case Term::Kind::App:
      collect_constants(t.fun(), out);
      collect_constants(t.arg(), out);
      return;
  }
}

using VarScope = std::map<std::string, Type>;

void note_free_vars(const Term& t, const VarScope& scope, VarScope& out) {
  for (const auto& [name, type] : free_vars(t)) {
    if (auto it = scope.find(name); it != scope.end()) {
      if (it->second != type)
        throw FileFormatError("variable " + name +
                              " shadowed at a different type");
      continue;
    }
    auto [it, inserted] = out.emplace(name, type);
    if (!inserted && it->second != type)
      throw FileFormatError("variable " + name + " used at two types");
  }
}

// Variables that some stored term mentions without any eigenvariable in
// scope introducing them; they must be declared in the header.
void collect_undeclared(const Derivation& d, VarScope scope, VarScope& out) {
  note_free_vars(d.conclusion().goal, scope, out);
  if (d.inst().pred) note_free_vars(*d.inst().pred, scope, out);
  if (d.inst().arg) note_free_vars(*d.inst().arg, scope, out);
  if (d.inst().eigen)
    scope.insert_or_assign(d.inst().eigen->name, d.inst().eigen->type);
  for (const DerivPtr& p : d.premises()) collect_undeclared(*p, scope, out);
}

void collect_signature(const Derivation& d, Signature& out) {
  for (const Term& f : d.conclusion().context) collect_constants(f, out);
  collect_constants(d.conclusion().goal, out);
  if (d.inst().pred) collect_constants(*d.inst().pred, out);
  if (d.inst().arg) collect_constants(*d.inst().arg, out);
  for (const DerivPtr& p : d.premises()) collect_signature(*p, out);
}

SExpr labeled(const char* label, std::vector<SExpr> rest) {
  std::vector<SExpr> items{SExpr::atom(label)};
  for (SExpr& e : rest) items.push_back(std::move(e));
  return SExpr::list(std::move(items));
}

SExpr node_to_sexpr(const Derivation& d) {
  std::vector<SExpr> items;
  items.push_back(SExpr::atom(rule_name(d.rule())));
  items.push_back(
      labeled("goal", {SExpr::atom(print_term(d.conclusion().goal))}));
  const Instantiation& inst = d.inst();
  switch (d.rule()) {
    case RuleId::Ax:
      items.push_back(
          labeled("index", {SExpr::atom(std::to_string(*inst.index))}));
      break;
    case RuleId::AllI:
    case RuleId::ExE:
    case RuleId::FunExt:
      items.push_back(labeled(
          "eigen", {SExpr::atom(inst.eigen->name),
                    SExpr::atom(inst.eigen->type.to_string())}));
      break;
    case RuleId::AllE:
      items.push_back(labeled("pred", {SExpr::atom(print_term(*inst.pred))}));
      items.push_back(labeled("arg", {SExpr::atom(print_term(*inst.arg))}));
      break;
    case RuleId::ExI:
      items.push_back(labeled("pred", {SExpr::atom(print_term(*inst.pred))}));
      items.push_back(
          labeled("witness", {SExpr::atom(print_term(*inst.arg))}));
      break;
    case RuleId::EqE:
      items.push_back(
          labeled("motive", {SExpr::atom(print_term(*inst.pred))}));
      break;
    default:
      break;
  }
  for (const DerivPtr& p : d.premises()) items.push_back(node_to_sexpr(*p));
  return SExpr::list(std::move(items));
}

const SExpr* find_section(const SExpr& doc, const std::string& name) {
  for (std::size_t i = 1; i < doc.items.size(); ++i) {
    const SExpr& item = doc.items[i];
    if (!item.is_atom && !item.items.empty() && item.items[0].is_atom &&
        item.items[0].text == name)
      return &item;
  }
  return nullptr;
}

struct Loader {
  Signature sig;
  ParseOptions opts;
  Flavor flavor = Flavor::Classical;
  ExtFlags flags;

  Term term(const std::string& text, const TypeEnv& extra) const {
    ParseOptions local = opts;
    for (const auto& [name, type] : extra)
      local.free_variables.insert_or_assign(name, type);
    return parse_term(text, sig, local);
  }

  DerivPtr node(const SExpr& e, std::vector<Term> ctx, TypeEnv scope) const {
    if (e.is_atom || e.items.empty() || !e.items[0].is_atom)
      throw FileFormatError("malformed derivation node");
    auto rule = rule_from_name(e.items[0].text);
    if (!rule) throw FileFormatError("unknown rule " + e.items[0].text);

    std::optional<std::string> goal_text;
    Instantiation inst;
    std::optional<Type> eigen_type;
    std::vector<const SExpr*> premise_exprs;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const SExpr& item = e.items[i];
      if (item.is_atom || item.items.empty() || !item.items[0].is_atom)
        throw FileFormatError("malformed node item");
      const std::string& head = item.items[0].text;
      if (rule_from_name(head)) {
        premise_exprs.push_back(&item);
        continue;
      }
      auto arg_text = [&](std::size_t k) -> const std::string& {
        if (item.items.size() <= k || !item.items[k].is_atom)
          throw FileFormatError("malformed " + head + " payload");
        return item.items[k].text;
      };
      if (head == "goal") {
        goal_text = arg_text(1);
      } else if (head == "index") {
        inst.index = std::stoul(arg_text(1));
      } else if (head == "eigen") {
        inst.eigen = Eigen{arg_text(1), parse_type(arg_text(2))};
        eigen_type = inst.eigen->type;
      } else if (head == "pred" || head == "motive") {
        inst.pred = term(arg_text(1), scope);
      } else if (head == "arg" || head == "witness") {
        inst.arg = term(arg_text(1), scope);
      } else {
        throw FileFormatError("unknown node item " + head);
      }
    }
    if (!goal_text) throw FileFormatError("node without goal");
    Term goal = term(*goal_text, scope);

    TypeEnv inner = scope;
    if (inst.eigen) inner.insert_or_assign(inst.eigen->name, *eigen_type);

    auto extended = [&](const Term& hyp) {
      std::vector<Term> out = ctx;
      out.push_back(hyp);
      return out;
    };

    std::vector<DerivPtr> premises;
    switch (*rule) {
      case RuleId::ImpI: {
        auto split = match_imp(goal);
        if (!split) throw FileFormatError("Imp-I goal is not an implication");
        require_premises(premise_exprs, 1);
        premises.push_back(node(*premise_exprs[0], extended(split->lhs),
                                inner));
        break;
      }
      case RuleId::NotI: {
        auto body = match_not(goal);
        if (!body) throw FileFormatError("Not-I goal is not a negation");
        require_premises(premise_exprs, 1);
        premises.push_back(node(*premise_exprs[0], extended(*body), inner));
        break;
      }
      case RuleId::OrE: {
        require_premises(premise_exprs, 3);
        DerivPtr major = node(*premise_exprs[0], ctx, inner);
        auto split = match_or(major->conclusion().goal);
        if (!split)
          throw FileFormatError("Or-E major premise is not a disjunction");
        premises.push_back(major);
        premises.push_back(node(*premise_exprs[1], extended(split->lhs),
                                inner));
        premises.push_back(node(*premise_exprs[2], extended(split->rhs),
                                inner));
        break;
      }
      case RuleId::ExE: {
        require_premises(premise_exprs, 2);
        if (!inst.eigen) throw FileFormatError("Ex-E without eigenvariable");
        DerivPtr major = node(*premise_exprs[0], ctx, inner);
        auto p = match_exists(major->conclusion().goal);
        if (!p)
          throw FileFormatError("Ex-E major premise is not an existential");
        Term hyp = Term::app(
            *p, Term::var(inst.eigen->name, inst.eigen->type));
        premises.push_back(major);
        premises.push_back(node(*premise_exprs[1], extended(hyp), inner));
        break;
      }
      default:
        for (const SExpr* pe : premise_exprs)
          premises.push_back(node(*pe, ctx, inner));
        break;
    }
    return Derivation::make(*rule, std::move(premises), std::move(inst),
                            Judgment(flavor, flags, std::move(ctx),
                                     std::move(goal)));
  }

  static void require_premises(const std::vector<const SExpr*>& ps,
                               std::size_t n) {
    if (ps.size() != n)
      throw FileFormatError("wrong number of premises in the file");
  }
};

}  // namespace

std::string store_proof(const DerivPtr& d) {
  const Judgment& root = d->conclusion();
  Signature sig;
  collect_signature(*d, sig);
  VarScope free;
  for (const Term& f : root.context) note_free_vars(f, {}, free);
  collect_undeclared(*d, {}, free);

  std::vector<SExpr> doc{SExpr::atom("proof")};
  doc.push_back(labeled("version", {SExpr::atom("1")}));
  doc.push_back(labeled("flavor", {SExpr::atom(to_string(root.flavor))}));
  {
    std::vector<SExpr> fl{SExpr::atom("flags")};
    if (!root.flags.star().empty())
      fl.push_back(SExpr::atom(root.flags.star()));
    doc.push_back(SExpr::list(std::move(fl)));
  }
  {
    std::vector<SExpr> sg{SExpr::atom("signature")};
    for (const auto& [name, type] : sig)
      sg.push_back(labeled("const", {SExpr::atom(name),
                                     SExpr::atom(type.to_string())}));
    doc.push_back(SExpr::list(std::move(sg)));
  }
  if (!free.empty()) {
    std::vector<SExpr> fv{SExpr::atom("free")};
    for (const auto& [name, type] : free)
      fv.push_back(labeled("var", {SExpr::atom(name),
                                   SExpr::atom(type.to_string())}));
    doc.push_back(SExpr::list(std::move(fv)));
  }
  {
    std::vector<SExpr> cx{SExpr::atom("context")};
    for (const Term& f : root.context)
      cx.push_back(SExpr::atom(print_term(f)));
    doc.push_back(SExpr::list(std::move(cx)));
  }
  doc.push_back(labeled("body", {node_to_sexpr(*d)}));
  return write_sexpr(SExpr::list(std::move(doc)));
}

DerivPtr load_proof(const std::string& text) {
  SExpr doc = parse_sexpr(text);
  if (doc.is_atom || doc.items.empty() || !doc.items[0].is_atom ||
      doc.items[0].text != "proof")
    throw FileFormatError("not a proof document");
  const SExpr* version = find_section(doc, "version");
  if (!version || version->items.size() != 2 ||
      version->items[1].text != "1")
    throw FileFormatError("unsupported version");

  Loader loader;
  loader.opts.allow_reserved = true;

  const SExpr* flavor = find_section(doc, "flavor");
  if (!flavor || flavor->items.size() != 2)
    throw FileFormatError("missing flavor");
  if (flavor->items[1].text == "classical")
    loader.flavor = Flavor::Classical;
  else if (flavor->items[1].text == "intuitionistic")
    loader.flavor = Flavor::Intuitionistic;
  else
    throw FileFormatError("unknown flavor " + flavor->items[1].text);

  const SExpr* flags = find_section(doc, "flags");
  if (!flags || flags->items.size() > 2)
    throw FileFormatError("missing flags");
  loader.flags = flags->items.size() == 2
                     ? ExtFlags::from_star(flags->items[1].text)
                     : ExtFlags::none();

  if (const SExpr* sg = find_section(doc, "signature")) {
    for (std::size_t i = 1; i < sg->items.size(); ++i) {
      const SExpr& c = sg->items[i];
      if (c.is_atom || c.items.size() != 3 || c.items[0].text != "const")
        throw FileFormatError("malformed signature entry");
      loader.sig.emplace(c.items[1].text, parse_type(c.items[2].text));
    }
  }
  if (const SExpr* fv = find_section(doc, "free")) {
    for (std::size_t i = 1; i < fv->items.size(); ++i) {
      const SExpr& v = fv->items[i];
      if (v.is_atom || v.items.size() != 3 || v.items[0].text != "var")
        throw FileFormatError("malformed free-variable entry");
      loader.opts.free_variables.emplace(v.items[1].text,
                                         parse_type(v.items[2].text));
    }
  }
  std::vector<Term> ctx;
  if (const SExpr* cx = find_section(doc, "context")) {
    for (std::size_t i = 1; i < cx->items.size(); ++i) {
      if (!cx->items[i].is_atom)
        throw FileFormatError("malformed context entry");
      ctx.push_back(loader.term(cx->items[i].text, {}));
    }
  }
  const SExpr* body = find_section(doc, "body");
  if (!body || body->items.size() != 2)
    throw FileFormatError("missing body");
  return loader.node(body->items[1], std::move(ctx), {});
}

}  // namespace hol
