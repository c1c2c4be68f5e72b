#include "hol/kernel.hpp"

#include <atomic>

#include "hol/errors.hpp"

namespace hol {

namespace {

Type infer_rec(const Term& t, const TypeEnv& env,
               std::vector<std::pair<std::string, Type>>& scope) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
        if (it->first == t.var_name()) {
          if (it->second != t.type())
            throw TypeError("variable " + t.var_name() +
                            " annotated " + t.type().to_string() +
                            " but bound at " + it->second.to_string());
          return it->second;
        }
      }
      auto found = env.find(t.var_name());
      if (found == env.end()) throw UnboundVariable(t.var_name());
      if (found->second != t.type())
        throw TypeError("variable " + t.var_name() + " annotated " +
                        t.type().to_string() + " but declared " +
                        found->second.to_string());
      return found->second;
    }
    case Term::Kind::Const:
      return t.as_const().type_of();
    case Term::Kind::Lam: {
      scope.emplace_back(t.binder(), t.binder_type());
      Type body = infer_rec(t.body(), env, scope);
      scope.pop_back();
      return Type::arrow(t.binder_type(), std::move(body));
    }
    case Term::Kind::App: {
      Type f = infer_rec(t.fun(), env, scope);
      Type a = infer_rec(t.arg(), env, scope);
      if (!f.is_arrow())
        throw TypeError("application of non-function of type " +
                        f.to_string());
      if (f.domain() != a)
        throw TypeError("argument type " + a.to_string() +
                        " does not match domain " + f.domain().to_string());
      return f.codomain();
    }
  }
  throw TypeError("malformed term");
}

void free_vars_rec(const Term& t, std::vector<std::string>& bound,
                   std::vector<std::pair<std::string, Type>>& out) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (*it == t.var_name()) return;
      for (const auto& [name, type] : out)
        if (name == t.var_name() && type == t.type()) return;
      out.emplace_back(t.var_name(), t.type());
      return;
    }
    case Term::Kind::Const:
      return;
    case Term::Kind::Lam:
      bound.push_back(t.binder());
      free_vars_rec(t.body(), bound, out);
      bound.pop_back();
      return;
    case Term::Kind::App:
      free_vars_rec(t.fun(), bound, out);
      free_vars_rec(t.arg(), bound, out);
      return;
  }
}

std::atomic<unsigned long long> fresh_counter{0};

Term subst_rec(const Term& t, const std::string& x, const Term& u,
               const std::set<std::string>& fv_u) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (t.var_name() == x) {
        if (t.type() != u.type())
          throw TypeError("substituting " + u.type().to_string() +
                          " for occurrence of " + x + " : " +
                          t.type().to_string());
        return u;
      }
      return t;
    case Term::Kind::Const:
      return t;
    case Term::Kind::Lam: {
      if (t.binder() == x) return t;  // shadowed
      std::set<std::string> fv_body = free_var_names(t.body());
      if (!fv_body.count(x)) return t;
      if (fv_u.count(t.binder())) {
        // Rename the binder out of u's way first.
        std::string renamed = fresh_name();
        Term body = substitute(t.body(), t.binder(),
                               Term::var(renamed, t.binder_type()));
        return Term::lam(renamed, t.binder_type(),
                         subst_rec(body, x, u, fv_u));
      }
      Term body = subst_rec(t.body(), x, u, fv_u);
      if (body.same_node(t.body())) return t;
      return Term::lam(t.binder(), t.binder_type(), std::move(body));
    }
    case Term::Kind::App: {
      Term f = subst_rec(t.fun(), x, u, fv_u);
      Term a = subst_rec(t.arg(), x, u, fv_u);
      if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
      return Term::app(std::move(f), std::move(a));
    }
  }
  return t;
}

bool alpha_rec(const Term& t, const Term& u, std::vector<std::string>& bt,
               std::vector<std::string>& bu) {
  if (t.same_node(u) && bt == bu) return true;
  if (t.kind() != u.kind()) return false;
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto level = [](const std::vector<std::string>& b,
                      const std::string& n) -> long {
        for (long i = static_cast<long>(b.size()) - 1; i >= 0; --i)
          if (b[static_cast<std::size_t>(i)] == n) return i;
        return -1;
      };
      long lt = level(bt, t.var_name());
      long lu = level(bu, u.var_name());
      if (lt != lu) return false;
      if (lt >= 0) return true;  // both bound at the same depth
      return t.var_name() == u.var_name() && t.type() == u.type();
    }
    case Term::Kind::Const:
      return t.as_const() == u.as_const();
    case Term::Kind::Lam: {
      if (t.binder_type() != u.binder_type()) return false;
      bt.push_back(t.binder());
      bu.push_back(u.binder());
      bool r = alpha_rec(t.body(), u.body(), bt, bu);
      bt.pop_back();
      bu.pop_back();
      return r;
    }
    case Term::Kind::App:
      return alpha_rec(t.fun(), u.fun(), bt, bu) &&
             alpha_rec(t.arg(), u.arg(), bt, bu);
  }
  return false;
}

}  // namespace

Type infer_type(const Term& t, const TypeEnv& env) {
  std::vector<std::pair<std::string, Type>> scope;
  return infer_rec(t, env, scope);
}

Type infer_type(const Term& t) {
  TypeEnv env;
  for (const auto& [name, type] : free_vars(t)) {
    auto [it, inserted] = env.emplace(name, type);
    if (!inserted && it->second != type)
      throw TypeError("variable " + name + " used at both " +
                      it->second.to_string() + " and " + type.to_string());
  }
  return infer_type(t, env);
}

std::vector<std::pair<std::string, Type>> free_vars(const Term& t) {
  std::vector<std::string> bound;
  std::vector<std::pair<std::string, Type>> out;
  free_vars_rec(t, bound, out);
  return out;
}

std::set<std::string> free_var_names(const Term& t) {
  std::set<std::string> out;
  for (const auto& [name, type] : free_vars(t)) out.insert(name);
  return out;
}

bool is_closed(const Term& t) { return free_vars(t).empty(); }

std::string fresh_name() {
  return "_" + std::to_string(fresh_counter.fetch_add(1) + 1);
}

Term fresh_var(const Type& type) { return Term::var(fresh_name(), type); }

bool is_reserved_name(const std::string& name) {
  return !name.empty() && name[0] == '_';
}

void reset_fresh_counter() { fresh_counter.store(0); }

Term substitute(const Term& t, const std::string& x, const Term& u) {
  return subst_rec(t, x, u, free_var_names(u));
}

Term beta_normalize(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return t;
    case Term::Kind::Lam: {
      Term body = beta_normalize(t.body());
      if (body.same_node(t.body())) return t;
      return Term::lam(t.binder(), t.binder_type(), std::move(body));
    }
    case Term::Kind::App: {
      Term f = beta_normalize(t.fun());
      Term a = beta_normalize(t.arg());
      if (f.is_lam())
        return beta_normalize(substitute(f.body(), f.binder(), a));
      if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
      return Term::app(std::move(f), std::move(a));
    }
  }
  return t;
}

bool has_beta_redex(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return false;
    case Term::Kind::Lam:
      return has_beta_redex(t.body());
    case Term::Kind::App:
      return t.fun().is_lam() || has_beta_redex(t.fun()) ||
             has_beta_redex(t.arg());
  }
  return false;
}

bool alpha_equal(const Term& t, const Term& u) {
  std::vector<std::string> bt, bu;
  return alpha_rec(t, u, bt, bu);
}

bool alpha_beta_equiv(const Term& t, const Term& u) {
  if (t.type() != u.type())
    throw TypeError("comparing terms of types " + t.type().to_string() +
                    " and " + u.type().to_string());
  if (alpha_equal(t, u)) return true;
  return alpha_equal(beta_normalize(t), beta_normalize(u));
}

}  // namespace hol
