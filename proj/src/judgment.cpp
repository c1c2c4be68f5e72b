#include "hol/judgment.hpp"

#include "hol/errors.hpp"
#include "hol/kernel.hpp"

namespace hol {

std::string ExtFlags::star() const {
  std::string s;
  if (eq) s += "e";
  if (funext) s += "f";
  if (propext) s += "p";
  return s;
}

ExtFlags ExtFlags::from_star(const std::string& s) {
  if (s.empty()) return none();
  if (s == "e") return e();
  if (s == "ep") return ep();
  if (s == "ef") return ef();
  if (s == "efp") return efp();
  throw Error("invalid flag set '" + s + "' (expected one of: e ep ef efp)");
}

Judgment::Judgment(Flavor flavor_, ExtFlags flags_, std::vector<Term> ctx,
                   Term goal_)
    : flavor(flavor_), flags(flags_), context(std::move(ctx)),
      goal(std::move(goal_)) {
  for (const Term& f : context)
    if (!is_formula(f))
      throw TypeError("context entry of type " + f.type().to_string());
  if (!is_formula(goal))
    throw TypeError("goal of type " + goal.type().to_string());
}

std::string to_string(Flavor f) {
  return f == Flavor::Classical ? "classical" : "intuitionistic";
}

bool context_alpha_equal(const std::vector<Term>& a,
                         const std::vector<Term>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!alpha_equal(a[i], b[i])) return false;
  return true;
}

}  // namespace hol
