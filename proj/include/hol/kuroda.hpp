#ifndef HOL_KURODA_HPP
#define HOL_KURODA_HPP

#include <optional>
#include <vector>

#include "hol/term.hpp"

namespace hol {

// Inner and outer translation of one term. The outer form (double
// negation of the inner one) only exists for formulas.
struct TranslationResult {
  Term inner;
  std::optional<Term> outer;
};

// The inner translation: structural on everything except the universal
// quantifier constant, which becomes \p. forall x. ~~(p x). The result is
// deliberately not beta-normalized, so the substitution law
// (t[z <- w])_Ku = t_Ku[z <- w_Ku] holds syntactically. Type-preserving.
Term kuroda_term(const Term& t);

// ~~ kuroda_term(a); requires a : o.
Term kuroda_formula(const Formula& a);

// Pointwise inner translation (contexts receive no outer double negation).
std::vector<Term> kuroda_context(const std::vector<Formula>& gamma);

// kuroda_formula followed by beta normalization; convenience for display.
Term kuroda_formula_normalized(const Formula& a);

TranslationResult kuroda(const Term& t);

}  // namespace hol

#endif
