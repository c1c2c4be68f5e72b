#ifndef HOL_KERNEL_HPP
#define HOL_KERNEL_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hol/term.hpp"

namespace hol {

using TypeEnv = std::map<std::string, Type>;

// Recomputes the type of t from scratch, checking every application and
// every free variable against env. Throws UnboundVariable for a free
// variable missing from env and TypeError on any disagreement. This is
// the independent re-derivation path; Term caches the same type at
// construction.
Type infer_type(const Term& t, const TypeEnv& env);
// Same, with env seeded from the term's own variable annotations.
Type infer_type(const Term& t);

// Free variable names of t.
std::set<std::string> free_var_names(const Term& t);
// Free variables with their annotated types, in first-occurrence order.
std::vector<std::pair<std::string, Type>> free_vars(const Term& t);
bool is_closed(const Term& t);

// Generated names carry a reserved prefix that the concrete-syntax parser
// refuses, so they can never collide with user input. The counter is
// atomic; reset only exists to make single-threaded CLI runs and tests
// reproducible.
std::string fresh_name();
Term fresh_var(const Type& type);
bool is_reserved_name(const std::string& name);
void reset_fresh_counter();

// Capture-avoiding substitution of u for the free occurrences of x in t.
// Bound variables are renamed to fresh names as needed. Throws TypeError
// if some free occurrence of x has a type other than u's.
Term substitute(const Term& t, const std::string& x, const Term& u);

// Full beta-normal form. Simple typing guarantees termination.
Term beta_normalize(const Term& t);
bool has_beta_redex(const Term& t);

// Alpha-equality (bound names ignored, free names literal).
bool alpha_equal(const Term& t, const Term& u);

// t and u are convertible: their beta-normal forms are alpha-equal.
// Throws TypeError when the types differ.
bool alpha_beta_equiv(const Term& t, const Term& u);

}  // namespace hol

#endif
