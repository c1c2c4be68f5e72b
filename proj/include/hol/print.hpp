#ifndef HOL_PRINT_HPP
#define HOL_PRINT_HPP

#include <string>

#include "hol/term.hpp"

namespace hol {

std::string print_type(const Type& t);

// Concrete-syntax printer; parse_term(print_term(t)) is alpha-equal to t.
// Binders with generated names, or names shadowing a constant used in
// their body, are renamed on the way out (alpha-irrelevant). Free
// variables keep their names.
std::string print_term(const Term& t);

}  // namespace hol

#endif
