#ifndef HOL_PARSE_HPP
#define HOL_PARSE_HPP

#include <map>
#include <string>

#include "hol/kernel.hpp"
#include "hol/term.hpp"

namespace hol {

// User constants in scope, by name.
using Signature = std::map<std::string, Type>;

struct ParseOptions {
  // Free variables the text may mention, with their types. Lookup order
  // for an identifier is binder, then free variable, then signature.
  TypeEnv free_variables;
  // Accept identifiers with the reserved generated-name prefix. Proof
  // files need this; user input never does.
  bool allow_reserved = false;
};

// Concrete syntax:
//   types   i, o, a -> b (right associative)
//   terms   \x:T. t        abstraction (body extends maximally)
//           forall x:T. A  /  exists x:T. A
//           t u            application by juxtaposition
//           ~A   A /\ B   A \/ B   A => B   A <=> B   t = u
//           top, bot
//   atoms   not, and, or, imp, eq[T], forall[T], exists[T] name the
//           logical constants themselves
// Binding tightness: application > = > ~ > /\ > \/ > => > <=>;
// => and <=> associate to the right.
Type parse_type(const std::string& text);
Term parse_term(const std::string& text, const Signature& sig);
Term parse_term(const std::string& text, const Signature& sig,
                const ParseOptions& opts);

// One "name : type" declaration per line; blank lines and '#' comments
// are skipped. Rejects reserved and keyword names.
Signature parse_signature(const std::string& text);

bool is_keyword(const std::string& word);

}  // namespace hol

#endif
