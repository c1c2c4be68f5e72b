#ifndef HOL_PROOFFILE_HPP
#define HOL_PROOFFILE_HPP

#include <string>

#include "hol/derivation.hpp"
#include "hol/parse.hpp"

namespace hol {

// Derivations travel as symbolic-expression documents:
//
//   (proof
//    (version 1)
//    (flavor classical)
//    (flags efp)
//    (signature (const P "i -> o") ...)
//    (free (var y "i") ...)
//    (context "A" "B" ...)
//    (body <node>))
//
// where a node is (Rule-Name (goal "...") <payload>* <premise-node>*).
// Rule names are those of the two rule figures. Only goals are stored;
// premise contexts are recomputed on load from the rule shapes, and
// eigenvariable payloads bring the types of the variables they introduce
// into scope for the subtree underneath. Whether the tree actually
// derives its conclusion stays the checker's business.
std::string store_proof(const DerivPtr& d);
DerivPtr load_proof(const std::string& text);

}  // namespace hol

#endif
