#ifndef HOL_LEMMAS_HPP
#define HOL_LEMMAS_HPP

#include <vector>

#include "hol/derivation.hpp"

namespace hol {

// Derivation builders for ten standard intuitionistic facts, numbered:
//    1  ~~bot => bot
//    2  ~~top => top
//    3  ~~(A \/ ~A)
//    4  A => ~~A
//    5  ~~~A <=> ~A
//    6  ~~(A => B) <=> (~~A => ~~B)
//    7  ~~(A /\ B) <=> (~~A /\ ~~B)
//    8  ~(A \/ B) <=> (~A /\ ~B)
//    9  ~~forall P => forall x. ~~(P x)
//   10  ~exists P <=> forall x. ~(P x)
// Items 1-2 take no arguments, 3-5 take A, 6-8 take A and B, 9-10 take a
// predicate P : t -> o. The result proves the fact in the given context,
// intuitionistically with no extensionality rules.
DerivPtr dn_lemma(int id, const std::vector<Term>& args,
                const std::vector<Term>& context);

// Statement the builder proves, for callers that need the formula itself.
Term dn_lemma_statement(int id, const std::vector<Term>& args);

// Combinators. Every output checks whenever the inputs do and the stated
// side conditions hold.

// From G |- A => B and G |- A, derive G |- B.
DerivPtr modus_ponens(DerivPtr dimp, DerivPtr darg);

// From G |- A and G, A |- B, derive G |- B.
DerivPtr cut(DerivPtr dlemma, DerivPtr duse);

// From G |- A, derive G |- ~~A.
DerivPtr double_neg_intro(DerivPtr d);

// From G |- ~~A, derive G |- A using PEM (classical only).
DerivPtr double_neg_elim_classical(DerivPtr d);

// From G |- ~~(A => B) and G |- ~~A, derive G |- ~~B.
DerivPtr mp_under_double_neg(DerivPtr dimp, DerivPtr darg);

// From G |- u = v, derive G |- v = u.
DerivPtr eq_symmetry(DerivPtr d);

// G |- (A => A) /\ (A => A), the expansion of A <=> A.
DerivPtr iff_refl(const std::vector<Term>& context, const Term& a,
                  CheckSettings mode);

// G |- A <=> ~~A, classically (PEM on the backward direction).
DerivPtr iff_double_neg_classical(const std::vector<Term>& context,
                                  const Term& a, CheckSettings mode);

// \x. ~~(P x) and \x. ~(P x), the predicates items 9 and 10 quantify
// over, with a binder chosen so it cannot capture inside P.
Term dn_instance_pred(const Term& p);
Term neg_instance_pred(const Term& p);

}  // namespace hol

#endif
