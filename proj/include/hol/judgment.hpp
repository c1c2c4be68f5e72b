#ifndef HOL_JUDGMENT_HPP
#define HOL_JUDGMENT_HPP

#include <string>
#include <vector>

#include "hol/term.hpp"

namespace hol {

enum class Flavor : unsigned char { Classical, Intuitionistic };

// Extensionality flags. The checker admits Eq-I/Eq-E under eq, FunExt
// under funext and PropExt under propext. FunExt and PropExt conclude
// equalities, so either one implies eq; the constructor normalizes.
struct ExtFlags {
  bool eq = false;
  bool funext = false;
  bool propext = false;

  ExtFlags() = default;
  ExtFlags(bool e, bool f, bool p)
      : eq(e || f || p), funext(f), propext(p) {}

  static ExtFlags none() { return {}; }
  static ExtFlags e() { return {true, false, false}; }
  static ExtFlags ep() { return {true, false, true}; }
  static ExtFlags ef() { return {true, true, false}; }
  static ExtFlags efp() { return {true, true, true}; }

  bool subset_of(const ExtFlags& other) const {
    return (!eq || other.eq) && (!funext || other.funext) &&
           (!propext || other.propext);
  }
  ExtFlags united(const ExtFlags& other) const {
    return {eq || other.eq, funext || other.funext, propext || other.propext};
  }
  bool operator==(const ExtFlags& other) const {
    return eq == other.eq && funext == other.funext &&
           propext == other.propext;
  }

  // The star annotation: "", "e", "ep", "ef" or "efp".
  std::string star() const;
  // Parses a star annotation; throws Error on anything else.
  static ExtFlags from_star(const std::string& s);
};

// Which rules the checker admits.
struct CheckSettings {
  Flavor flavor = Flavor::Classical;
  ExtFlags flags;
};

// A sequent: context |- goal, tagged with the logic it claims to live in.
// Every formula must have type o.
struct Judgment {
  Flavor flavor;
  ExtFlags flags;
  std::vector<Term> context;
  Term goal;

  Judgment(Flavor flavor, ExtFlags flags, std::vector<Term> context,
           Term goal);

  CheckSettings settings() const { return {flavor, flags}; }
};

std::string to_string(Flavor f);

// Pointwise alpha-equality of contexts.
bool context_alpha_equal(const std::vector<Term>& a,
                         const std::vector<Term>& b);

}  // namespace hol

#endif
