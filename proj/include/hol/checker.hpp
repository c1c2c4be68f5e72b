#ifndef HOL_CHECKER_HPP
#define HOL_CHECKER_HPP

#include <string>
#include <vector>

#include "hol/derivation.hpp"

namespace hol {

enum class Reason : unsigned char {
  None,
  RuleNotAdmitted,
  PremiseCount,
  BadConclusion,       // conclusion lacks the shape the rule produces
  PremiseMismatch,     // premise conclusion does not relate as required
  ContextMismatch,
  AxOutOfRange,
  AxMismatch,
  EigenvariableNotFresh,
  NotBetaEquivalent,
  IllTypedInstantiation,
  MissingInstantiation
};

const char* reason_name(Reason r);

// Verdict of the checker. On rejection, path holds the premise indices
// from the root to the offending node.
struct CheckResult {
  bool ok = true;
  std::vector<std::size_t> path;
  Reason reason = Reason::None;
  std::string detail;

  explicit operator bool() const { return ok; }
  std::string describe() const;

  static CheckResult accept() { return {}; }
  static CheckResult reject(std::vector<std::size_t> path, Reason reason,
                            std::string detail) {
    return {false, std::move(path), reason, std::move(detail)};
  }
};

// Checks that every node of d instantiates its rule correctly and is
// admitted by the settings. Total: returns a verdict, never throws on
// bad proofs.
CheckResult check(const Derivation& d, const CheckSettings& settings);
CheckResult check(const DerivPtr& d, const CheckSettings& settings);

// Checks d under the flavor and flags its own root conclusion claims.
CheckResult check(const DerivPtr& d);

}  // namespace hol

#endif
