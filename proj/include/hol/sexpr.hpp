#ifndef HOL_SEXPR_HPP
#define HOL_SEXPR_HPP

#include <string>
#include <vector>

namespace hol {

// Minimal symbolic expressions: atoms (quoted when needed) and lists.
struct SExpr {
  bool is_atom = false;
  std::string text;          // atoms only
  std::vector<SExpr> items;  // lists only

  static SExpr atom(std::string s) { return {true, std::move(s), {}}; }
  static SExpr list(std::vector<SExpr> items) {
    return {false, {}, std::move(items)};
  }
};

std::string write_sexpr(const SExpr& e);
SExpr parse_sexpr(const std::string& text);

}  // namespace hol

#endif
