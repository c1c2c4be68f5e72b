#ifndef HOL_TYPE_HPP
#define HOL_TYPE_HPP

#include <memory>
#include <optional>
#include <string>

namespace hol {

// Simple types: iota (individuals), omicron (propositions), and arrows.
// Values are immutable and cheap to copy; equality is structural.
class Type {
 public:
  enum class Kind : unsigned char { Iota, Omicron, Arrow };

  static const Type& iota();
  static const Type& omicron();
  static Type arrow(Type domain, Type codomain);

  Kind kind() const;
  bool is_iota() const { return kind() == Kind::Iota; }
  bool is_omicron() const { return kind() == Kind::Omicron; }
  bool is_arrow() const { return kind() == Kind::Arrow; }

  // Pre: is_arrow().
  const Type& domain() const;
  const Type& codomain() const;

  bool operator==(const Type& other) const;
  bool operator!=(const Type& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  struct Rep;
  explicit Type(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

struct Type::Rep {
  Kind kind;
  std::optional<Type> dom;  // arrows only
  std::optional<Type> cod;
};

}  // namespace hol

#endif
