#include "hol/type.hpp"

namespace hol {

const Type& Type::iota() {
  static const Type t{std::make_shared<const Rep>(
      Rep{Kind::Iota, std::nullopt, std::nullopt})};
  return t;
}

const Type& Type::omicron() {
  static const Type t{std::make_shared<const Rep>(
      Rep{Kind::Omicron, std::nullopt, std::nullopt})};
  return t;
}

Type Type::arrow(Type domain, Type codomain) {
  return Type{std::make_shared<const Rep>(
      Rep{Kind::Arrow, std::move(domain), std::move(codomain)})};
}

Type::Kind Type::kind() const { return rep_->kind; }

const Type& Type::domain() const { return *rep_->dom; }
const Type& Type::codomain() const { return *rep_->cod; }

bool Type::operator==(const Type& other) const {
  if (rep_ == other.rep_) return true;
  if (kind() != other.kind()) return false;
  if (!is_arrow()) return true;
  return domain() == other.domain() && codomain() == other.codomain();
}

std::string Type::to_string() const {
  switch (kind()) {
    case Kind::Iota: return "i";
    case Kind::Omicron: return "o";
    case Kind::Arrow: {
      std::string lhs = domain().to_string();
      if (domain().is_arrow()) lhs = "(" + lhs + ")";
      return lhs + " -> " + codomain().to_string();
    }
  }
  return "?";
}

}  // namespace hol
