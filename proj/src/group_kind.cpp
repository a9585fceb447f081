#include "brauerch/group_kind.hpp"

#include "brauerch/error.hpp"

namespace brauerch {

GroupKind::GroupKind(Family family, int N) : family_(family), N_(N) {
  if (N < 1) throw DomainError("N must be a positive integer");
  if (family == Family::symplectic && N % 2 != 0)
    throw DomainError("the symplectic group requires even N");
  if (family == Family::orthogonal && N == 1)
    throw DomainError("the orthogonal group requires N >= 2 (n = 0 is degenerate)");
}

Family GroupKind::parse_family(std::string_view name) {
  if (name == "gl" || name == "general_linear") return Family::general_linear;
  if (name == "orthogonal" || name == "o") return Family::orthogonal;
  if (name == "sp" || name == "symplectic") return Family::symplectic;
  throw DomainError("unknown group '" + std::string(name) + "' (expected gl, orthogonal or sp)");
}

Rational GroupKind::epsilon() const {
  switch (family_) {
    case Family::orthogonal:
      return N_ % 2 == 0 ? Rational(0) : Rational(1, 2);
    case Family::symplectic:
      return Rational(1);
    case Family::general_linear:
      break;
  }
  throw DomainError("epsilon is undefined for the general linear group");
}

Rational GroupKind::omega() const {
  switch (family_) {
    case Family::orthogonal:
      return Rational(N_);
    case Family::symplectic:
      return Rational(-N_);
    case Family::general_linear:
      break;
  }
  throw DomainError("the general linear group has no Brauer parameter");
}

std::string GroupKind::family_name() const {
  switch (family_) {
    case Family::general_linear:
      return "gl";
    case Family::orthogonal:
      return "orthogonal";
    case Family::symplectic:
      return "symplectic";
  }
  return "?";
}

}  // namespace brauerch
