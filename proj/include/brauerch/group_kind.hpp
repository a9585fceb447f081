#pragma once

#include <string>
#include <string_view>

#include "brauerch/rational.hpp"

namespace brauerch {

enum class Family { general_linear, orthogonal, symplectic };

/// Which classical group acts on C^N. Derived data: n = floor(N/2);
/// ε = 0 for o_{2n}, 1/2 for o_{2n+1}, 1 for sp_{2n}; ω = N (orthogonal),
/// -N (symplectic).
class GroupKind {
 public:
  /// Rejects N < 1, odd N for the symplectic family, and N = 1 (n = 0) for the
  /// orthogonal family.
  GroupKind(Family family, int N);

  static GroupKind gl(int N) { return {Family::general_linear, N}; }
  static GroupKind orthogonal(int N) { return {Family::orthogonal, N}; }
  static GroupKind symplectic(int N) { return {Family::symplectic, N}; }

  /// "gl", "orthogonal"/"o", "sp"/"symplectic".
  static Family parse_family(std::string_view name);

  Family family() const { return family_; }
  int N() const { return N_; }
  int n() const { return N_ / 2; }
  bool is_brauer() const { return family_ != Family::general_linear; }
  /// Only meaningful for the orthogonal and symplectic families.
  Rational epsilon() const;
  Rational omega() const;
  /// "gl", "orthogonal" or "symplectic".
  std::string family_name() const;

  friend bool operator==(const GroupKind&, const GroupKind&) = default;

 private:
  Family family_;
  int N_;
};

}  // namespace brauerch
