#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "brauerch/group_kind.hpp"
#include "brauerch/rational.hpp"
#include "brauerch/young.hpp"

namespace brauerch {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Counterexample or error message; empty on success.
  std::string detail;
};

class VerifyReport {
 public:
  explicit VerifyReport(std::string suite = "") : suite_(std::move(suite)) {}

  void add(std::string name, bool passed, std::string detail = "");
  void merge(const VerifyReport& other);

  const std::string& suite() const { return suite_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

  /// One "PASS name" / "FAIL name: detail" line per check, then a summary.
  std::string text() const;
  std::string json() const;

 private:
  std::string suite_;
  std::vector<CheckResult> checks_;
};

struct VerifyOptions {
  int max_m = 4;
  /// Dimensions to sweep; an empty list selects the suite's defaults.
  std::vector<int> N_values;
  std::uint64_t seed = 20261015;
  int random_pairs = 100;
};

// Brauer algebra level.
void check_brauer_relations(VerifyReport& r, const Rational& omega, int m);
void check_associativity(VerifyReport& r, const Rational& omega, int m, int trials, std::mt19937_64& rng);
void check_symmetric_closure(VerifyReport& r, int m);
void check_basis_count(VerifyReport& r, int m);

// Tensor representation.
void check_homomorphism(VerifyReport& r, const GroupKind& kind, int m, int pairs, std::mt19937_64& rng);
void check_tensor_identities(VerifyReport& r, const GroupKind& kind, std::mt19937_64& rng);
void check_orthogonal_direct_formula(VerifyReport& r, int N, int m);

// Idempotents and dimensions; λ must satisfy the shape bound.
void check_idempotents(VerifyReport& r, const GroupKind& kind, const Partition& lambda);
void check_dimensions(VerifyReport& r, const GroupKind& kind, const Partition& lambda);
void check_duality(VerifyReport& r, int max_size);

// Characteristic maps.
void check_theorem_oracle(VerifyReport& r, const GroupKind& kind, const Partition& lambda);
void check_odd_vanishing(VerifyReport& r, const GroupKind& kind, const Partition& lambda);
void check_pruning(VerifyReport& r, const GroupKind& kind, const Partition& lambda);
void check_corollary(VerifyReport& r, const GroupKind& kind, int l, bool anti);
void check_gl_characteristic(VerifyReport& r, const Partition& lambda, int N);

// Double Schur functions, for ε ∈ {0, 1/2, 1}.
void check_double_schur_vanishing(VerifyReport& r, const Rational& eps, int n, int max_size);
void check_double_schur_symmetry(VerifyReport& r, const Rational& eps, int n, int max_size, std::mt19937_64& rng);
void check_double_schur_zero_sequence(VerifyReport& r, int n, int max_size, std::mt19937_64& rng);
void check_row_factorization(VerifyReport& r, const Rational& eps, int n, int max_k);
void check_column_factorization(VerifyReport& r, const Rational& eps, int n, int max_k);

/// Suites: "relations", "idempotents", "dims", "charmap", "all".
VerifyReport run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace brauerch
