#pragma once

// Quotients of P(alpha) x B_{r-1} by the relation (A,S) ~ (A',S') iff
// A + S = A' + S', with S placed in the lower-right r x r corner, and the
// checks that make chi(quotient) = chi(product).

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tesler/core.hpp"
#include "tesler/poset.hpp"
#include "tesler/symbolic.hpp"

namespace tesler {

/// A map T(alpha) -> T(alpha + e_{n-r+1}) given by adding an r x r matrix
/// of T(1,0^{r-1}).
struct ShiftMap {
  std::size_t r;
  GTMatrix s;
  std::set<std::size_t> label;  // subset_map(s)
};

/// Places `s` in the lower-right corner of an n x n zero matrix.
TriMatrix shift_embed(const ShiftMap& s, std::size_t n);
TriMatrix shift_embed(const TriMatrix& s, std::size_t n);

struct ShiftMapPoset {
  std::vector<ShiftMap> maps;  // maps[i] is element i of tesler.poset
  TeslerPoset tesler;
};

/// T(1,0^{r-1}) as shift maps under the Tesler order.
ShiftMapPoset shift_map_poset(std::size_t r);

struct QuotientPoset {
  HookSumVector alpha;
  std::size_t r = 0;
  std::size_t position = 0;  // 0-based index n - r that gains one
  TeslerPoset base;          // P(alpha)
  ShiftMapPoset shifts;
  Poset product;                           // element (a, s) has index a * |shifts| + s
  std::vector<std::size_t> class_of;       // product element -> class
  std::vector<std::vector<std::size_t>> classes;
  std::vector<TriMatrix> witness;          // A + S, shared by every member
  Poset quotient;

  HookSumVector target_alpha() const;
  std::size_t base_index(std::size_t x) const { return x / shifts.maps.size(); }
  std::size_t shift_index(std::size_t x) const { return x % shifts.maps.size(); }
};

/// Requires 1 <= r <= n and alpha_{n-r+1} = 0. Classes are ordered by
/// witness matrix. The quotient order is generated by the product covers.
QuotientPoset quotient_by_sum(const HookSumVector& alpha, std::size_t r,
                              const EnumerationOptions& options = {});

struct ConditionResult {
  std::string name;
  bool passed = true;
  std::string witness;  // counterexample on failure
};

struct QuotientReport {
  std::vector<ConditionResult> conditions;
  bool all_passed() const;
};

/// Singleton bottom class, agreement of the member-wise order with the
/// cover-generated one, homogeneity, rank preservation, and the summation
/// condition: for every nonzero class X, the product's Mobius values sum to
/// zero over the lower order ideal generated by X in the product.
QuotientReport check_quotient_conditions(const QuotientPoset& qp);

struct WitnessCheck {
  bool in_target = true;        // every witness lies in T(alpha + e)
  bool bijective = true;        // classes <-> T(alpha + e)
  bool preserves_covers = true; // both directions
  std::size_t target_size = 0;
  bool ok() const { return in_target && bijective && preserves_covers; }
};

/// Compares the quotient with P(alpha + e_{n-r+1}) through X -> witness(X).
WitnessCheck verify_witness_bijection(const QuotientPoset& qp, const TeslerPoset& target);

/// Counterexample text when some lower order ideal has both a first- and a
/// second-coordinate-isolated non-minimal element.
std::optional<std::string> isolation_dichotomy_violation(const QuotientPoset& qp);

/// Counterexample text when (A_0, S) ~ (A, S_0) with A, S both non-minimal.
std::optional<std::string> first_sum_violation(const QuotientPoset& qp);

/// w(alpha) = sum_j (n - j) alpha_j, 1-based j, alpha read left to right.
std::uint64_t binary_weight(const HookSumVector& alpha);

struct QuotientStep {
  HookSumVector from;
  HookSumVector to;
  std::size_t r = 0;
  std::size_t product_size = 0;
  std::size_t class_count = 0;
  QuotientReport report;
  WitnessCheck bijection;
  UniPoly chi_product;   // direct Mobius on P(from) x B_{r-1}
  UniPoly chi_quotient;  // direct Mobius on the quotient
  UniPoly chi_expected;  // previous chi times (q-1)^{r-1}
  /// Every check, including all quotient conditions.
  bool ok() const;
  /// Witness isomorphism and the chi equalities only.
  bool chi_ok() const;
};

struct FactorizationTrace {
  HookSumVector alpha;
  std::uint64_t w = 0;
  UniPoly predicted;  // (q-1)^w
  UniPoly direct;     // chi(P(alpha)) by Mobius summation
  std::vector<QuotientStep> steps;
  bool ok() const;
  bool chi_ok() const;
};

/// Builds P(alpha) from P(0^n) by switching on each 1 of alpha left to
/// right, checking every quotient step. Throws for non-binary alpha.
FactorizationTrace verify_factorization(const HookSumVector& alpha,
                                        const EnumerationOptions& options = {});

enum class WordSide { leading, trailing };

struct DivisibilityResult {
  HookSumVector vector;
  std::uint64_t exponent = 0;
  UniPoly chi;
  bool divides = false;
};

/// Leading: (q-1)^{w_1(beta)} | chi(P(beta, alpha)), w_1 = sum_i (n-i) beta_i.
/// Trailing: (q-1)^{w_2(beta)} | chi(P(alpha, beta)), w_2 = sum_i (k-i) beta_i.
DivisibilityResult check_divisibility(const std::vector<Entry>& alpha,
                                      const std::vector<Entry>& beta, WordSide side,
                                      const EnumerationOptions& options = {});

}  // namespace tesler
