#pragma once

// Armstrong polynomials, bounds on T(1^n), hook-sum family sequences and
// the Mobius-bound probes.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tesler/core.hpp"
#include "tesler/enumerate.hpp"
#include "tesler/symbolic.hpp"

namespace tesler {

/// sum over A in T(alpha) of q^dpro(A), stored as dpro -> count.
struct ArmstrongPolynomial {
  HookSumVector alpha;
  std::map<std::uint64_t, BigInt> dist;

  BigInt coefficient(std::uint64_t degree) const;
  BigInt at_one() const;             // T(alpha)
  BigInt derivative_at_one() const;  // sum of dpro
  UniPoly polynomial() const;
};

/// By enumeration of T(alpha).
ArmstrongPolynomial armstrong_polynomial(const HookSumVector& alpha,
                                         const EnumerationOptions& options = {});
/// From the diagonal-class aggregation; no matrices are built.
ArmstrongPolynomial armstrong_polynomial_by_classes(const HookSumVector& alpha);

std::string to_string(const ArmstrongPolynomial& a);

/// One numeric claim: lhs relation rhs.
struct NumericCheck {
  std::string name;
  BigInt lhs;
  BigInt rhs;
  bool applicable = true;
  bool holds = false;
};

struct CoefficientReport {
  std::size_t n = 0;
  bool enumerated = false;  // A_n came from enumeration rather than the class DP
  std::vector<NumericCheck> checks;
  bool ok() const;
};

/// [q^{2^n}] = 1, [q^{n+1}] = T(1^{n-1}), [q^{3 2^{n-2}}] = 2^n - n - 1 (n >= 2),
/// A_n(1) = T(1^n) and A_n'(1) = T(1^{n+1}). A_n is enumerated when T(1^n)
/// is within options.ceiling; T values on the right come from count().
CoefficientReport verify_coefficient_identities(std::size_t n,
                                                const EnumerationOptions& options = {});

BigInt factorial(std::size_t n);
/// (2m-1)!! for m >= 0, so double_factorial_odd(0) = 1.
BigInt double_factorial_odd(std::size_t m);
BigInt binomial(std::size_t n, std::size_t k);
BigInt catalan(std::size_t i);

struct BoundsReport {
  std::size_t n = 0;
  BigInt value;  // T(1^n)
  /// n! <= (2n-3)!!, (2n-3)!! <= T, T <= 2^{C(n-2,2)-1} 3^n, 2^{C(n-2,2)-1} 3^n <= 2^{C(n,2)}.
  std::vector<NumericCheck> links;
  /// The two inner links; not applicable below n = 4.
  bool inner_applicable() const { return n >= 4; }
  bool inner_holds() const;
};

BoundsReport verify_bounds(std::size_t n);

enum class FamilyKind { ones_then_zeros, staircase, single_one };

struct FamilySpec {
  FamilyKind kind = FamilyKind::single_one;
  std::size_t k = 1;  // ones_then_zeros only

  std::string id() const;
  std::size_t first_n() const;
  HookSumVector alpha(std::size_t n) const;
};

/// "single-one", "staircase" or "ones-then-zeros:K".
FamilySpec parse_family(const std::string& text);

struct SequenceRow {
  std::size_t n = 0;
  BigInt value;
  std::optional<BigInt> bound_low;
  std::optional<BigInt> bound_high;
  std::string verdict;  // "ok", "violated" or "n/a"
};

struct SequenceCheck {
  std::string name;
  bool holds = false;
  /// A stated formula that the computed values contradict. Reported, but not
  /// counted by ok().
  bool discrepancy = false;
  std::string detail;
};

struct SequenceReport {
  std::string family;
  std::vector<SequenceRow> rows;
  std::vector<SequenceCheck> checks;
  bool ok() const;
  const BigInt& value(std::size_t n) const;
};

/// Values by count(), cross-checked against enumeration wherever the family
/// fits under options.ceiling.
SequenceReport family_sequence(const FamilySpec& family, std::size_t n_max,
                               const EnumerationOptions& options = {});

/// Coefficients [x^0..x^order] of the power series of num/den, den(0) = +-1.
std::vector<BigInt> series_expansion(const std::vector<BigInt>& num,
                                     const std::vector<BigInt>& den, std::size_t order);

struct ParkingProbe {
  std::size_t k = 0;
  std::size_t n = 0;
  BigInt value;  // T(1^k, 0^{n-k})
  BigInt bound;  // (k+1)^{n-1}
  bool holds = false;
};

ParkingProbe parking_bound_probe(std::size_t k, std::size_t n);

/// Smallest N <= n_max with the bound holding for every n in [N, n_max].
std::optional<std::size_t> empirical_threshold(std::size_t k, std::size_t n_max);

struct MobiusProbe {
  std::size_t n = 0;
  std::int64_t max_abs_mu = 0;  // M_n over P(1^n)
  BigInt factorial_bound;       // n!
  bool within_factorial = false;
  BigInt implied_lower;         // ceil(2^{C(n,2)} / M_n)
  BigInt value;                 // T(1^n)
  bool meets_implied = false;
};

MobiusProbe mobius_bound_probe(std::size_t n, const EnumerationOptions& options = {});

}  // namespace tesler
