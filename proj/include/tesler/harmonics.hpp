#pragma once

// Hilbert series of the diagonal harmonics as a weighted sum over T(1^n),
// and its specializations.

#include <cstdint>
#include <string>

#include "tesler/core.hpp"
#include "tesler/enumerate.hpp"
#include "tesler/symbolic.hpp"

namespace tesler {

struct HilbertOptions {
  /// Largest n accepted. 7 by default; raise to 8 explicitly.
  std::size_t max_n = 7;
  unsigned jobs = 1;
};

struct HilbertResult {
  std::size_t n = 0;
  BiPoly series;
  BigInt dimension;  // series at q = t = 1
};

/// Throws CeilingExceeded above options.max_n and InexactDivision if the
/// weight sum fails to clear its (q-1) denominator.
HilbertResult hilbert_series(std::size_t n, const HilbertOptions& options = {});

/// Outcome of an identity check; `diff` names the first mismatching term.
struct IdentityCheck {
  bool ok = false;
  std::string lhs;
  std::string rhs;
  std::string diff;
};

/// q^{C(n,2)} Hilb(q, 1/q) = [n+1]_q^{n-1}.
IdentityCheck verify_inverse_specialization(const HilbertResult& h);
/// Hilb(q, 0) = [n]_q!.
IdentityCheck verify_t_zero_specialization(const HilbertResult& h);

struct PermutationTeslerSum {
  std::size_t n = 0;
  std::uint64_t matrices = 0;  // permutation Tesler matrices in T(1^n)
  BigInt sum;                  // sum of products of their positive entries
  BigInt expected;             // (n+1)^{n-1}
  bool all_weight_free = true; // each has exactly n positive entries
  bool ok() const { return all_weight_free && sum == expected; }
};

/// Filters T(1^n) to matrices with one nonzero entry per row.
PermutationTeslerSum verify_permutation_sum(std::size_t n, const EnumerationOptions& options = {});

/// Compares two Laurent polynomials term by term.
IdentityCheck compare(const LaurentPoly& lhs, const LaurentPoly& rhs);

}  // namespace tesler
