#pragma once

// Enumeration and counting of T(alpha).
//
// Two independent generators are provided: the column-by-column generating
// algorithm (each matrix of size n spawns dpro(A) matrices of size n+1) and a
// row-by-row brute-force fill used as an oracle. Counting aggregates the
// generating algorithm over diagonal classes and never materializes matrices.

#include <cstdint>
#include <functional>
#include <vector>

#include "tesler/core.hpp"

namespace tesler {

struct EnumerationOptions {
  /// Maximum number of matrices an enumeration may produce.
  std::uint64_t ceiling = 10'000'000;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned jobs = 1;
  /// When jobs > 1, deliver visitor calls one at a time.
  bool serialized = true;
};

/// All size-(n+1) matrices generated from m with last hook sum next_alpha,
/// in canonical order. There are exactly diagonal_product(m) of them.
std::vector<GTMatrix> children(const GTMatrix& m, Entry next_alpha);

using MatrixVisitor = std::function<void(const GTMatrix&)>;

/// Streams every matrix of T(alpha) to `visit` without materializing the
/// family. With jobs == 1 the order is the generation (depth-first) order.
/// Returns the number of matrices visited.
std::uint64_t visit_family(const HookSumVector& alpha, const MatrixVisitor& visit,
                           const EnumerationOptions& options = {});

struct FamilyEnumeration {
  HookSumVector alpha;
  std::vector<GTMatrix> matrices;  // canonical (row-major lexicographic) order
  BigInt count;
};

FamilyEnumeration enumerate_family(const HookSumVector& alpha,
                                   const EnumerationOptions& options = {});

/// Independent oracle: fills rows top to bottom, each row a composition of
/// alpha_k plus the column sum above the diagonal.
FamilyEnumeration brute_force_enumerate(const HookSumVector& alpha,
                                        const EnumerationOptions& options = {});

/// T(alpha) as the sum of dpro over T(alpha_1..alpha_{n-1}), aggregated by
/// diagonal class (matrices sharing a diagonal multiset have identical
/// offspring diagonals).
BigInt count(const HookSumVector& alpha);

/// Distribution dpro -> number of matrices in T(alpha), from the same
/// diagonal-class aggregation as count().
std::vector<std::pair<std::uint64_t, BigInt>> diagonal_product_distribution(
    const HookSumVector& alpha);

/// T(alpha) by streaming every diagonal of T(alpha_1..alpha_{n-1}) and
/// summing dpro. `options.ceiling` bounds the number of size-(n-1) diagonals.
BigInt count_by_streaming(const HookSumVector& alpha, const EnumerationOptions& options = {});

}  // namespace tesler
