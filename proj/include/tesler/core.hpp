#pragma once

// Generalized Tesler matrices: hook sums, diagonal products, the
// integral-flow view and the Boolean subset map on T(1,0,...,0).

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tesler {

using BigInt = boost::multiprecision::cpp_int;
using Entry = std::uint32_t;

/// Raised when a configured size/count ceiling would be exceeded.
class CeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hook-sum vector (alpha_1, ..., alpha_n), stored left to right.
class HookSumVector {
 public:
  HookSumVector() = default;
  explicit HookSumVector(std::vector<Entry> entries);
  HookSumVector(std::initializer_list<Entry> entries)
      : HookSumVector(std::vector<Entry>(entries)) {}

  std::size_t size() const { return entries_.size(); }
  Entry operator[](std::size_t k) const { return entries_[k]; }
  std::span<const Entry> entries() const { return entries_; }
  std::uint64_t total() const;
  bool is_binary() const;

  /// First k entries; requires 1 <= k <= size().
  HookSumVector prefix(std::size_t k) const;
  /// Copy with entry k (0-based) replaced.
  HookSumVector with(std::size_t k, Entry value) const;
  /// Concatenation (lhs, rhs).
  friend HookSumVector concat(const HookSumVector& lhs, const HookSumVector& rhs);

  std::string to_string() const;  // "1,1,1"

  auto operator<=>(const HookSumVector&) const = default;

 private:
  std::vector<Entry> entries_;
};

HookSumVector parse_alpha(const std::string& text);

/// (1^k, 0^(n-k))
HookSumVector ones_then_zeros(std::size_t k, std::size_t n);

/// Square upper-triangular matrix of non-negative integers, row-major on
/// the upper triangle. Indices are 0-based in code.
class TriMatrix {
 public:
  TriMatrix() = default;
  explicit TriMatrix(std::size_t n) : n_(n), data_(n * (n + 1) / 2, 0) {}
  TriMatrix(std::size_t n, std::vector<Entry> upper);

  /// From a dense square matrix; throws if an entry below the diagonal is nonzero.
  static TriMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);
  /// From the JSON-style ragged rows: rows[i] holds a_{i,i..n-1}.
  static TriMatrix from_rows(const std::vector<std::vector<Entry>>& rows);

  std::size_t size() const { return n_; }
  Entry at(std::size_t i, std::size_t j) const { return data_[offset(i, j)]; }
  Entry& at(std::size_t i, std::size_t j) { return data_[offset(i, j)]; }
  std::span<const Entry> upper() const { return data_; }

  std::vector<std::vector<Entry>> rows() const;
  /// Sum of entries strictly above the diagonal.
  std::uint64_t off_diagonal_sum() const;
  std::string flat_label() const;  // "0 1 0 1 1 2"

  TriMatrix& operator+=(const TriMatrix& rhs);
  friend TriMatrix operator+(TriMatrix lhs, const TriMatrix& rhs) { return lhs += rhs; }

  auto operator<=>(const TriMatrix&) const = default;

 private:
  std::size_t offset(std::size_t i, std::size_t j) const {
    return i * n_ - i * (i - 1) / 2 + (j - i);
  }
  std::size_t n_ = 0;
  std::vector<Entry> data_;
};

struct TriMatrixHash {
  std::size_t operator()(const TriMatrix& m) const noexcept;
};

/// Hook sums (h_1, ..., h_n): row sum from the diagonal rightward minus the
/// column sum above the diagonal.
std::vector<std::int64_t> hook_sums(const TriMatrix& m);
std::vector<std::int64_t> hook_sums(const std::vector<std::vector<std::int64_t>>& dense);

/// A matrix together with the hook-sum vector it satisfies.
class GTMatrix {
 public:
  /// Validates hook sums against alpha; throws std::invalid_argument.
  GTMatrix(TriMatrix m, HookSumVector alpha);

  struct Trusted {};
  /// For generators whose output is valid by construction.
  GTMatrix(Trusted, TriMatrix m, HookSumVector alpha)
      : m_(std::move(m)), alpha_(std::move(alpha)) {}

  std::size_t size() const { return m_.size(); }
  Entry at(std::size_t i, std::size_t j) const { return m_.at(i, j); }
  Entry diag(std::size_t i) const { return m_.at(i, i); }
  const TriMatrix& matrix() const { return m_; }
  const HookSumVector& alpha() const { return alpha_; }

  /// Poset rank: sum of the off-diagonal entries.
  std::uint64_t rank() const { return m_.off_diagonal_sum(); }

  friend bool operator==(const GTMatrix& a, const GTMatrix& b) { return a.m_ == b.m_; }
  friend auto operator<=>(const GTMatrix& a, const GTMatrix& b) { return a.m_ <=> b.m_; }

 private:
  TriMatrix m_;
  HookSumVector alpha_;
};

/// Matrix with diag(alpha) and zeros elsewhere: the least element of P(alpha).
GTMatrix minimal_matrix(const HookSumVector& alpha);

/// prod_i (d_i + 1).
std::uint64_t diagonal_product(const GTMatrix& m);

/// Flow on the complete DAG on n+1 vertices (0-based vertex ids 0..n).
class IntegralFlow {
 public:
  IntegralFlow(std::size_t vertices, std::map<std::pair<std::size_t, std::size_t>, Entry> edges);

  std::size_t vertices() const { return vertices_; }
  Entry flow(std::size_t from, std::size_t to) const;
  const std::map<std::pair<std::size_t, std::size_t>, Entry>& edges() const { return edges_; }
  /// Out-flow minus in-flow at every vertex.
  std::vector<std::int64_t> netflow() const;

  bool operator==(const IntegralFlow&) const = default;

 private:
  std::size_t vertices_;
  std::map<std::pair<std::size_t, std::size_t>, Entry> edges_;  // zero flows omitted
};

IntegralFlow to_flow(const GTMatrix& m);
/// Inverse of to_flow; rejects flows whose sink net flow is not -sum(others)
/// or whose other net flows are negative.
GTMatrix from_flow(const IntegralFlow& f);

/// For alpha = (1,0^(n-1)): i is in the result (1-based, i in [n-1]) iff
/// column n-i+1 has a nonzero entry.
std::set<std::size_t> subset_map(const GTMatrix& m);

}  // namespace tesler
