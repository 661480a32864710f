#pragma once

// Finite ranked posets with a least element, stored as cover (Hasse)
// digraphs, plus the Tesler cover relation on T(alpha).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tesler/core.hpp"
#include "tesler/enumerate.hpp"
#include "tesler/symbolic.hpp"

namespace tesler {

/// Dense bitset over element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t universe() const { return size_; }
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  ElementSet& operator|=(const ElementSet& rhs);
  std::size_t count() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  bool operator==(const ElementSet&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class Poset {
 public:
  /// `up[i]` lists the elements covering i. Validates: unique minimal
  /// element, acyclic covers, and every cover raising rank by exactly one.
  Poset(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> up);

  std::size_t size() const { return labels_.size(); }
  std::size_t bottom() const { return bottom_; }
  std::size_t rank(std::size_t i) const { return rank_[i]; }
  /// Length of the longest chain.
  std::size_t rank() const { return height_; }
  const std::vector<std::size_t>& up(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& down(std::size_t i) const { return down_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t cover_count() const;
  /// Elements grouped by rank, each group in index order.
  std::vector<std::vector<std::size_t>> rank_levels() const;
  /// Element indices sorted by rank (ties by index): a linear extension.
  const std::vector<std::size_t>& by_rank() const { return order_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> order_;
  std::size_t bottom_ = 0;
  std::size_t height_ = 0;
};

/// ideal[x] = { y : y <= x }, via transitive closure in rank order.
std::vector<ElementSet> lower_ideals(const Poset& p);

bool leq(const std::vector<ElementSet>& ideals, std::size_t x, std::size_t y);

/// mu(0, x) for every x.
std::vector<std::int64_t> mobius(const Poset& p);
std::vector<std::int64_t> mobius(const Poset& p, const std::vector<ElementSet>& ideals);

/// sum_x mu(0, x) q^(rank(P) - rank(x)).
UniPoly characteristic_polynomial(const Poset& p);
UniPoly characteristic_polynomial(const Poset& p, const std::vector<std::int64_t>& mu);

Poset boolean_lattice(std::size_t k);
Poset chain(std::size_t length);
/// Componentwise order; element (i, j) has index i * |rhs| + j.
Poset product(const Poset& lhs, const Poset& rhs);

/// Some pair of elements with two distinct minimal upper bounds, if any.
struct NonLatticeWitness {
  std::size_t a, b;
  std::vector<std::size_t> minimal_upper_bounds;
};
std::optional<NonLatticeWitness> find_non_join_pair(const Poset& p);

struct IsomorphismLimits {
  std::size_t max_elements = 5000;
};
/// Backtracking search for an order isomorphism, matching elements rank by
/// rank with up/down-degree pruning. Throws std::length_error above the limit.
std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& a, const Poset& b,
                                                         IsomorphismLimits limits = {});
bool is_isomorphic_small(const Poset& a, const Poset& b, IsomorphismLimits limits = {});

/// True iff `map` (a -> b, by index) is a bijection with x <. y in a iff
/// map[x] <. map[y] in b.
bool is_cover_isomorphism(const Poset& a, const Poset& b, const std::vector<std::size_t>& map);

/// "a covers b" in the Tesler order: one unit moved along i<j<k
/// (a_ij, a_jk up, a_ik down) or off a diagonal entry (a_ij, a_jj up, a_ii down).
bool is_cover(const GTMatrix& a, const GTMatrix& b);

/// Every matrix reachable from m by one upward Tesler move.
std::vector<TriMatrix> upper_covers(const TriMatrix& m);

struct TeslerPoset {
  HookSumVector alpha;
  std::vector<GTMatrix> matrices;  // canonical order; index = poset element
  Poset poset;
  std::unordered_map<TriMatrix, std::size_t, TriMatrixHash> index;

  std::optional<std::size_t> find(const TriMatrix& m) const;
};

TeslerPoset build_poset(const HookSumVector& alpha, const EnumerationOptions& options = {});
/// Builds the Tesler order on an explicit family (all sharing one alpha).
TeslerPoset build_poset(const FamilyEnumeration& family);

/// sum_i (n - i) alpha_i with 1-based i.
std::uint64_t tesler_rank(const HookSumVector& alpha);

}  // namespace tesler
