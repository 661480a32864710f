#include "tesler/poset.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace tesler {

ElementSet& ElementSet::operator|=(const ElementSet& rhs) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= rhs.words_[w];
  return *this;
}

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

Poset::Poset(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> up)
    : labels_(std::move(labels)), up_(std::move(up)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw std::invalid_argument("poset must be nonempty");
  if (up_.size() != n) throw std::invalid_argument("cover lists do not match element count");
  down_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(up_[i].begin(), up_[i].end());
    if (std::adjacent_find(up_[i].begin(), up_[i].end()) != up_[i].end()) {
      throw std::invalid_argument("duplicate cover edge");
    }
    for (std::size_t j : up_[i]) {
      if (j >= n || j == i) throw std::invalid_argument("invalid cover edge");
      down_[j].push_back(i);
    }
  }
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < n; ++i) {
    if (down_[i].empty()) minimal.push_back(i);
  }
  if (minimal.size() != 1) {
    throw std::invalid_argument("poset must have exactly one minimal element, found " +
                                std::to_string(minimal.size()));
  }
  bottom_ = minimal.front();

  // Kahn's algorithm; rank is assigned on first visit and checked on every edge.
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  rank_.assign(n, unset);
  rank_[bottom_] = 0;
  std::vector<std::size_t> indegree(n);
  for (std::size_t i = 0; i < n; ++i) indegree[i] = down_[i].size();
  std::deque<std::size_t> ready{bottom_};
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t x = ready.front();
    ready.pop_front();
    ++seen;
    for (std::size_t y : up_[x]) {
      if (rank_[y] == unset) {
        rank_[y] = rank_[x] + 1;
      } else if (rank_[y] != rank_[x] + 1) {
        throw std::invalid_argument("poset is not ranked: cover does not raise rank by one");
      }
      if (--indegree[y] == 0) ready.push_back(y);
    }
  }
  if (seen != n) throw std::invalid_argument("cover digraph has a cycle");
  height_ = *std::max_element(rank_.begin(), rank_.end());
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t a, std::size_t b) { return rank_[a] < rank_[b]; });
}

std::size_t Poset::cover_count() const {
  std::size_t c = 0;
  for (const auto& u : up_) c += u.size();
  return c;
}

std::vector<std::vector<std::size_t>> Poset::rank_levels() const {
  std::vector<std::vector<std::size_t>> levels(height_ + 1);
  for (std::size_t i = 0; i < size(); ++i) levels[rank_[i]].push_back(i);
  return levels;
}

std::vector<ElementSet> lower_ideals(const Poset& p) {
  std::vector<ElementSet> ideal(p.size(), ElementSet(p.size()));
  for (std::size_t x : p.by_rank()) {
    ideal[x].insert(x);
    for (std::size_t y : p.down(x)) ideal[x] |= ideal[y];
  }
  return ideal;
}

bool leq(const std::vector<ElementSet>& ideals, std::size_t x, std::size_t y) {
  return ideals[y].contains(x);
}

std::vector<std::int64_t> mobius(const Poset& p) { return mobius(p, lower_ideals(p)); }

std::vector<std::int64_t> mobius(const Poset& p, const std::vector<ElementSet>& ideals) {
  std::vector<std::int64_t> mu(p.size(), 0);
  for (std::size_t x : p.by_rank()) {
    if (x == p.bottom()) {
      mu[x] = 1;
      continue;
    }
    std::int64_t s = 0;
    ideals[x].for_each([&](std::size_t y) {
      if (y != x) s += mu[y];
    });
    mu[x] = -s;
  }
  return mu;
}

UniPoly characteristic_polynomial(const Poset& p) { return characteristic_polynomial(p, mobius(p)); }

UniPoly characteristic_polynomial(const Poset& p, const std::vector<std::int64_t>& mu) {
  UniPoly chi;
  for (std::size_t x = 0; x < p.size(); ++x) {
    chi.add_term(static_cast<int>(p.rank() - p.rank(x)), BigInt(mu[x]));
  }
  return chi;
}

Poset boolean_lattice(std::size_t k) {
  if (k >= 24) throw std::invalid_argument("boolean lattice too large");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels(n);
  std::vector<std::vector<std::size_t>> up(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::string label = "{";
    bool first = true;
    for (std::size_t b = 0; b < k; ++b) {
      if (s >> b & 1u) {
        label += (first ? "" : ",") + std::to_string(b + 1);
        first = false;
      } else {
        up[s].push_back(s | (std::size_t{1} << b));
      }
    }
    labels[s] = label + "}";
  }
  return Poset(std::move(labels), std::move(up));
}

Poset chain(std::size_t length) {
  std::vector<std::string> labels(length + 1);
  std::vector<std::vector<std::size_t>> up(length + 1);
  for (std::size_t i = 0; i <= length; ++i) {
    labels[i] = std::to_string(i);
    if (i < length) up[i].push_back(i + 1);
  }
  return Poset(std::move(labels), std::move(up));
}

Poset product(const Poset& lhs, const Poset& rhs) {
  const std::size_t m = rhs.size();
  const std::size_t n = lhs.size() * m;
  std::vector<std::string> labels(n);
  std::vector<std::vector<std::size_t>> up(n);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t x = i * m + j;
      labels[x] = "(" + lhs.label(i) + " | " + rhs.label(j) + ")";
      for (std::size_t i2 : lhs.up(i)) up[x].push_back(i2 * m + j);
      for (std::size_t j2 : rhs.up(j)) up[x].push_back(i * m + j2);
    }
  }
  return Poset(std::move(labels), std::move(up));
}

std::optional<NonLatticeWitness> find_non_join_pair(const Poset& p) {
  const auto ideals = lower_ideals(p);
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::vector<std::size_t> upper;
      for (std::size_t c = 0; c < n; ++c) {
        if (ideals[c].contains(a) && ideals[c].contains(b)) upper.push_back(c);
      }
      std::vector<std::size_t> minimal;
      for (std::size_t c : upper) {
        const bool is_min = std::none_of(upper.begin(), upper.end(), [&](std::size_t d) {
          return d != c && ideals[c].contains(d);
        });
        if (is_min) minimal.push_back(c);
      }
      if (minimal.size() >= 2) return NonLatticeWitness{a, b, minimal};
    }
  }
  return std::nullopt;
}

bool is_cover_isomorphism(const Poset& a, const Poset& b, const std::vector<std::size_t>& map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (std::size_t y : map) {
    if (y >= b.size() || hit[y]) return false;
    hit[y] = true;
  }
  if (a.cover_count() != b.cover_count()) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t x2 : a.up(x)) {
      const auto& bu = b.up(map[x]);
      if (!std::binary_search(bu.begin(), bu.end(), map[x2])) return false;
    }
  }
  // Equal edge counts plus injectivity make the edge map onto.
  return true;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& a, const Poset& b,
                                                         IsomorphismLimits limits) {
  if (a.size() > limits.max_elements || b.size() > limits.max_elements) {
    throw std::length_error("isomorphism search limited to " +
                            std::to_string(limits.max_elements) + " elements");
  }
  if (a.size() != b.size() || a.rank() != b.rank() || a.cover_count() != b.cover_count()) {
    return std::nullopt;
  }
  auto signature = [](const Poset& p, std::size_t x) {
    return std::tuple(p.rank(x), p.down(x).size(), p.up(x).size());
  };
  {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> sa, sb;
    for (std::size_t x = 0; x < a.size(); ++x) sa.push_back(signature(a, x));
    for (std::size_t x = 0; x < b.size(); ++x) sb.push_back(signature(b, x));
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Elements of `a` are assigned in rank order, so all lower covers of x are
  // already mapped when x is; equal down-degrees make down(x) map onto down(f(x)).
  const auto& order = a.by_rank();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(a.size(), unset);
  std::vector<bool> used(b.size(), false);

  std::function<bool(std::size_t)> assign = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    const std::size_t x = order[pos];
    const auto sig = signature(a, x);
    // Candidates: above the image of some lower cover, or any bottom.
    std::vector<std::size_t> candidates;
    if (a.down(x).empty()) {
      candidates.push_back(b.bottom());
    } else {
      candidates = b.up(map[a.down(x).front()]);
    }
    for (std::size_t y : candidates) {
      if (used[y] || signature(b, y) != sig) continue;
      const auto& bd = b.down(y);
      const bool ok = std::all_of(a.down(x).begin(), a.down(x).end(), [&](std::size_t z) {
        return std::binary_search(bd.begin(), bd.end(), map[z]);
      });
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (assign(pos + 1)) return true;
      used[y] = false;
      map[x] = unset;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

bool is_isomorphic_small(const Poset& a, const Poset& b, IsomorphismLimits limits) {
  return find_isomorphism(a, b, limits).has_value();
}

bool is_cover(const GTMatrix& a, const GTMatrix& b) {
  if (a.size() != b.size() || a.alpha() != b.alpha()) {
    throw std::invalid_argument("is_cover: matrices have different sizes or hook sums");
  }
  for (const auto& m : upper_covers(b.matrix())) {
    if (m == a.matrix()) return true;
  }
  return false;
}

std::vector<TriMatrix> upper_covers(const TriMatrix& m) {
  const std::size_t n = m.size();
  std::vector<TriMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    // Diagonal move: a_ii -> a_ij and a_jj.
    if (m.at(i, i) > 0) {
      for (std::size_t j = i + 1; j < n; ++j) {
        TriMatrix a = m;
        --a.at(i, i);
        ++a.at(i, j);
        ++a.at(j, j);
        out.push_back(std::move(a));
      }
    }
    // Transfer move: a_ik -> a_ij and a_jk.
    for (std::size_t k = i + 2; k < n; ++k) {
      if (m.at(i, k) == 0) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        TriMatrix a = m;
        --a.at(i, k);
        ++a.at(i, j);
        ++a.at(j, k);
        out.push_back(std::move(a));
      }
    }
  }
  return out;
}

std::optional<std::size_t> TeslerPoset::find(const TriMatrix& m) const {
  auto it = index.find(m);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

TeslerPoset build_poset(const FamilyEnumeration& family) {
  const std::size_t n = family.matrices.size();
  std::unordered_map<TriMatrix, std::size_t, TriMatrixHash> index;
  index.reserve(n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    index.emplace(family.matrices[x].matrix(), x);
    labels[x] = family.matrices[x].matrix().flat_label();
  }
  std::vector<std::vector<std::size_t>> up(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& a : upper_covers(family.matrices[x].matrix())) {
      auto it = index.find(a);
      if (it == index.end()) {
        throw std::logic_error("Tesler move left the family: " + a.flat_label());
      }
      up[x].push_back(it->second);
    }
  }
  return TeslerPoset{family.alpha, family.matrices, Poset(std::move(labels), std::move(up)),
                     std::move(index)};
}

TeslerPoset build_poset(const HookSumVector& alpha, const EnumerationOptions& options) {
  return build_poset(enumerate_family(alpha, options));
}

std::uint64_t tesler_rank(const HookSumVector& alpha) {
  std::uint64_t r = 0;
  const std::size_t n = alpha.size();
  for (std::size_t i = 0; i < n; ++i) r += (n - 1 - i) * std::uint64_t{alpha[i]};
  return r;
}

}  // namespace tesler
