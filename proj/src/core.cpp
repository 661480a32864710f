#include "tesler/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tesler {

HookSumVector::HookSumVector(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("hook-sum vector must have length >= 1");
  }
}

std::uint64_t HookSumVector::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

bool HookSumVector::is_binary() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Entry e) { return e <= 1; });
}

HookSumVector HookSumVector::prefix(std::size_t k) const {
  if (k == 0 || k > entries_.size()) {
    throw std::out_of_range("prefix length out of range");
  }
  return HookSumVector(std::vector<Entry>(entries_.begin(), entries_.begin() + k));
}

HookSumVector HookSumVector::with(std::size_t k, Entry value) const {
  auto copy = entries_;
  copy.at(k) = value;
  return HookSumVector(std::move(copy));
}

HookSumVector concat(const HookSumVector& lhs, const HookSumVector& rhs) {
  auto v = lhs.entries_;
  v.insert(v.end(), rhs.entries_.begin(), rhs.entries_.end());
  return HookSumVector(std::move(v));
}

std::string HookSumVector::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    os << (k ? "," : "") << entries_[k];
  }
  return os.str();
}

HookSumVector parse_alpha(const std::string& text) {
  std::vector<Entry> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw std::invalid_argument("empty entry in hook-sum vector '" + text + "'");
    }
    item = item.substr(first, last - first + 1);
    if (!std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("hook sums must be non-negative integers: '" + item + "'");
    }
    unsigned long long v = std::stoull(item);
    if (v > 0xFFFFFFFFull) {
      throw std::invalid_argument("hook sum too large: " + item);
    }
    out.push_back(static_cast<Entry>(v));
  }
  return HookSumVector(std::move(out));
}

HookSumVector ones_then_zeros(std::size_t k, std::size_t n) {
  if (k > n) {
    throw std::invalid_argument("ones_then_zeros: k > n");
  }
  std::vector<Entry> v(n, 0);
  std::fill(v.begin(), v.begin() + k, 1);
  return HookSumVector(std::move(v));
}

TriMatrix::TriMatrix(std::size_t n, std::vector<Entry> upper) : n_(n), data_(std::move(upper)) {
  if (data_.size() != n * (n + 1) / 2) {
    throw std::invalid_argument("upper-triangle storage has wrong length");
  }
}

TriMatrix TriMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
  const std::size_t n = dense.size();
  TriMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (dense[i].size() != n) {
      throw std::invalid_argument("matrix is not square");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = dense[i][j];
      if (j < i) {
        if (v != 0) {
          throw std::invalid_argument("nonzero entry below the diagonal");
        }
        continue;
      }
      if (v < 0) {
        throw std::invalid_argument("negative matrix entry");
      }
      m.at(i, j) = static_cast<Entry>(v);
    }
  }
  return m;
}

TriMatrix TriMatrix::from_rows(const std::vector<std::vector<Entry>>& rows) {
  const std::size_t n = rows.size();
  TriMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n - i) {
      throw std::invalid_argument("row " + std::to_string(i) + " must hold " +
                                  std::to_string(n - i) + " entries");
    }
    for (std::size_t j = i; j < n; ++j) m.at(i, j) = rows[i][j - i];
  }
  return m;
}

std::vector<std::vector<Entry>> TriMatrix::rows() const {
  std::vector<std::vector<Entry>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) out[i].push_back(at(i, j));
  }
  return out;
}

std::uint64_t TriMatrix::off_diagonal_sum() const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) s += at(i, j);
  }
  return s;
}

std::string TriMatrix::flat_label() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < data_.size(); ++k) os << (k ? " " : "") << data_[k];
  return os.str();
}

TriMatrix& TriMatrix::operator+=(const TriMatrix& rhs) {
  if (rhs.n_ != n_) {
    throw std::invalid_argument("matrix size mismatch in addition");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

std::size_t TriMatrixHash::operator()(const TriMatrix& m) const noexcept {
  std::size_t h = m.size() * 0x9E3779B97F4A7C15ull;
  for (Entry e : m.upper()) {
    h ^= e + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<std::int64_t> hook_sums(const TriMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::int64_t> h(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = k; j < n; ++j) h[k] += m.at(k, j);
    for (std::size_t i = 0; i < k; ++i) h[k] -= m.at(i, k);
  }
  return h;
}

std::vector<std::int64_t> hook_sums(const std::vector<std::vector<std::int64_t>>& dense) {
  return hook_sums(TriMatrix::from_dense(dense));
}

GTMatrix::GTMatrix(TriMatrix m, HookSumVector alpha) : m_(std::move(m)), alpha_(std::move(alpha)) {
  if (m_.size() != alpha_.size()) {
    throw std::invalid_argument("matrix size does not match hook-sum vector length");
  }
  const auto h = hook_sums(m_);
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] != static_cast<std::int64_t>(alpha_[k])) {
      throw std::invalid_argument("hook sum " + std::to_string(k + 1) + " is " +
                                  std::to_string(h[k]) + ", expected " +
                                  std::to_string(alpha_[k]));
    }
  }
}

GTMatrix minimal_matrix(const HookSumVector& alpha) {
  TriMatrix m(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) m.at(i, i) = alpha[i];
  return GTMatrix(GTMatrix::Trusted{}, std::move(m), alpha);
}

std::uint64_t diagonal_product(const GTMatrix& m) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < m.size(); ++i) p *= std::uint64_t{m.diag(i)} + 1;
  return p;
}

IntegralFlow::IntegralFlow(std::size_t vertices,
                           std::map<std::pair<std::size_t, std::size_t>, Entry> edges)
    : vertices_(vertices) {
  if (vertices_ < 2) {
    throw std::invalid_argument("integral flow needs at least two vertices");
  }
  for (const auto& [e, v] : edges) {
    if (e.first >= e.second || e.second >= vertices_) {
      throw std::invalid_argument("flow edge must go from a lower to a higher vertex");
    }
    if (v != 0) edges_.emplace(e, v);
  }
}

Entry IntegralFlow::flow(std::size_t from, std::size_t to) const {
  auto it = edges_.find({from, to});
  return it == edges_.end() ? 0 : it->second;
}

std::vector<std::int64_t> IntegralFlow::netflow() const {
  std::vector<std::int64_t> net(vertices_, 0);
  for (const auto& [e, v] : edges_) {
    net[e.first] += v;
    net[e.second] -= v;
  }
  return net;
}

IntegralFlow to_flow(const GTMatrix& m) {
  const std::size_t n = m.size();
  std::map<std::pair<std::size_t, std::size_t>, Entry> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges[{i, n}] = m.at(i, i);
    for (std::size_t j = i + 1; j < n; ++j) edges[{i, j}] = m.at(i, j);
  }
  return IntegralFlow(n + 1, std::move(edges));
}

GTMatrix from_flow(const IntegralFlow& f) {
  const std::size_t n = f.vertices() - 1;
  const auto net = f.netflow();
  std::int64_t sum = 0;
  std::vector<Entry> alpha(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (net[k] < 0) {
      throw std::invalid_argument("net flow at a non-sink vertex is negative");
    }
    alpha[k] = static_cast<Entry>(net[k]);
    sum += net[k];
  }
  if (net[n] != -sum) {
    throw std::invalid_argument("sink net flow is not minus the sum of the others");
  }
  TriMatrix m(n);
  for (const auto& [e, v] : f.edges()) {
    if (e.second == n) {
      m.at(e.first, e.first) = v;
    } else {
      m.at(e.first, e.second) = v;
    }
  }
  return GTMatrix(std::move(m), HookSumVector(std::move(alpha)));
}

std::set<std::size_t> subset_map(const GTMatrix& m) {
  const std::size_t n = m.size();
  const auto& alpha = m.alpha();
  if (alpha[0] != 1 || std::any_of(alpha.entries().begin() + 1, alpha.entries().end(),
                                   [](Entry e) { return e != 0; })) {
    throw std::invalid_argument("subset_map requires hook-sum vector (1,0,...,0), got (" +
                                alpha.to_string() + ")");
  }
  std::set<std::size_t> out;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t col = n - i;  // 0-based index of column n-i+1
    for (std::size_t r = 0; r <= col; ++r) {
      if (m.at(r, col) != 0) {
        out.insert(i);
        break;
      }
    }
  }
  return out;
}

}  // namespace tesler
