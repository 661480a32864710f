#include "tesler/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <mutex>
#include <thread>

namespace tesler {
namespace {

unsigned resolve_jobs(unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

void check_ceiling(const BigInt& total, std::uint64_t ceiling, const char* what) {
  if (total > ceiling) {
    throw CeilingExceeded(std::string(what) + " would produce " + total.str() +
                          " matrices, above the ceiling of " + std::to_string(ceiling));
  }
}

// Depth-first generation over a full-size working matrix whose leading
// k x k block is the current (valid) matrix.
class Generator {
 public:
  Generator(const HookSumVector& alpha, const MatrixVisitor& emit)
      : alpha_(alpha), n_(alpha.size()), emit_(emit) {}

  void run(TriMatrix& work, std::size_t k) {
    if (k == n_) {
      emit_(GTMatrix(GTMatrix::Trusted{}, work, alpha_));
      return;
    }
    for_each_child(work, k, [&] { run(work, k + 1); });
  }

  // Applies every child move at level k in turn, calling `body` with the
  // child installed in `work`, and restores `work` afterwards.
  template <class Body>
  void for_each_child(TriMatrix& work, std::size_t k, Body&& body) {
    std::vector<Entry> diag(k);
    for (std::size_t i = 0; i < k; ++i) diag[i] = work.at(i, i);
    std::vector<Entry> taken(k, 0);
    while (true) {
      std::uint64_t moved = 0;
      for (std::size_t i = 0; i < k; ++i) {
        work.at(i, i) = diag[i] - taken[i];
        work.at(i, k) = taken[i];
        moved += taken[i];
      }
      work.at(k, k) = static_cast<Entry>(alpha_[k] + moved);
      body();
      std::size_t i = 0;
      while (i < k && taken[i] == diag[i]) taken[i++] = 0;
      if (i == k) break;
      ++taken[i];
    }
    for (std::size_t i = 0; i < k; ++i) {
      work.at(i, i) = diag[i];
      work.at(i, k) = 0;
    }
    work.at(k, k) = 0;
  }

 private:
  const HookSumVector& alpha_;
  std::size_t n_;
  const MatrixVisitor& emit_;
};

TriMatrix seed_matrix(const HookSumVector& alpha) {
  TriMatrix work(alpha.size());
  work.at(0, 0) = alpha[0];
  return work;
}

struct FrontierNode {
  TriMatrix work;
  std::size_t level;
};

// Expands the generation tree breadth-first until it has enough independent
// subtrees to hand out to workers.
std::vector<FrontierNode> build_frontier(const HookSumVector& alpha, std::size_t target) {
  const MatrixVisitor unused = [](const GTMatrix&) {};
  Generator gen(alpha, unused);
  std::vector<FrontierNode> frontier{{seed_matrix(alpha), 1}};
  while (frontier.size() < target && frontier.front().level < alpha.size()) {
    std::vector<FrontierNode> next;
    for (auto& node : frontier) {
      gen.for_each_child(node.work, node.level,
                         [&] { next.push_back({node.work, node.level + 1}); });
    }
    frontier = std::move(next);
  }
  return frontier;
}

template <class Task>
void run_workers(std::size_t tasks, unsigned jobs, Task&& task) {
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t t = next++; t < tasks; t = next++) task(t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks;
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

void compositions(std::uint64_t total, std::size_t parts, std::vector<Entry>& buf,
                  std::size_t pos, const std::function<void()>& body) {
  if (pos + 1 == parts) {
    buf[pos] = static_cast<Entry>(total);
    body();
    return;
  }
  for (std::uint64_t v = 0; v <= total; ++v) {
    buf[pos] = static_cast<Entry>(v);
    compositions(total - v, parts, buf, pos + 1, body);
  }
}

using DiagonalClass = std::vector<Entry>;  // positive diagonal entries, sorted descending

std::map<DiagonalClass, BigInt> diagonal_classes(const HookSumVector& alpha) {
  std::map<DiagonalClass, BigInt> level;
  level[alpha[0] ? DiagonalClass{alpha[0]} : DiagonalClass{}] = 1;
  for (std::size_t k = 1; k < alpha.size(); ++k) {
    std::map<DiagonalClass, BigInt> next;
    for (const auto& [parts, mult] : level) {
      std::vector<Entry> kept(parts.size(), 0);
      while (true) {
        std::uint64_t moved = 0;
        DiagonalClass child;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          moved += parts[i] - kept[i];
          if (kept[i]) child.push_back(kept[i]);
        }
        if (alpha[k] + moved) child.push_back(static_cast<Entry>(alpha[k] + moved));
        std::sort(child.rbegin(), child.rend());
        next[std::move(child)] += mult;
        std::size_t i = 0;
        while (i < parts.size() && kept[i] == parts[i]) kept[i++] = 0;
        if (i == parts.size()) break;
        ++kept[i];
      }
    }
    level = std::move(next);
  }
  return level;
}

std::uint64_t class_product(const DiagonalClass& parts) {
  std::uint64_t p = 1;
  for (Entry e : parts) p *= std::uint64_t{e} + 1;
  return p;
}

}  // namespace

std::vector<GTMatrix> children(const GTMatrix& m, Entry next_alpha) {
  const std::size_t n = m.size();
  std::vector<Entry> ext(m.alpha().entries().begin(), m.alpha().entries().end());
  ext.push_back(next_alpha);
  const HookSumVector alpha(std::move(ext));

  TriMatrix work(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) work.at(i, j) = m.at(i, j);
  }
  std::vector<GTMatrix> out;
  const MatrixVisitor unused = [](const GTMatrix&) {};
  Generator gen(alpha, unused);
  gen.for_each_child(work, n,
                     [&] { out.emplace_back(GTMatrix::Trusted{}, work, alpha); });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t visit_family(const HookSumVector& alpha, const MatrixVisitor& visit,
                           const EnumerationOptions& options) {
  check_ceiling(count(alpha), options.ceiling, "enumeration");
  const unsigned jobs = resolve_jobs(options.jobs);
  std::atomic<std::uint64_t> visited{0};

  if (jobs == 1) {
    const MatrixVisitor counted = [&](const GTMatrix& m) {
      ++visited;
      visit(m);
    };
    Generator gen(alpha, counted);
    TriMatrix work = seed_matrix(alpha);
    gen.run(work, 1);
    return visited;
  }

  std::mutex visit_mutex;
  const MatrixVisitor delivered = [&](const GTMatrix& m) {
    ++visited;
    if (options.serialized) {
      std::lock_guard lock(visit_mutex);
      visit(m);
    } else {
      visit(m);
    }
  };
  auto frontier = build_frontier(alpha, std::size_t{8} * jobs);
  run_workers(frontier.size(), jobs, [&](std::size_t t) {
    Generator gen(alpha, delivered);
    TriMatrix work = frontier[t].work;
    gen.run(work, frontier[t].level);
  });
  return visited;
}

FamilyEnumeration enumerate_family(const HookSumVector& alpha, const EnumerationOptions& options) {
  check_ceiling(count(alpha), options.ceiling, "enumeration");
  const unsigned jobs = resolve_jobs(options.jobs);
  FamilyEnumeration out{alpha, {}, 0};

  if (jobs == 1) {
    visit_family(alpha, [&](const GTMatrix& m) { out.matrices.push_back(m); }, options);
  } else {
    auto frontier = build_frontier(alpha, std::size_t{8} * jobs);
    std::vector<std::vector<GTMatrix>> parts(frontier.size());
    run_workers(frontier.size(), jobs, [&](std::size_t t) {
      const MatrixVisitor collect = [&parts, t](const GTMatrix& m) { parts[t].push_back(m); };
      Generator gen(alpha, collect);
      TriMatrix work = frontier[t].work;
      gen.run(work, frontier[t].level);
    });
    for (auto& p : parts) {
      out.matrices.insert(out.matrices.end(), std::make_move_iterator(p.begin()),
                          std::make_move_iterator(p.end()));
    }
  }
  std::sort(out.matrices.begin(), out.matrices.end());
  assert(std::adjacent_find(out.matrices.begin(), out.matrices.end()) == out.matrices.end());
  out.count = out.matrices.size();
  return out;
}

FamilyEnumeration brute_force_enumerate(const HookSumVector& alpha,
                                        const EnumerationOptions& options) {
  const std::size_t n = alpha.size();
  FamilyEnumeration out{alpha, {}, 0};
  TriMatrix work(n);
  std::vector<std::vector<Entry>> bufs(n);
  for (std::size_t k = 0; k < n; ++k) bufs[k].resize(n - k);

  std::function<void(std::size_t)> fill_row = [&](std::size_t k) {
    if (k == n) {
      if (out.matrices.size() >= options.ceiling) {
        throw CeilingExceeded("brute-force enumeration exceeded the ceiling of " +
                              std::to_string(options.ceiling) + " matrices");
      }
      out.matrices.emplace_back(GTMatrix::Trusted{}, work, alpha);
      return;
    }
    std::uint64_t target = alpha[k];
    for (std::size_t i = 0; i < k; ++i) target += work.at(i, k);
    compositions(target, n - k, bufs[k], 0, [&] {
      for (std::size_t j = k; j < n; ++j) work.at(k, j) = bufs[k][j - k];
      fill_row(k + 1);
    });
  };
  fill_row(0);
  out.count = out.matrices.size();
  return out;
}

BigInt count(const HookSumVector& alpha) {
  if (alpha.size() == 1) return 1;
  BigInt total = 0;
  for (const auto& [parts, mult] : diagonal_classes(alpha.prefix(alpha.size() - 1))) {
    total += mult * class_product(parts);
  }
  return total;
}

std::vector<std::pair<std::uint64_t, BigInt>> diagonal_product_distribution(
    const HookSumVector& alpha) {
  std::map<std::uint64_t, BigInt> dist;
  for (const auto& [parts, mult] : diagonal_classes(alpha)) dist[class_product(parts)] += mult;
  return {dist.begin(), dist.end()};
}

BigInt count_by_streaming(const HookSumVector& alpha, const EnumerationOptions& options) {
  if (alpha.size() == 1) return 1;
  const auto parent = alpha.prefix(alpha.size() - 1);
  check_ceiling(count(parent), options.ceiling, "streaming count");
  const std::size_t m = parent.size();
  const unsigned jobs = resolve_jobs(options.jobs);

  // Depth-first over diagonals only; every leaf is one matrix of T(parent).
  struct Walker {
    const HookSumVector& parent;
    std::size_t m;
    unsigned __int128 sum = 0;
    void walk(std::vector<Entry>& diag, std::size_t k) {
      if (k == m) {
        std::uint64_t p = 1;
        for (std::size_t i = 0; i < m; ++i) p *= std::uint64_t{diag[i]} + 1;
        sum += p;
        return;
      }
      std::vector<Entry> orig(diag.begin(), diag.begin() + k);
      std::vector<Entry> taken(k, 0);
      while (true) {
        std::uint64_t moved = 0;
        for (std::size_t i = 0; i < k; ++i) {
          diag[i] = orig[i] - taken[i];
          moved += taken[i];
        }
        diag[k] = static_cast<Entry>(parent[k] + moved);
        walk(diag, k + 1);
        std::size_t i = 0;
        while (i < k && taken[i] == orig[i]) taken[i++] = 0;
        if (i == k) break;
        ++taken[i];
      }
      std::copy(orig.begin(), orig.end(), diag.begin());
    }
  };

  auto to_big = [](unsigned __int128 v) {
    BigInt b = static_cast<std::uint64_t>(v >> 64);
    b <<= 64;
    b += static_cast<std::uint64_t>(v);
    return b;
  };

  // Split on the choices made at the first few levels.
  std::vector<std::vector<Entry>> frontier{{parent[0]}};
  while (frontier.size() < std::size_t{8} * jobs && frontier.front().size() < m) {
    std::vector<std::vector<Entry>> next;
    for (const auto& d : frontier) {
      const std::size_t k = d.size();
      std::vector<Entry> taken(k, 0);
      while (true) {
        std::vector<Entry> child(k + 1);
        std::uint64_t moved = 0;
        for (std::size_t i = 0; i < k; ++i) {
          child[i] = d[i] - taken[i];
          moved += taken[i];
        }
        child[k] = static_cast<Entry>(parent[k] + moved);
        next.push_back(std::move(child));
        std::size_t i = 0;
        while (i < k && taken[i] == d[i]) taken[i++] = 0;
        if (i == k) break;
        ++taken[i];
      }
    }
    frontier = std::move(next);
  }

  std::vector<unsigned __int128> partial(frontier.size(), 0);
  run_workers(frontier.size(), jobs, [&](std::size_t t) {
    Walker w{parent, m};
    std::vector<Entry> diag(m, 0);
    std::copy(frontier[t].begin(), frontier[t].end(), diag.begin());
    w.walk(diag, frontier[t].size());
    partial[t] = w.sum;
  });
  BigInt total = 0;
  for (auto p : partial) total += to_big(p);
  return total;
}

}  // namespace tesler
