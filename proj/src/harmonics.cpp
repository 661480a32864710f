#include "tesler/harmonics.hpp"

#include <mutex>
#include <thread>
#include <unordered_map>

namespace tesler {

HilbertResult hilbert_series(std::size_t n, const HilbertOptions& options) {
  if (n == 0) throw std::invalid_argument("hilbert_series needs n >= 1");
  if (n > options.max_n) {
    throw CeilingExceeded("hilbert_series(" + std::to_string(n) + ") is above the ceiling n = " +
                          std::to_string(options.max_n));
  }
  const auto alpha = ones_then_zeros(n, n);
  EnumerationOptions enum_opts;
  enum_opts.ceiling = UINT64_MAX;
  enum_opts.jobs = options.jobs;
  enum_opts.serialized = false;

  // One accumulator per worker thread; the merge is exact integer addition.
  std::mutex mutex;
  std::unordered_map<std::thread::id, WeightAccumulator> parts;
  visit_family(
      alpha,
      [&](const GTMatrix& m) {
        WeightAccumulator* acc;
        {
          std::lock_guard lock(mutex);
          acc = &parts[std::this_thread::get_id()];
        }
        acc->add(m);
      },
      enum_opts);

  WeightAccumulator total;
  for (const auto& [id, acc] : parts) total.merge(acc);
  HilbertResult out;
  out.n = n;
  out.series = total.finish();
  out.dimension = evaluate(out.series, 1, 1);
  return out;
}

IdentityCheck compare(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  IdentityCheck c;
  c.lhs = to_string(lhs);
  c.rhs = to_string(rhs);
  c.ok = lhs == rhs;
  if (!c.ok) {
    const auto diff = lhs - rhs;
    const auto& [e, v] = *diff.terms().begin();
    c.diff = "coefficient of q^" + std::to_string(e) + ": " + lhs.coeff(e).str() + " vs " +
             rhs.coeff(e).str();
  }
  return c;
}

IdentityCheck verify_inverse_specialization(const HilbertResult& h) {
  const int shift_by = static_cast<int>(h.n * (h.n - 1) / 2);
  const auto lhs = shift(specialize_t_inverse_q(h.series), shift_by);
  const auto rhs = q_integer(static_cast<unsigned>(h.n + 1)).pow(static_cast<unsigned>(h.n - 1));
  return compare(lhs, to_laurent(rhs));
}

IdentityCheck verify_t_zero_specialization(const HilbertResult& h) {
  return compare(to_laurent(specialize_t_zero(h.series)),
                 to_laurent(q_factorial(static_cast<unsigned>(h.n))));
}

PermutationTeslerSum verify_permutation_sum(std::size_t n, const EnumerationOptions& options) {
  if (n == 0) throw std::invalid_argument("verify_permutation_sum needs n >= 1");
  PermutationTeslerSum out;
  out.n = n;
  out.expected = boost::multiprecision::pow(BigInt(n + 1), static_cast<unsigned>(n - 1));
  EnumerationOptions serial = options;
  serial.jobs = 1;
  visit_family(
      ones_then_zeros(n, n),
      [&](const GTMatrix& m) {
        BigInt product = 1;
        std::size_t positive = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t in_row = 0;
          for (std::size_t j = i; j < n; ++j) {
            if (const Entry a = m.at(i, j); a > 0) {
              ++in_row;
              product *= a;
            }
          }
          if (in_row != 1) return;
          positive += in_row;
        }
        ++out.matrices;
        if (positive != n) out.all_weight_free = false;
        out.sum += product;
      },
      serial);
  return out;
}

}  // namespace tesler
