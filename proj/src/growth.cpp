#include "tesler/growth.hpp"

#include <algorithm>
#include <sstream>

#include "tesler/poset.hpp"

namespace tesler {
namespace {

using boost::multiprecision::pow;

BigInt power(std::uint64_t base, std::size_t e) {
  return pow(BigInt(base), static_cast<unsigned>(e));
}

BigInt tesler_count(std::size_t n) { return n == 0 ? BigInt(1) : count(ones_then_zeros(n, n)); }

NumericCheck equal(std::string name, BigInt lhs, BigInt rhs, bool applicable = true) {
  NumericCheck c{std::move(name), std::move(lhs), std::move(rhs), applicable, false};
  c.holds = applicable && c.lhs == c.rhs;
  return c;
}

NumericCheck at_most(std::string name, BigInt lhs, BigInt rhs, bool applicable = true) {
  NumericCheck c{std::move(name), std::move(lhs), std::move(rhs), applicable, false};
  c.holds = applicable && c.lhs <= c.rhs;
  return c;
}

std::string str(const BigInt& v) { return v.str(); }

}  // namespace

BigInt ArmstrongPolynomial::coefficient(std::uint64_t degree) const {
  auto it = dist.find(degree);
  return it == dist.end() ? BigInt(0) : it->second;
}

BigInt ArmstrongPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& [d, c] : dist) s += c;
  return s;
}

BigInt ArmstrongPolynomial::derivative_at_one() const {
  BigInt s = 0;
  for (const auto& [d, c] : dist) s += c * d;
  return s;
}

UniPoly ArmstrongPolynomial::polynomial() const {
  UniPoly p;
  for (const auto& [d, c] : dist) p.add_term(static_cast<int>(d), c);
  return p;
}

ArmstrongPolynomial armstrong_polynomial(const HookSumVector& alpha,
                                         const EnumerationOptions& options) {
  std::map<std::uint64_t, std::uint64_t> tally;
  EnumerationOptions serial = options;
  serial.jobs = 1;
  visit_family(alpha, [&](const GTMatrix& m) { ++tally[diagonal_product(m)]; }, serial);
  ArmstrongPolynomial a{alpha, {}};
  for (const auto& [d, c] : tally) a.dist[d] = c;
  return a;
}

ArmstrongPolynomial armstrong_polynomial_by_classes(const HookSumVector& alpha) {
  ArmstrongPolynomial a{alpha, {}};
  for (auto& [d, c] : diagonal_product_distribution(alpha)) a.dist[d] += c;
  return a;
}

std::string to_string(const ArmstrongPolynomial& a) { return to_string(a.polynomial()); }

bool CoefficientReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const NumericCheck& c) { return !c.applicable || c.holds; });
}

CoefficientReport verify_coefficient_identities(std::size_t n, const EnumerationOptions& options) {
  if (n == 0) throw std::invalid_argument("Armstrong polynomials start at n = 1");
  const auto alpha = ones_then_zeros(n, n);
  CoefficientReport r;
  r.n = n;
  const BigInt total = count(alpha);
  r.enumerated = total <= options.ceiling;
  const auto a = r.enumerated ? armstrong_polynomial(alpha, options)
                              : armstrong_polynomial_by_classes(alpha);
  const std::uint64_t top = std::uint64_t{1} << n;
  r.checks.push_back(equal("[q^" + std::to_string(top) + "] = 1", a.coefficient(top), 1));
  r.checks.push_back(equal("[q^" + std::to_string(n + 1) + "] = T(1^" + std::to_string(n - 1) + ")",
                           a.coefficient(n + 1), tesler_count(n - 1)));
  const bool part3 = n >= 2;
  const std::uint64_t mid = part3 ? 3 * (std::uint64_t{1} << (n - 2)) : 0;
  r.checks.push_back(equal("[q^" + std::to_string(mid) + "] = 2^n - n - 1",
                           part3 ? a.coefficient(mid) : BigInt(0),
                           part3 ? power(2, n) - n - 1 : BigInt(0), part3));
  r.checks.push_back(equal("A_n(1) = T(1^n)", a.at_one(), total));
  r.checks.push_back(equal("A_n'(1) = T(1^{n+1})", a.derivative_at_one(), tesler_count(n + 1)));
  return r;
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt double_factorial_odd(std::size_t m) {
  BigInt f = 1;
  for (std::size_t i = 1; i <= m; ++i) f *= 2 * i - 1;
  return f;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt b = 1;
  for (std::size_t i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

BigInt catalan(std::size_t i) { return binomial(2 * i, i) / (i + 1); }

bool BoundsReport::inner_holds() const { return inner_applicable() && links[1].holds && links[2].holds; }

BoundsReport verify_bounds(std::size_t n) {
  if (n < 2) throw std::invalid_argument("verify_bounds needs n >= 2");
  BoundsReport r;
  r.n = n;
  r.value = tesler_count(n);
  const BigInt low = double_factorial_odd(n - 1);  // (2n-3)!!
  const bool upper = n >= 4;
  const BigInt high =
      upper ? power(2, static_cast<std::size_t>(binomial(n - 2, 2)) - 1) * power(3, n) : BigInt(0);
  const BigInt outer = power(2, static_cast<std::size_t>(binomial(n, 2)));
  r.links.push_back(at_most("n! <= (2n-3)!!", factorial(n), low));
  r.links.push_back(at_most("(2n-3)!! <= T(1^n)", low, r.value));
  r.links.push_back(at_most("T(1^n) <= 2^{C(n-2,2)-1} 3^n", r.value, high, upper));
  r.links.push_back(at_most("2^{C(n-2,2)-1} 3^n <= 2^{C(n,2)}", high, outer, upper));
  return r;
}

std::string FamilySpec::id() const {
  switch (kind) {
    case FamilyKind::single_one: return "single-one";
    case FamilyKind::staircase: return "staircase";
    case FamilyKind::ones_then_zeros: return "ones-then-zeros:" + std::to_string(k);
  }
  return "";
}

std::size_t FamilySpec::first_n() const { return kind == FamilyKind::ones_then_zeros ? k : 1; }

HookSumVector FamilySpec::alpha(std::size_t n) const {
  switch (kind) {
    case FamilyKind::single_one: return ones_then_zeros(1, n);
    case FamilyKind::ones_then_zeros: return ones_then_zeros(k, n);
    case FamilyKind::staircase: {
      std::vector<Entry> a(n);
      for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<Entry>(i + 1);
      return HookSumVector(std::move(a));
    }
  }
  throw std::logic_error("unknown family");
}

FamilySpec parse_family(const std::string& text) {
  if (text == "single-one") return {FamilyKind::single_one, 1};
  if (text == "staircase") return {FamilyKind::staircase, 0};
  const std::string prefix = "ones-then-zeros:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string k = text.substr(prefix.size());
    if (!k.empty() && std::all_of(k.begin(), k.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const auto v = std::stoul(k);
      if (v >= 1) return {FamilyKind::ones_then_zeros, v};
    }
  }
  throw std::invalid_argument("unknown family '" + text +
                              "' (expected single-one, staircase or ones-then-zeros:K)");
}

bool SequenceReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SequenceCheck& c) { return c.discrepancy || c.holds; });
}

const BigInt& SequenceReport::value(std::size_t n) const {
  for (const auto& row : rows) {
    if (row.n == n) return row.value;
  }
  throw std::out_of_range("no value for n = " + std::to_string(n));
}

std::vector<BigInt> series_expansion(const std::vector<BigInt>& num, const std::vector<BigInt>& den,
                                     std::size_t order) {
  if (den.empty() || (den[0] != 1 && den[0] != -1)) {
    throw std::invalid_argument("series_expansion needs a denominator with constant term +-1");
  }
  std::vector<BigInt> c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    BigInt v = i < num.size() ? num[i] : BigInt(0);
    for (std::size_t j = 1; j <= i && j < den.size(); ++j) v -= den[j] * c[i - j];
    c[i] = den[0] * v;
  }
  return c;
}

namespace {

void add_row(SequenceReport& rep, std::size_t n, const BigInt& value, std::optional<BigInt> low,
             std::optional<BigInt> high) {
  SequenceRow row{n, value, std::move(low), std::move(high), "n/a"};
  if (row.bound_low || row.bound_high) {
    const bool ok = (!row.bound_low || *row.bound_low <= value) &&
                    (!row.bound_high || value <= *row.bound_high);
    row.verdict = ok ? "ok" : "violated";
  }
  rep.rows.push_back(std::move(row));
}

void series_check(SequenceReport& rep, const std::string& name, const std::vector<BigInt>& series,
                  std::size_t offset, bool expect_match) {
  SequenceCheck c{name, true, !expect_match, ""};
  std::ostringstream mismatches;
  for (const auto& row : rep.rows) {
    const std::size_t idx = row.n - offset;
    if (idx >= series.size()) continue;
    if (series[idx] != row.value) {
      if (c.holds) mismatches << "first mismatch ";
      else mismatches << "; ";
      mismatches << "[x^" << idx << "] = " << series[idx] << " vs " << row.value;
      c.holds = false;
    }
  }
  c.detail = c.holds ? "matches every computed term" : mismatches.str();
  rep.checks.push_back(std::move(c));
}

}  // namespace

SequenceReport family_sequence(const FamilySpec& family, std::size_t n_max,
                               const EnumerationOptions& options) {
  const std::size_t first = family.first_n();
  if (n_max < first) {
    throw std::invalid_argument("n_max must be at least " + std::to_string(first) + " for " +
                                family.id());
  }
  SequenceReport rep;
  rep.family = family.id();

  std::vector<BigInt> values(n_max + 1);
  std::size_t oracle_upto = 0;
  bool oracle_ok = true;
  for (std::size_t n = first; n <= n_max; ++n) {
    const auto alpha = family.alpha(n);
    values[n] = count(alpha);
    if (values[n] <= options.ceiling) {
      const std::uint64_t visited = visit_family(alpha, [](const GTMatrix&) {}, options);
      if (visited != values[n]) oracle_ok = false;
      oracle_upto = n;
    }
  }
  rep.checks.push_back({"enumeration agrees with count() for n <= " + std::to_string(oracle_upto),
                        oracle_ok, false, ""});

  switch (family.kind) {
    case FamilyKind::single_one:
    case FamilyKind::ones_then_zeros: {
      const std::size_t k = family.kind == FamilyKind::single_one ? 1 : family.k;
      if (k == 1) {
        bool all = true;
        for (std::size_t n = first; n <= n_max; ++n) {
          const BigInt expect = power(2, n - 1);
          add_row(rep, n, values[n], expect, expect);
          all = all && values[n] == expect;
        }
        rep.checks.push_back({"T(1,0^{n-1}) = 2^{n-1}", all, false, ""});
        series_check(rep, "1/(1-2x) at x^{n-1}", series_expansion({1}, {1, -2}, n_max), 1, true);
        break;
      }
      if (k == 2) {
        for (std::size_t n = first; n <= n_max; ++n) {
          add_row(rep, n, values[n], n >= 5 ? std::optional<BigInt>(power(3, n - 1)) : std::nullopt,
                  std::nullopt);
        }
        bool lower = true;
        for (std::size_t n = 5; n <= n_max; ++n) lower = lower && values[n] >= power(3, n - 1);
        if (n_max >= 5) {
          rep.checks.push_back({"t_n >= 3^{n-1} for 5 <= n <= " + std::to_string(n_max), lower, false, ""});
          rep.checks.push_back({"t_5 = 90", values[5] == 90, false, "t_5 = " + str(values[5])});
        }
        for (std::size_t n = 3; n + 1 <= n_max; ++n) {
          const BigInt predicted = 5 * values[n] - 5 * values[n - 1];
          rep.checks.push_back({"t_" + std::to_string(n + 1) + " = 5 t_" + std::to_string(n) +
                                    " - 5 t_" + std::to_string(n - 1),
                                predicted == values[n + 1], false,
                                str(predicted) + " vs " + str(values[n + 1])});
        }
        if (n_max >= 3) {
          const BigInt predicted = 5 * values[2] - 5 * BigInt(1);
          rep.checks.push_back({"t_3 from the initial conditions t_1 = 1, t_2 = 2",
                                predicted == values[3], true,
                                "recurrence gives " + str(predicted) + ", enumeration gives " +
                                    str(values[3])});
        }
        // (a_n, b_n): matrices with dpro 3 and 4.
        std::vector<BigInt> a(n_max + 1), b(n_max + 1);
        bool support = true;
        for (std::size_t n = 2; n <= n_max; ++n) {
          for (const auto& [d, c] : diagonal_product_distribution(family.alpha(n))) {
            if (d == 3) a[n] = c;
            else if (d == 4) b[n] = c;
            else support = false;
          }
        }
        rep.checks.push_back({"every dpro is 3 or 4", support, false, ""});
        bool coeff = true;
        std::string first_bad;
        for (std::size_t n = 3; n <= n_max; ++n) {
          const bool ok = a[n] == 2 * a[n - 1] + b[n - 1] && b[n] == a[n - 1] + 3 * b[n - 1];
          if (!ok && first_bad.empty()) first_bad = "n = " + std::to_string(n);
          coeff = coeff && ok;
        }
        rep.checks.push_back({"(a_n, b_n) = (2a_{n-1} + b_{n-1}, a_{n-1} + 3b_{n-1}) for 3 <= n <= " +
                                  std::to_string(n_max),
                              coeff, false, first_bad});
        bool next = true;
        for (std::size_t n = 2; n + 1 <= n_max; ++n) next = next && values[n + 1] == 3 * a[n] + 4 * b[n];
        rep.checks.push_back({"t_{n+1} = 3a_n + 4b_n", next, false, ""});
        series_check(rep, "(1-4x-2x^2)/(1-5x+5x^2) at x^n",
                     series_expansion({1, -4, -2}, {1, -5, 5}, n_max), 0, false);
        break;
      }
      for (std::size_t n = first; n <= n_max; ++n) {
        add_row(rep, n, values[n], power(k + 1, n - 1), std::nullopt);
      }
      break;
    }
    case FamilyKind::staircase: {
      bool all = true;
      BigInt product = 1;
      for (std::size_t n = 1; n <= n_max; ++n) {
        product *= catalan(n);
        add_row(rep, n, values[n], product, product);
        all = all && values[n] == product;
      }
      rep.checks.push_back({"T(1,2,...,n) = C_1 C_2 ... C_n", all, false, ""});
      break;
    }
  }
  return rep;
}

ParkingProbe parking_bound_probe(std::size_t k, std::size_t n) {
  if (k == 0 || n < k) throw std::invalid_argument("parking_bound_probe needs 1 <= k <= n");
  ParkingProbe p{k, n, count(ones_then_zeros(k, n)), power(k + 1, n - 1), false};
  p.holds = p.value >= p.bound;
  return p;
}

std::optional<std::size_t> empirical_threshold(std::size_t k, std::size_t n_max) {
  std::optional<std::size_t> threshold;
  for (std::size_t n = n_max; n >= k; --n) {
    if (!parking_bound_probe(k, n).holds) break;
    threshold = n;
    if (n == k) break;
  }
  return threshold;
}

MobiusProbe mobius_bound_probe(std::size_t n, const EnumerationOptions& options) {
  if (n == 0) throw std::invalid_argument("mobius_bound_probe needs n >= 1");
  const auto tp = build_poset(ones_then_zeros(n, n), options);
  const auto mu = mobius(tp.poset);
  MobiusProbe p;
  p.n = n;
  for (auto m : mu) p.max_abs_mu = std::max(p.max_abs_mu, m < 0 ? -m : m);
  p.factorial_bound = factorial(n);
  p.within_factorial = BigInt(p.max_abs_mu) <= p.factorial_bound;
  const BigInt top = power(2, static_cast<std::size_t>(binomial(n, 2)));
  p.implied_lower = (top + p.max_abs_mu - 1) / p.max_abs_mu;
  p.value = tp.matrices.size();
  p.meets_implied = p.value >= p.implied_lower;
  return p;
}

}  // namespace tesler
