#pragma once

// Exact integer polynomials: univariate in q, Laurent in q, and bivariate in
// (q, t). Coefficients are arbitrary precision; zero coefficients are never
// stored, so structural equality is polynomial equality.

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tesler/core.hpp"

namespace tesler {

class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Exp2 {
  int q = 0;
  int t = 0;
  auto operator<=>(const Exp2&) const = default;
  friend Exp2 operator+(Exp2 a, Exp2 b) { return {a.q + b.q, a.t + b.t}; }
  friend Exp2 operator-(Exp2 a, Exp2 b) { return {a.q - b.q, a.t - b.t}; }
};

namespace detail {
inline bool nonnegative(int e) { return e >= 0; }
inline bool nonnegative(Exp2 e) { return e.q >= 0 && e.t >= 0; }
inline bool divides(int a, int b) { return a <= b; }
inline bool divides(Exp2 a, Exp2 b) { return a.q <= b.q && a.t <= b.t; }
}  // namespace detail

template <class Exp, bool Laurent = false>
class SparsePoly {
 public:
  using Exponent = Exp;
  using Terms = std::map<Exp, BigInt>;

  SparsePoly() = default;
  SparsePoly(int constant) : SparsePoly(BigInt(constant)) {}
  SparsePoly(const BigInt& constant) {
    if (constant != 0) terms_.emplace(Exp{}, constant);
  }

  static SparsePoly monomial(Exp e, BigInt c = 1) {
    if constexpr (!Laurent) {
      if (!detail::nonnegative(e)) {
        throw std::invalid_argument("negative exponent in an ordinary polynomial");
      }
    }
    SparsePoly p;
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  BigInt coeff(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Largest exponent in the map order (lexicographic for Exp2).
  Exp lead_exponent() const {
    if (is_zero()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.rbegin()->first;
  }

  void add_term(Exp e, const BigInt& c) {
    if (c == 0) return;
    if constexpr (!Laurent) {
      if (!detail::nonnegative(e)) {
        throw std::invalid_argument("negative exponent in an ordinary polynomial");
      }
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly operator-() const {
    SparsePoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }
  SparsePoly& operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }

  SparsePoly pow(unsigned k) const {
    SparsePoly result(1);
    SparsePoly base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  bool operator==(const SparsePoly&) const = default;

 private:
  Terms terms_;
};

using UniPoly = SparsePoly<int, false>;
using LaurentPoly = SparsePoly<int, true>;
using BiPoly = SparsePoly<Exp2, false>;

/// Exact quotient a / b in the polynomial ring; throws InexactDivision when b
/// does not divide a. Uses the lexicographic term order (q before t).
template <class Exp>
SparsePoly<Exp, false> exact_divide(const SparsePoly<Exp, false>& a,
                                    const SparsePoly<Exp, false>& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const Exp lb = b.lead_exponent();
  const BigInt cb = b.coeff(lb);
  SparsePoly<Exp, false> rem = a;
  SparsePoly<Exp, false> quot;
  while (!rem.is_zero()) {
    const Exp lr = rem.lead_exponent();
    const BigInt cr = rem.coeff(lr);
    if (!detail::divides(lb, lr) || cr % cb != 0) {
      throw InexactDivision("polynomial division leaves a remainder");
    }
    auto step = SparsePoly<Exp, false>::monomial(lr - lb, cr / cb);
    quot += step;
    rem -= step * b;
  }
  return quot;
}

// Constructors for the variables and the usual q-analogs.
UniPoly uq(int exponent = 1);
BiPoly bq(int exponent = 1);
BiPoly bt(int exponent = 1);

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
UniPoly q_integer(unsigned n);
/// [n]_q! = [1]_q [2]_q ... [n]_q.
UniPoly q_factorial(unsigned n);
/// [b]_{q,t} = sum_{i<b} q^(b-1-i) t^i; b >= 1.
BiPoly qt_bracket(unsigned b);

/// Division by (q-1)^k, exact or InexactDivision.
UniPoly divide_by_q_minus_one(const UniPoly& p, unsigned k = 1);
BiPoly divide_by_q_minus_one(const BiPoly& p, unsigned k = 1);

/// Largest k with (q-1)^k | p (p nonzero), and the cofactor.
std::pair<unsigned, UniPoly> split_q_minus_one(const UniPoly& p);

int degree(const UniPoly& p);  // -1 for zero
/// Dense coefficient vector c_0..c_deg.
std::vector<BigInt> coefficients(const UniPoly& p);
UniPoly from_coefficients(std::span<const BigInt> coeffs);
UniPoly derivative(const UniPoly& p);

BigInt evaluate(const UniPoly& p, const BigInt& q);
BigInt evaluate(const BiPoly& p, const BigInt& q, const BigInt& t);

// Substitutions.
UniPoly specialize_t_zero(const BiPoly& p);
LaurentPoly specialize_t_inverse_q(const BiPoly& p);
BiPoly swap_variables(const BiPoly& p);

LaurentPoly to_laurent(const UniPoly& p);
/// q^k * p.
LaurentPoly shift(const LaurentPoly& p, int k);

// Canonical text: ascending total degree, ties broken by descending q power.
std::string to_string(const UniPoly& p);
std::string to_string(const LaurentPoly& p);
std::string to_string(const BiPoly& p);

/// Factored display such as "q*(q-1)^3" or "(q-1)^4*(1 + 3*q - ...)".
std::string factored_string(const UniPoly& p);

/// How the factor (-M)^e of a weight is applied to its numerator.
/// product:  M = (1-q)(1-t), so (-M)^e = (1-t)^e (q-1)^e. Gives the Hilbert series.
/// quotient: M = (t-1)/(q-1), so (-M)^e = (1-t)^e / (q-1)^e. Already fails to be
///           a polynomial sum at n = 3; kept to document that.
enum class MConvention { product, quotient };

/// One matrix's weight as numer and e = #{a_ij > 0} - n, with
/// numer = (1-t)^e * prod_{a_ij > 0} [a_ij]_{q,t}. The weight itself is
/// numer * (q-1)^e or numer / (q-1)^e depending on the convention.
struct QtWeight {
  BiPoly numer;
  unsigned e = 0;
};

class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws UnsupportedInput for a matrix with an all-zero row.
QtWeight weight(const GTMatrix& m);

/// Sum of weights. Under the quotient convention everything is brought over
/// (q-1)^{e_max} and divided exactly; InexactDivision if that fails.
BiPoly sum_weights(std::span<const QtWeight> weights,
                   MConvention convention = MConvention::product);

/// Streaming form of sum_weights. Matrices are tallied by signature (e and
/// the sorted entries above 1); bracket products are expanded once per
/// signature in finish(). Merging is exact, so the result does not depend on
/// the order of add/merge calls.
class WeightAccumulator {
 public:
  void add(const GTMatrix& m);
  void merge(const WeightAccumulator& other);
  BiPoly finish(MConvention convention = MConvention::product) const;
  std::uint64_t matrices() const { return matrices_; }

 private:
  std::map<std::pair<unsigned, std::vector<Entry>>, std::uint64_t> tally_;
  std::uint64_t matrices_ = 0;
};

/// Sum over e of numer_e with (q-1)^e applied per the convention.
BiPoly combine_weight_groups(const std::map<unsigned, BiPoly>& numer_by_e,
                             MConvention convention = MConvention::product);

}  // namespace tesler
