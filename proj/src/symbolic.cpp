#include "tesler/symbolic.hpp"

#include <algorithm>
#include <sstream>

namespace tesler {
namespace {

std::string monomial_text(int qe, int te) {
  std::string s;
  auto var = [&](const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  };
  var("q", qe);
  var("t", te);
  return s;
}

struct Printable {
  BigInt coeff;
  std::string mono;  // empty for the constant monomial
};

std::string join_terms(const std::vector<Printable>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mono.empty()) {
      os << mag;
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

// One synthetic division by (q-1) of a q-polynomial given densely from
// degree 0 upward; returns false when the remainder is nonzero.
bool synthetic_divide(std::vector<BigInt>& c) {
  if (c.empty()) return true;
  // p(q) = (q-1) s(q) + r; s_{d-1} = c_d, s_{i-1} = c_i + s_i, r = c_0 + s_0.
  const std::size_t d = c.size() - 1;
  std::vector<BigInt> s(d);
  BigInt carry = 0;
  for (std::size_t i = d; i >= 1; --i) {
    carry += c[i];
    s[i - 1] = carry;
  }
  if (c[0] + carry != 0) return false;
  c = std::move(s);
  return true;
}

}  // namespace

UniPoly uq(int exponent) { return UniPoly::monomial(exponent); }
BiPoly bq(int exponent) { return BiPoly::monomial({exponent, 0}); }
BiPoly bt(int exponent) { return BiPoly::monomial({0, exponent}); }

UniPoly q_integer(unsigned n) {
  UniPoly p;
  for (unsigned i = 0; i < n; ++i) p.add_term(static_cast<int>(i), 1);
  return p;
}

UniPoly q_factorial(unsigned n) {
  UniPoly p(1);
  for (unsigned i = 1; i <= n; ++i) p *= q_integer(i);
  return p;
}

BiPoly qt_bracket(unsigned b) {
  if (b == 0) throw std::invalid_argument("[b]_{q,t} requires b >= 1");
  BiPoly p;
  for (unsigned i = 0; i < b; ++i) p.add_term({static_cast<int>(b - 1 - i), static_cast<int>(i)}, 1);
  return p;
}

int degree(const UniPoly& p) { return p.is_zero() ? -1 : p.lead_exponent(); }

std::vector<BigInt> coefficients(const UniPoly& p) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree(p) + 1));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e)] = v;
  return c;
}

UniPoly from_coefficients(std::span<const BigInt> coeffs) {
  UniPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<int>(i), coeffs[i]);
  return p;
}

UniPoly divide_by_q_minus_one(const UniPoly& p, unsigned k) {
  auto c = coefficients(p);
  for (unsigned i = 0; i < k; ++i) {
    if (!synthetic_divide(c)) throw InexactDivision("(q-1) does not divide the polynomial");
  }
  return from_coefficients(c);
}

BiPoly divide_by_q_minus_one(const BiPoly& p, unsigned k) {
  // Divide each t-slice, viewed as a polynomial in q, independently.
  std::map<int, std::vector<BigInt>> slices;
  for (const auto& [e, v] : p.terms()) {
    auto& c = slices[e.t];
    if (c.size() <= static_cast<std::size_t>(e.q)) c.resize(static_cast<std::size_t>(e.q) + 1);
    c[static_cast<std::size_t>(e.q)] = v;
  }
  BiPoly out;
  for (auto& [te, c] : slices) {
    for (unsigned i = 0; i < k; ++i) {
      if (!synthetic_divide(c)) {
        throw InexactDivision("(q-1)^" + std::to_string(k) + " does not divide the polynomial");
      }
    }
    for (std::size_t i = 0; i < c.size(); ++i) out.add_term({static_cast<int>(i), te}, c[i]);
  }
  return out;
}

std::pair<unsigned, UniPoly> split_q_minus_one(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no finite (q-1)-valuation");
  auto c = coefficients(p);
  unsigned k = 0;
  while (true) {
    auto trial = c;
    if (!synthetic_divide(trial)) break;
    c = std::move(trial);
    ++k;
  }
  return {k, from_coefficients(c)};
}

UniPoly derivative(const UniPoly& p) {
  UniPoly d;
  for (const auto& [e, v] : p.terms()) {
    if (e > 0) d.add_term(e - 1, v * e);
  }
  return d;
}

BigInt evaluate(const UniPoly& p, const BigInt& q) {
  BigInt acc = 0;
  int prev = degree(p);
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    for (int i = it->first; i < prev; ++i) acc *= q;
    acc += it->second;
    prev = it->first;
  }
  for (int i = 0; i < prev; ++i) acc *= q;
  return acc;
}

BigInt evaluate(const BiPoly& p, const BigInt& q, const BigInt& t) {
  BigInt acc = 0;
  for (const auto& [e, v] : p.terms()) {
    acc += v * boost::multiprecision::pow(q, static_cast<unsigned>(e.q)) *
           boost::multiprecision::pow(t, static_cast<unsigned>(e.t));
  }
  return acc;
}

UniPoly specialize_t_zero(const BiPoly& p) {
  UniPoly out;
  for (const auto& [e, v] : p.terms()) {
    if (e.t == 0) out.add_term(e.q, v);
  }
  return out;
}

LaurentPoly specialize_t_inverse_q(const BiPoly& p) {
  LaurentPoly out;
  for (const auto& [e, v] : p.terms()) out.add_term(e.q - e.t, v);
  return out;
}

BiPoly swap_variables(const BiPoly& p) {
  BiPoly out;
  for (const auto& [e, v] : p.terms()) out.add_term({e.t, e.q}, v);
  return out;
}

LaurentPoly to_laurent(const UniPoly& p) {
  LaurentPoly out;
  for (const auto& [e, v] : p.terms()) out.add_term(e, v);
  return out;
}

LaurentPoly shift(const LaurentPoly& p, int k) {
  LaurentPoly out;
  for (const auto& [e, v] : p.terms()) out.add_term(e + k, v);
  return out;
}

std::string to_string(const UniPoly& p) {
  std::vector<Printable> terms;
  for (const auto& [e, v] : p.terms()) terms.push_back({v, monomial_text(e, 0)});
  return join_terms(terms);
}

std::string to_string(const LaurentPoly& p) {
  std::vector<Printable> terms;
  for (const auto& [e, v] : p.terms()) terms.push_back({v, monomial_text(e, 0)});
  return join_terms(terms);
}

std::string to_string(const BiPoly& p) {
  std::vector<std::pair<Exp2, BigInt>> sorted(p.terms().begin(), p.terms().end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first.q + a.first.t;
    const int db = b.first.q + b.first.t;
    if (da != db) return da < db;
    return a.first.q > b.first.q;
  });
  std::vector<Printable> terms;
  for (const auto& [e, v] : sorted) terms.push_back({v, monomial_text(e.q, e.t)});
  return join_terms(terms);
}

std::string factored_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  auto [k, rest] = split_q_minus_one(p);
  const std::string power = k == 0 ? "" : k == 1 ? "(q-1)" : "(q-1)^" + std::to_string(k);
  if (rest.term_count() > 1) {
    return power.empty() ? to_string(rest) : power + "*(" + to_string(rest) + ")";
  }
  const auto& [e, c] = *rest.terms().begin();
  std::vector<std::string> factors;
  if (e != 0) factors.push_back(monomial_text(e, 0));
  if (!power.empty()) factors.push_back(power);
  std::string body;
  for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
  if (body.empty()) return c.str();
  if (c == 1) return body;
  if (c == -1) return "-" + body;
  return c.str() + "*" + body;
}

QtWeight weight(const GTMatrix& m) {
  const std::size_t n = m.size();
  BiPoly numer(1);
  unsigned positive = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool row_has_entry = false;
    for (std::size_t j = i; j < n; ++j) {
      if (const Entry a = m.at(i, j); a > 0) {
        ++positive;
        row_has_entry = true;
        if (a > 1) numer *= qt_bracket(a);
      }
    }
    if (!row_has_entry) {
      throw UnsupportedInput("weight is undefined for a matrix with an all-zero row");
    }
  }
  const unsigned e = positive - static_cast<unsigned>(n);
  if (e > 0) numer *= (BiPoly(1) - bt()).pow(e);
  return {std::move(numer), e};
}

BiPoly combine_weight_groups(const std::map<unsigned, BiPoly>& numer_by_e,
                             MConvention convention) {
  if (numer_by_e.empty()) return {};
  const BiPoly q_minus_one = bq() - BiPoly(1);
  BiPoly total;
  if (convention == MConvention::product) {
    for (const auto& [e, numer] : numer_by_e) total += numer * q_minus_one.pow(e);
    return total;
  }
  const unsigned e_max = numer_by_e.rbegin()->first;
  for (const auto& [e, numer] : numer_by_e) total += numer * q_minus_one.pow(e_max - e);
  return divide_by_q_minus_one(total, e_max);
}

BiPoly sum_weights(std::span<const QtWeight> weights, MConvention convention) {
  std::map<unsigned, BiPoly> groups;
  for (const auto& w : weights) groups[w.e] += w.numer;
  return combine_weight_groups(groups, convention);
}

void WeightAccumulator::add(const GTMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Entry> big;
  unsigned positive = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool row_has_entry = false;
    for (std::size_t j = i; j < n; ++j) {
      if (const Entry a = m.at(i, j); a > 0) {
        ++positive;
        row_has_entry = true;
        if (a > 1) big.push_back(a);
      }
    }
    if (!row_has_entry) {
      throw UnsupportedInput("weight is undefined for a matrix with an all-zero row");
    }
  }
  std::sort(big.begin(), big.end());
  ++tally_[{positive - static_cast<unsigned>(n), std::move(big)}];
  ++matrices_;
}

void WeightAccumulator::merge(const WeightAccumulator& other) {
  for (const auto& [sig, c] : other.tally_) tally_[sig] += c;
  matrices_ += other.matrices_;
}

BiPoly WeightAccumulator::finish(MConvention convention) const {
  std::map<unsigned, BiPoly> groups;
  std::map<Entry, BiPoly> brackets;
  for (const auto& [sig, c] : tally_) {
    BiPoly term{BigInt(c)};
    for (Entry a : sig.second) {
      auto it = brackets.find(a);
      if (it == brackets.end()) it = brackets.emplace(a, qt_bracket(a)).first;
      term *= it->second;
    }
    groups[sig.first] += term;
  }
  const BiPoly one_minus_t = BiPoly(1) - bt();
  for (auto& [e, p] : groups) p *= one_minus_t.pow(e);
  return combine_weight_groups(groups, convention);
}

}  // namespace tesler
