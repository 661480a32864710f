#include "tesler/quotient.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tesler {
namespace {

std::string pair_text(const QuotientPoset& qp, std::size_t x) {
  return "(A=[" + qp.base.matrices[qp.base_index(x)].matrix().flat_label() + "], S=[" +
         qp.shifts.maps[qp.shift_index(x)].s.matrix().flat_label() + "])";
}

ElementSet generated_ideal(const QuotientPoset& qp, const std::vector<ElementSet>& ideals,
                           std::size_t cls) {
  ElementSet lower(qp.product.size());
  for (std::size_t x : qp.classes[cls]) lower |= ideals[x];
  return lower;
}

}  // namespace

TriMatrix shift_embed(const TriMatrix& s, std::size_t n) {
  const std::size_t r = s.size();
  if (r > n) {
    throw std::invalid_argument("shift map of size " + std::to_string(r) +
                                " does not fit in size " + std::to_string(n));
  }
  TriMatrix out(n);
  const std::size_t off = n - r;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) out.at(i + off, j + off) = s.at(i, j);
  }
  return out;
}

TriMatrix shift_embed(const ShiftMap& s, std::size_t n) { return shift_embed(s.s.matrix(), n); }

ShiftMapPoset shift_map_poset(std::size_t r) {
  if (r == 0) throw std::invalid_argument("shift maps need r >= 1");
  auto tesler = build_poset(ones_then_zeros(1, r));
  std::vector<ShiftMap> maps;
  maps.reserve(tesler.matrices.size());
  for (const auto& m : tesler.matrices) maps.push_back({r, m, subset_map(m)});
  return {std::move(maps), std::move(tesler)};
}

HookSumVector QuotientPoset::target_alpha() const { return alpha.with(position, alpha[position] + 1); }

QuotientPoset quotient_by_sum(const HookSumVector& alpha, std::size_t r,
                              const EnumerationOptions& options) {
  const std::size_t n = alpha.size();
  if (r == 0 || r > n) {
    throw std::invalid_argument("block size r must satisfy 1 <= r <= n");
  }
  const std::size_t position = n - r;
  if (alpha[position] != 0) {
    throw std::invalid_argument("quotient_by_sum requires alpha_{n-r+1} = 0, but alpha_" +
                                std::to_string(position + 1) + " = " +
                                std::to_string(alpha[position]));
  }
  auto base = build_poset(alpha, options);
  auto shifts = shift_map_poset(r);
  Poset prod = product(base.poset, shifts.tesler.poset);

  const std::size_t m = shifts.maps.size();
  std::vector<TriMatrix> embedded;
  for (const auto& s : shifts.maps) embedded.push_back(shift_embed(s, n));

  std::map<TriMatrix, std::vector<std::size_t>> groups;
  for (std::size_t a = 0; a < base.matrices.size(); ++a) {
    for (std::size_t s = 0; s < m; ++s) {
      groups[base.matrices[a].matrix() + embedded[s]].push_back(a * m + s);
    }
  }
  std::vector<std::size_t> class_of(prod.size());
  std::vector<std::vector<std::size_t>> classes;
  std::vector<TriMatrix> witness;
  std::vector<std::string> labels;
  for (auto& [w, members] : groups) {
    for (std::size_t x : members) class_of[x] = classes.size();
    classes.push_back(std::move(members));
    labels.push_back(w.flat_label());
    witness.push_back(w);
  }

  std::vector<std::vector<std::size_t>> up(classes.size());
  for (std::size_t x = 0; x < prod.size(); ++x) {
    for (std::size_t y : prod.up(x)) {
      if (class_of[x] != class_of[y]) up[class_of[x]].push_back(class_of[y]);
    }
  }
  for (auto& u : up) {
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
  }
  Poset quotient(std::move(labels), std::move(up));

  return QuotientPoset{alpha,
                       r,
                       position,
                       std::move(base),
                       std::move(shifts),
                       std::move(prod),
                       std::move(class_of),
                       std::move(classes),
                       std::move(witness),
                       std::move(quotient)};
}

bool QuotientReport::all_passed() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionResult& c) { return c.passed; });
}

QuotientReport check_quotient_conditions(const QuotientPoset& qp) {
  const auto ideals = lower_ideals(qp.product);
  const auto mu = mobius(qp.product, ideals);
  const auto class_ideals = lower_ideals(qp.quotient);
  QuotientReport report;

  {
    ConditionResult c{"singleton bottom class", true, ""};
    const auto& bottom_class = qp.classes[qp.class_of[qp.product.bottom()]];
    if (bottom_class.size() != 1) {
      c.passed = false;
      c.witness = "bottom class has " + std::to_string(bottom_class.size()) + " members";
    }
    report.conditions.push_back(c);
  }

  {
    // X <= Y iff x <= y for some members; must agree with the closure of the
    // cover-induced class edges for the quotient to be a poset.
    ConditionResult c{"quotient order well-defined", true, ""};
    for (std::size_t X = 0; X < qp.classes.size() && c.passed; ++X) {
      ElementSet direct(qp.classes.size());
      for (std::size_t x : qp.classes[X]) {
        ideals[x].for_each([&](std::size_t y) { direct.insert(qp.class_of[y]); });
      }
      if (!(direct == class_ideals[X])) {
        c.passed = false;
        c.witness = "class [" + qp.witness[X].flat_label() +
                    "] has a different lower set under the member-wise order";
      }
    }
    report.conditions.push_back(c);
  }

  {
    ConditionResult c{"homogeneity", true, ""};
    for (std::size_t X = 0; X < qp.classes.size() && c.passed; ++X) {
      class_ideals[X].for_each([&](std::size_t Y) {
        if (!c.passed) return;
        for (std::size_t x : qp.classes[X]) {
          const bool found = std::any_of(qp.classes[Y].begin(), qp.classes[Y].end(),
                                         [&](std::size_t y) { return ideals[x].contains(y); });
          if (!found) {
            c.passed = false;
            c.witness = pair_text(qp, x) + " has nothing below it in class [" +
                        qp.witness[Y].flat_label() + "]";
            return;
          }
        }
      });
    }
    report.conditions.push_back(c);
  }

  {
    ConditionResult c{"rank preservation", true, ""};
    for (const auto& members : qp.classes) {
      for (std::size_t x : members) {
        if (qp.product.rank(x) != qp.product.rank(members.front())) {
          c.passed = false;
          c.witness = pair_text(qp, x) + " and " + pair_text(qp, members.front()) +
                      " differ in rank";
          break;
        }
      }
      if (!c.passed) break;
    }
    report.conditions.push_back(c);
  }

  {
    ConditionResult c{"summation condition", true, ""};
    const std::size_t bottom_class = qp.class_of[qp.product.bottom()];
    for (std::size_t X = 0; X < qp.classes.size(); ++X) {
      if (X == bottom_class) continue;
      std::int64_t sum = 0;
      generated_ideal(qp, ideals, X).for_each([&](std::size_t y) { sum += mu[y]; });
      if (sum != 0) {
        c.passed = false;
        c.witness = "class [" + qp.witness[X].flat_label() + "] has Mobius sum " +
                    std::to_string(sum);
        break;
      }
    }
    report.conditions.push_back(c);
  }
  return report;
}

WitnessCheck verify_witness_bijection(const QuotientPoset& qp, const TeslerPoset& target) {
  WitnessCheck check;
  check.target_size = target.matrices.size();
  if (target.alpha != qp.target_alpha()) {
    throw std::invalid_argument("target poset has the wrong hook-sum vector");
  }
  std::vector<std::size_t> map;
  std::vector<bool> hit(target.matrices.size(), false);
  for (const auto& w : qp.witness) {
    auto idx = target.find(w);
    if (!idx) {
      check.in_target = false;
      break;
    }
    if (hit[*idx]) check.bijective = false;
    hit[*idx] = true;
    map.push_back(*idx);
  }
  if (!check.in_target) {
    check.bijective = false;
    check.preserves_covers = false;
    return check;
  }
  if (qp.classes.size() != target.matrices.size()) check.bijective = false;
  check.preserves_covers = check.bijective && is_cover_isomorphism(qp.quotient, target.poset, map);
  return check;
}

std::optional<std::string> isolation_dichotomy_violation(const QuotientPoset& qp) {
  const auto ideals = lower_ideals(qp.product);
  const std::size_t na = qp.base.matrices.size();
  const std::size_t ns = qp.shifts.maps.size();
  const std::size_t a0 = qp.base.poset.bottom();
  const std::size_t s0 = qp.shifts.tesler.poset.bottom();
  for (std::size_t X = 0; X < qp.classes.size(); ++X) {
    const auto lower = generated_ideal(qp, ideals, X);
    std::vector<std::vector<std::size_t>> by_a(na), by_s(ns);
    lower.for_each([&](std::size_t x) {
      by_a[qp.base_index(x)].push_back(qp.shift_index(x));
      by_s[qp.shift_index(x)].push_back(qp.base_index(x));
    });
    std::optional<std::size_t> first, second;
    for (std::size_t a = 0; a < na && !first; ++a) {
      if (a != a0 && by_a[a] == std::vector<std::size_t>{s0}) first = a;
    }
    for (std::size_t s = 0; s < ns && !second; ++s) {
      if (s != s0 && by_s[s] == std::vector<std::size_t>{a0}) second = s;
    }
    if (first && second) {
      return "class [" + qp.witness[X].flat_label() + "]: A=[" +
             qp.base.matrices[*first].matrix().flat_label() +
             "] is first-coordinate isolated and S=[" +
             qp.shifts.maps[*second].s.matrix().flat_label() + "] is second-coordinate isolated";
    }
  }
  return std::nullopt;
}

std::optional<std::string> first_sum_violation(const QuotientPoset& qp) {
  const std::size_t ns = qp.shifts.maps.size();
  const std::size_t a0 = qp.base.poset.bottom();
  const std::size_t s0 = qp.shifts.tesler.poset.bottom();
  for (std::size_t a = 0; a < qp.base.matrices.size(); ++a) {
    if (a == a0) continue;
    for (std::size_t s = 0; s < ns; ++s) {
      if (s == s0) continue;
      const std::size_t x = a0 * ns + s;
      const std::size_t y = a * ns + s0;
      if (qp.class_of[x] == qp.class_of[y]) {
        return pair_text(qp, x) + " ~ " + pair_text(qp, y);
      }
    }
  }
  return std::nullopt;
}

std::uint64_t binary_weight(const HookSumVector& alpha) {
  std::uint64_t w = 0;
  const std::size_t n = alpha.size();
  for (std::size_t j = 0; j < n; ++j) w += (n - 1 - j) * std::uint64_t{alpha[j]};
  return w;
}

bool QuotientStep::ok() const {
  return report.all_passed() && bijection.ok() && chi_product == chi_expected &&
         chi_quotient == chi_product;
}

bool QuotientStep::chi_ok() const {
  return bijection.ok() && chi_product == chi_expected && chi_quotient == chi_product;
}

bool FactorizationTrace::chi_ok() const {
  return direct == predicted &&
         std::all_of(steps.begin(), steps.end(), [](const QuotientStep& s) { return s.chi_ok(); });
}

bool FactorizationTrace::ok() const {
  return direct == predicted &&
         std::all_of(steps.begin(), steps.end(), [](const QuotientStep& s) { return s.ok(); });
}

FactorizationTrace verify_factorization(const HookSumVector& alpha,
                                        const EnumerationOptions& options) {
  if (!alpha.is_binary()) {
    throw std::invalid_argument("verify_factorization requires a binary hook-sum vector, got (" +
                                alpha.to_string() + ")");
  }
  const std::size_t n = alpha.size();
  const UniPoly q_minus_one = uq() - UniPoly(1);
  FactorizationTrace trace;
  trace.alpha = alpha;
  trace.w = binary_weight(alpha);
  trace.predicted = q_minus_one.pow(static_cast<unsigned>(trace.w));

  HookSumVector current(std::vector<Entry>(n, 0));
  UniPoly chi = characteristic_polynomial(build_poset(current, options).poset);
  for (std::size_t p = 0; p < n; ++p) {
    if (alpha[p] == 0) continue;
    QuotientStep step;
    step.from = current;
    step.to = current.with(p, 1);
    step.r = n - p;
    auto qp = quotient_by_sum(current, step.r, options);
    step.product_size = qp.product.size();
    step.class_count = qp.classes.size();
    step.report = check_quotient_conditions(qp);
    step.bijection = verify_witness_bijection(qp, build_poset(step.to, options));
    step.chi_product = characteristic_polynomial(qp.product);
    step.chi_quotient = characteristic_polynomial(qp.quotient);
    step.chi_expected = chi * q_minus_one.pow(static_cast<unsigned>(step.r - 1));
    chi = step.chi_quotient;
    current = step.to;
    trace.steps.push_back(std::move(step));
  }
  trace.direct = characteristic_polynomial(build_poset(alpha, options).poset);
  return trace;
}

DivisibilityResult check_divisibility(const std::vector<Entry>& alpha,
                                      const std::vector<Entry>& beta, WordSide side,
                                      const EnumerationOptions& options) {
  for (Entry b : beta) {
    if (b > 1) throw std::invalid_argument("beta must be a binary word");
  }
  std::vector<Entry> full;
  if (side == WordSide::leading) {
    full = beta;
    full.insert(full.end(), alpha.begin(), alpha.end());
  } else {
    full = alpha;
    full.insert(full.end(), beta.begin(), beta.end());
  }
  DivisibilityResult out;
  out.vector = HookSumVector(std::move(full));
  const std::size_t n = out.vector.size();
  const std::size_t k = beta.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t weight = side == WordSide::leading ? n - (i + 1) : k - (i + 1);
    out.exponent += weight * beta[i];
  }
  out.chi = characteristic_polynomial(build_poset(out.vector, options).poset);
  try {
    divide_by_q_minus_one(out.chi, static_cast<unsigned>(out.exponent));
    out.divides = true;
  } catch (const InexactDivision&) {
    out.divides = false;
  }
  return out;
}

}  // namespace tesler
