#include "tesler/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace tesler {

using nlohmann::json;

json matrix_to_json(const GTMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = i; j < m.size(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  json alpha = json::array();
  for (auto v : m.alpha().entries()) alpha.push_back(v);
  return {{"n", m.size()}, {"alpha", std::move(alpha)}, {"rows", std::move(rows)}};
}

GTMatrix matrix_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto alpha = j.at("alpha").get<std::vector<std::int64_t>>();
    const auto& rows = j.at("rows");
    if (alpha.size() != n || !rows.is_array() || rows.size() != n) {
      throw std::invalid_argument("matrix JSON: alpha and rows must both have n entries");
    }
    std::vector<Entry> a;
    for (auto v : alpha) {
      if (v < 0) throw std::invalid_argument("matrix JSON: negative hook sum");
      a.push_back(static_cast<Entry>(v));
    }
    std::vector<std::vector<Entry>> upper;
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = rows[i].get<std::vector<std::int64_t>>();
      if (row.size() != n - i) {
        throw std::invalid_argument("matrix JSON: row " + std::to_string(i) + " must have " +
                                    std::to_string(n - i) + " entries");
      }
      std::vector<Entry> r;
      for (auto v : row) {
        if (v < 0) throw std::invalid_argument("matrix JSON: negative entry");
        r.push_back(static_cast<Entry>(v));
      }
      upper.push_back(std::move(r));
    }
    return GTMatrix(TriMatrix::from_rows(upper), HookSumVector(std::move(a)));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("matrix JSON: ") + e.what());
  }
}

void write_jsonl(std::ostream& out, const std::vector<GTMatrix>& matrices) {
  for (const auto& m : matrices) out << matrix_to_json(m).dump() << '\n';
}

std::vector<GTMatrix> read_jsonl(std::istream& in) {
  std::vector<GTMatrix> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(matrix_from_json(json::parse(line)));
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(std::string("JSON-lines: ") + e.what());
    }
  }
  return out;
}

std::string census_csv(const std::vector<std::pair<HookSumVector, BigInt>>& rows) {
  std::ostringstream os;
  os << "alpha,count\n";
  for (const auto& [alpha, c] : rows) os << '"' << alpha.to_string() << "\"," << c << '\n';
  return os.str();
}

std::string export_dot(const Poset& p, const DotOptions& options) {
  if (p.size() > options.max_elements) {
    throw std::length_error("DOT export is limited to " + std::to_string(options.max_elements) +
                            " elements, poset has " + std::to_string(p.size()));
  }
  std::vector<std::int64_t> mu;
  if (options.annotate_mobius) mu = mobius(p);
  std::ostringstream os;
  os << "digraph " << options.graph_name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t x = 0; x < p.size(); ++x) {
    os << "  n" << x << " [label=\"" << p.label(x);
    if (options.annotate_mobius) os << "\\nmu=" << mu[x];
    os << "\"];\n";
  }
  for (const auto& level : p.rank_levels()) {
    os << "  { rank=same;";
    for (std::size_t x : level) os << " n" << x << ";";
    os << " }\n";
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y : p.up(x)) os << "  n" << x << " -> n" << y << ";\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

std::string cell(const std::optional<BigInt>& v) { return v ? v->str() : ""; }

}  // namespace

std::string sequence_csv(const std::vector<SequenceReport>& reports) {
  std::ostringstream os;
  os << "family,n,value,bound_low,bound_high,verdict\n";
  for (const auto& rep : reports) {
    for (const auto& row : rep.rows) {
      os << rep.family << ',' << row.n << ',' << row.value << ',' << cell(row.bound_low) << ','
         << cell(row.bound_high) << ',' << row.verdict << '\n';
    }
  }
  return os.str();
}

std::string bounds_csv(const std::vector<BoundsReport>& reports) {
  std::ostringstream os;
  os << "family,n,value,bound_low,bound_high,verdict\n";
  for (const auto& r : reports) {
    const auto& low = r.links[1];
    const auto& high = r.links[2];
    std::string verdict = "n/a";
    if (r.inner_applicable()) verdict = r.inner_holds() ? "ok" : "violated";
    os << "tesler," << r.n << ',' << r.value << ',' << low.lhs << ','
       << (high.applicable ? high.rhs.str() : "") << ',' << verdict << '\n';
  }
  return os.str();
}

json quotient_report_json(const QuotientReport& r) {
  json out = json::array();
  for (const auto& c : r.conditions) {
    json item = {{"condition", c.name}, {"passed", c.passed}};
    if (!c.passed) item["witness"] = c.witness;
    out.push_back(std::move(item));
  }
  return out;
}

json trace_json(const FactorizationTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"from", s.from.to_string()},
                     {"to", s.to.to_string()},
                     {"r", s.r},
                     {"product_size", s.product_size},
                     {"classes", s.class_count},
                     {"conditions", quotient_report_json(s.report)},
                     {"witness_map",
                      {{"in_target", s.bijection.in_target},
                       {"bijective", s.bijection.bijective},
                       {"preserves_covers", s.bijection.preserves_covers},
                       {"target_size", s.bijection.target_size}}},
                     {"chi_product", to_string(s.chi_product)},
                     {"chi_quotient", to_string(s.chi_quotient)},
                     {"chi_expected", to_string(s.chi_expected)},
                     {"ok", s.ok()}});
  }
  return {{"alpha", t.alpha.to_string()},
          {"w", t.w},
          {"predicted", factored_string(t.predicted)},
          {"direct", factored_string(t.direct)},
          {"chi_ok", t.chi_ok()},
          {"ok", t.ok()},
          {"steps", std::move(steps)}};
}

std::string trace_text(const FactorizationTrace& t) {
  std::ostringstream os;
  os << "alpha = (" << t.alpha.to_string() << "), w = " << t.w << '\n';
  for (const auto& s : t.steps) {
    os << "  (" << s.from.to_string() << ") -> (" << s.to.to_string() << "), r = " << s.r
       << ": product " << s.product_size << " elements, " << s.class_count << " classes\n";
    for (const auto& c : s.report.conditions) {
      os << "    " << (c.passed ? "pass" : "FAIL") << "  " << c.name;
      if (!c.passed) os << "  (" << c.witness << ")";
      os << '\n';
    }
    os << "    " << (s.bijection.ok() ? "pass" : "FAIL") << "  witness map is a cover isomorphism\n";
    os << "    " << (s.chi_product == s.chi_expected ? "pass" : "FAIL")
       << "  chi(product) = " << factored_string(s.chi_product) << '\n';
    os << "    " << (s.chi_quotient == s.chi_product ? "pass" : "FAIL")
       << "  chi(quotient) = chi(product)\n";
  }
  os << "  direct chi = " << factored_string(t.direct) << ", predicted "
     << factored_string(t.predicted) << (t.direct == t.predicted ? "  (equal)" : "  (DIFFERENT)")
     << '\n';
  return os.str();
}

}  // namespace tesler
