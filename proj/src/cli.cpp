#include "tesler/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "tesler/acceptance.hpp"
#include "tesler/growth.hpp"
#include "tesler/harmonics.hpp"
#include "tesler/io.hpp"
#include "tesler/quotient.hpp"

namespace tesler::cli {
namespace {

using nlohmann::json;

struct Config {
  std::string alpha;
  std::size_t n = 0;
  std::string format = "text";
  std::string out_path;
  std::uint64_t ceiling = EnumerationOptions{}.ceiling;
  unsigned jobs = 1;

  // Subcommand specific.
  bool brute = false;
  bool streaming = false;
  bool dot = false;
  bool annotate_mobius = false;
  std::size_t r = 0;
  std::string specialize;
  std::string at;
  bool large = false;
  bool classes = false;
  std::string family = "ones-then-zeros:2";

  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    o.ceiling = ceiling;
    o.jobs = jobs;
    return o;
  }
  HookSumVector parsed_alpha() const {
    if (alpha.empty()) throw CLI::ValidationError("--alpha", "is required");
    return parse_alpha(alpha);
  }
};

void add_common(CLI::App* sub, Config& c, const std::vector<std::string>& formats) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  sub->add_option("--out", c.out_path, "Write output to this file");
  sub->add_option("--ceiling", c.ceiling, "Largest number of matrices to materialize")
      ->capture_default_str();
  sub->add_option("--jobs", c.jobs, "Worker threads, 0 for all cores")->capture_default_str();
}

void add_alpha(CLI::App* sub, Config& c) {
  sub->add_option("--alpha", c.alpha, "Hook-sum vector, comma separated, left to right")->required();
}

// Evaluates "q=A,t=B" (either may be omitted when unused) on a series.
BigInt evaluate_at(const BiPoly& p, const std::string& spec) {
  BigInt q = 0, t = 0;
  bool have_q = false, have_t = false;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--at", "expected q=VALUE,t=VALUE");
    const std::string var = part.substr(0, eq);
    BigInt value;
    try {
      value = BigInt(part.substr(eq + 1));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--at", "'" + part + "' is not an integer assignment");
    }
    if (var == "q") {
      q = value;
      have_q = true;
    } else if (var == "t") {
      t = value;
      have_t = true;
    } else {
      throw CLI::ValidationError("--at", "unknown variable '" + var + "'");
    }
  }
  if (!have_q || !have_t) throw CLI::ValidationError("--at", "needs values for both q and t");
  return evaluate(p, q, t);
}

int cmd_enumerate(const Config& c, std::ostream& out) {
  const auto alpha = c.parsed_alpha();
  const auto fam = c.brute ? brute_force_enumerate(alpha, c.enumeration())
                           : enumerate_family(alpha, c.enumeration());
  if (c.format == "json") {
    write_jsonl(out, fam.matrices);
  } else if (c.format == "csv") {
    out << census_csv({{alpha, fam.count}});
  } else {
    for (const auto& m : fam.matrices) out << m.matrix().flat_label() << '\n';
  }
  return kExitOk;
}

int cmd_count(const Config& c, std::ostream& out) {
  const auto alpha = c.parsed_alpha();
  const BigInt value = c.streaming ? count_by_streaming(alpha, c.enumeration()) : count(alpha);
  if (c.format == "csv") {
    out << census_csv({{alpha, value}});
  } else if (c.format == "json") {
    out << json{{"alpha", alpha.to_string()}, {"count", value.str()}}.dump() << '\n';
  } else {
    out << value << '\n';
  }
  return kExitOk;
}

int cmd_poset(const Config& c, std::ostream& out) {
  const auto tp = build_poset(c.parsed_alpha(), c.enumeration());
  if (c.dot || c.format == "dot") {
    DotOptions opts;
    opts.annotate_mobius = c.annotate_mobius;
    out << export_dot(tp.poset, opts);
    return kExitOk;
  }
  const auto mu = mobius(tp.poset);
  std::int64_t max_mu = 0;
  for (auto m : mu) max_mu = std::max(max_mu, m < 0 ? -m : m);
  std::vector<std::size_t> levels;
  for (const auto& l : tp.poset.rank_levels()) levels.push_back(l.size());
  const bool lattice = !find_non_join_pair(tp.poset).has_value();
  if (c.format == "json") {
    out << json{{"alpha", tp.alpha.to_string()},
                {"elements", tp.poset.size()},
                {"covers", tp.poset.cover_count()},
                {"rank", tp.poset.rank()},
                {"rank_sizes", levels},
                {"lattice", lattice},
                {"max_abs_mobius", max_mu}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "alpha: " << tp.alpha.to_string() << '\n';
  out << "elements: " << tp.poset.size() << '\n';
  out << "covers: " << tp.poset.cover_count() << '\n';
  out << "rank: " << tp.poset.rank() << '\n';
  out << "rank sizes:";
  for (auto s : levels) out << ' ' << s;
  out << '\n';
  out << "lattice: " << (lattice ? "yes" : "no") << '\n';
  out << "max |mu(0,x)|: " << max_mu << '\n';
  return kExitOk;
}

int cmd_charpoly(const Config& c, std::ostream& out) {
  const auto tp = build_poset(c.parsed_alpha(), c.enumeration());
  const auto chi = characteristic_polynomial(tp.poset);
  const auto coeffs = coefficients(chi);
  if (c.format == "json") {
    std::vector<std::string> cs;
    for (const auto& v : coeffs) cs.push_back(v.str());
    out << json{{"alpha", tp.alpha.to_string()},
                {"factored", factored_string(chi)},
                {"expanded", to_string(chi)},
                {"coefficients", cs}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << factored_string(chi) << '\n';
  out << "coefficients (q^0 up):";
  for (const auto& v : coeffs) out << ' ' << v;
  out << '\n';
  return kExitOk;
}

int cmd_quotient_check(const Config& c, std::ostream& out) {
  const auto alpha = c.parsed_alpha();
  const auto opts = c.enumeration();
  if (c.r == 0 && alpha.is_binary()) {
    const auto trace = verify_factorization(alpha, opts);
    if (c.format == "json") {
      out << trace_json(trace).dump(2) << '\n';
    } else {
      out << trace_text(trace);
      out << (trace.ok() ? "all checks passed\n" : "some checks failed\n");
    }
    return trace.ok() ? kExitOk : kExitVerificationFailed;
  }
  // A single step, or every admissible step of a non-binary vector.
  std::vector<std::size_t> blocks;
  if (c.r) {
    blocks.push_back(c.r);
  } else {
    for (std::size_t p = 0; p < alpha.size(); ++p) {
      if (alpha[p] == 0) blocks.push_back(alpha.size() - p);
    }
  }
  const bool exploration = !alpha.is_binary();
  bool all_ok = true;
  json steps = json::array();
  for (std::size_t r : blocks) {
    const auto qp = quotient_by_sum(alpha, r, opts);
    const auto report = check_quotient_conditions(qp);
    const auto w = verify_witness_bijection(qp, build_poset(qp.target_alpha(), opts));
    const auto chi_p = characteristic_polynomial(qp.product);
    const auto chi_q = characteristic_polynomial(qp.quotient);
    const bool ok = report.all_passed() && w.ok() && chi_p == chi_q;
    all_ok = all_ok && ok;
    if (c.format == "json") {
      steps.push_back({{"r", r},
                       {"target", qp.target_alpha().to_string()},
                       {"product_size", qp.product.size()},
                       {"classes", qp.classes.size()},
                       {"conditions", quotient_report_json(report)},
                       {"witness_map_ok", w.ok()},
                       {"chi_product", factored_string(chi_p)},
                       {"chi_quotient", factored_string(chi_q)}});
      continue;
    }
    out << "(" << alpha.to_string() << ") -> (" << qp.target_alpha().to_string() << "), r = " << r
        << ": product " << qp.product.size() << " elements, " << qp.classes.size() << " classes\n";
    for (const auto& cond : report.conditions) {
      out << "  " << (cond.passed ? "pass" : "FAIL") << "  " << cond.name;
      if (!cond.passed) out << "  (" << cond.witness << ")";
      out << '\n';
    }
    out << "  " << (w.ok() ? "pass" : "FAIL") << "  witness map is a cover isomorphism\n";
    out << "  chi(product) = " << factored_string(chi_p) << ", chi(quotient) = "
        << factored_string(chi_q) << '\n';
  }
  if (c.format == "json") {
    out << json{{"alpha", alpha.to_string()}, {"exploration", exploration}, {"steps", steps}}.dump(2)
        << '\n';
  } else if (exploration) {
    out << "exploration mode: alpha is not binary, failures are reported, not asserted\n";
  }
  if (exploration) return kExitOk;
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_hilbert(const Config& c, std::ostream& out) {
  HilbertOptions opts;
  opts.max_n = c.large ? 8 : 7;
  opts.jobs = c.jobs;
  if (c.n == 0) throw CLI::ValidationError("--n", "is required and must be positive");
  const auto h = hilbert_series(c.n, opts);
  if (!c.at.empty()) {
    out << evaluate_at(h.series, c.at) << '\n';
    return kExitOk;
  }
  const std::string& s = c.specialize;
  std::string text;
  if (s.empty()) {
    text = to_string(h.series);
  } else if (s == "t=0") {
    text = to_string(specialize_t_zero(h.series));
  } else if (s == "t=1/q") {
    text = to_string(specialize_t_inverse_q(h.series));
  } else if (s == "q=1,t=1") {
    text = h.dimension.str();
  } else if (s == "numeric") {
    throw CLI::ValidationError("--specialize", "numeric needs --at q=VALUE,t=VALUE");
  } else {
    throw CLI::ValidationError("--specialize", "expected t=0, t=1/q, q=1,t=1 or numeric");
  }
  if (c.format == "json") {
    out << json{{"n", c.n}, {"specialize", s}, {"value", text}, {"dimension", h.dimension.str()}}
               .dump()
        << '\n';
  } else {
    out << text << '\n';
  }
  return kExitOk;
}

int cmd_armstrong(const Config& c, std::ostream& out) {
  if (c.alpha.empty() && c.n == 0) throw CLI::ValidationError("armstrong", "needs --alpha or --n");
  const auto alpha = c.alpha.empty() ? ones_then_zeros(c.n, c.n) : c.parsed_alpha();
  const auto a = c.classes ? armstrong_polynomial_by_classes(alpha)
                           : armstrong_polynomial(alpha, c.enumeration());
  if (c.format == "json") {
    json dist = json::object();
    for (const auto& [d, cnt] : a.dist) dist[std::to_string(d)] = cnt.str();
    out << json{{"alpha", alpha.to_string()}, {"polynomial", to_string(a)}, {"distribution", dist}}
               .dump()
        << '\n';
  } else if (c.format == "csv") {
    out << "dpro,count\n";
    for (const auto& [d, cnt] : a.dist) out << d << ',' << cnt << '\n';
  } else {
    out << to_string(a) << '\n';
  }
  return kExitOk;
}

int cmd_family(const Config& c, std::ostream& out) {
  const auto spec = parse_family(c.family);
  if (c.n == 0) throw CLI::ValidationError("--n", "is required and must be positive");
  const auto rep = family_sequence(spec, c.n, c.enumeration());
  if (c.format == "csv") {
    out << sequence_csv({rep});
  } else if (c.format == "json") {
    json rows = json::array(), checks = json::array();
    for (const auto& r : rep.rows) {
      rows.push_back({{"n", r.n}, {"value", r.value.str()}, {"verdict", r.verdict}});
    }
    for (const auto& ch : rep.checks) {
      checks.push_back({{"name", ch.name},
                        {"holds", ch.holds},
                        {"discrepancy", ch.discrepancy},
                        {"detail", ch.detail}});
    }
    out << json{{"family", rep.family}, {"rows", rows}, {"checks", checks}}.dump(2) << '\n';
  } else {
    out << rep.family << ":";
    for (const auto& r : rep.rows) out << ' ' << r.value;
    out << '\n';
    for (const auto& ch : rep.checks) {
      out << "  " << (ch.holds ? "holds   " : ch.discrepancy ? "MISMATCH" : "FAILS   ") << "  "
          << ch.name;
      if (!ch.detail.empty()) out << "  (" << ch.detail << ")";
      out << '\n';
    }
  }
  return rep.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_bounds(const Config& c, std::ostream& out) {
  if (c.n < 2) throw CLI::ValidationError("--n", "must be at least 2");
  std::vector<BoundsReport> reps;
  for (std::size_t n = 2; n <= c.n; ++n) reps.push_back(verify_bounds(n));
  bool ok = true;
  for (const auto& r : reps) ok = ok && (!r.inner_applicable() || r.inner_holds());
  if (c.format == "csv") {
    out << bounds_csv(reps);
    return ok ? kExitOk : kExitVerificationFailed;
  }
  for (const auto& r : reps) {
    out << "n = " << r.n << ", T(1^n) = " << r.value << '\n';
    for (const auto& l : r.links) {
      out << "  " << (!l.applicable ? "n/a " : l.holds ? "ok  " : "no  ") << "  " << l.name;
      if (l.applicable) out << "  (" << l.lhs << " vs " << l.rhs << ")";
      out << '\n';
    }
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_mobius_probe(const Config& c, std::ostream& out) {
  if (c.n == 0) throw CLI::ValidationError("--n", "is required and must be positive");
  const auto p = mobius_bound_probe(c.n, c.enumeration());
  if (c.format == "json") {
    out << json{{"n", p.n},
                {"max_abs_mu", p.max_abs_mu},
                {"factorial", p.factorial_bound.str()},
                {"within_factorial", p.within_factorial},
                {"implied_lower_bound", p.implied_lower.str()},
                {"count", p.value.str()},
                {"meets_implied", p.meets_implied}}
               .dump()
        << '\n';
  } else {
    out << "M_" << p.n << " = " << p.max_abs_mu << " (n! = " << p.factorial_bound << ", "
        << (p.within_factorial ? "within" : "EXCEEDS") << ")\n";
    out << "implied lower bound ceil(2^C(n,2)/M_n) = " << p.implied_lower << ", T(1^n) = " << p.value
        << (p.meets_implied ? " meets it" : " does NOT meet it") << '\n';
  }
  return p.within_factorial && p.meets_implied ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_all(const Config& c, std::ostream& out) {
  AcceptanceOptions opts;
  opts.jobs = c.jobs;
  bool ok = true;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const auto r = run_criterion(id, opts);
    out << format_result(r) << '\n';
    out.flush();
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Tesler matrices: enumeration, posets and identities", "tesler"};
  app.require_subcommand(1);
  Config c;
  std::map<CLI::App*, std::function<int(const Config&, std::ostream&)>> handlers;

  auto* enumerate = app.add_subcommand("enumerate", "List T(alpha) in canonical order");
  add_alpha(enumerate, c);
  add_common(enumerate, c, {"text", "json", "csv"});
  enumerate->add_flag("--brute", c.brute, "Use the row-by-row brute-force generator");
  handlers[enumerate] = cmd_enumerate;

  auto* cnt = app.add_subcommand("count", "Count T(alpha) without building matrices");
  add_alpha(cnt, c);
  add_common(cnt, c, {"text", "json", "csv"});
  cnt->add_flag("--streaming", c.streaming,
                "Stream every diagonal of size n-1 instead of aggregating (bounded by --ceiling)");
  handlers[cnt] = cmd_count;

  auto* poset = app.add_subcommand("poset", "Statistics or DOT diagram of P(alpha)");
  add_alpha(poset, c);
  add_common(poset, c, {"text", "json", "dot"});
  poset->add_flag("--dot", c.dot, "Emit the Hasse diagram as DOT");
  poset->add_flag("--annotate-mobius", c.annotate_mobius, "Label DOT nodes with mu(0,x)");
  handlers[poset] = cmd_poset;

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of P(alpha)");
  add_alpha(charpoly, c);
  add_common(charpoly, c, {"text", "json"});
  handlers[charpoly] = cmd_charpoly;

  auto* qcheck = app.add_subcommand("quotient-check", "Run the product quotient checks");
  add_alpha(qcheck, c);
  add_common(qcheck, c, {"text", "json"});
  qcheck->add_option("--r", c.r, "Check only the step with block size r");
  handlers[qcheck] = cmd_quotient_check;

  auto* hilbert = app.add_subcommand("hilbert", "Weighted sum over T(1^n)");
  hilbert->add_option("--n", c.n, "Matrix size")->required();
  add_common(hilbert, c, {"text", "json"});
  hilbert->add_option("--specialize", c.specialize, "t=0, t=1/q, q=1,t=1 or numeric");
  hilbert->add_option("--at", c.at, "Evaluate at q=VALUE,t=VALUE");
  hilbert->add_flag("--large", c.large, "Allow n = 8");
  handlers[hilbert] = cmd_hilbert;

  auto* armstrong = app.add_subcommand("armstrong", "Distribution of diagonal products");
  armstrong->add_option("--alpha", c.alpha, "Hook-sum vector");
  armstrong->add_option("--n", c.n, "Shorthand for --alpha 1^n");
  add_common(armstrong, c, {"text", "json", "csv"});
  armstrong->add_flag("--classes", c.classes, "Aggregate over diagonal classes, no enumeration");
  handlers[armstrong] = cmd_armstrong;

  auto* family = app.add_subcommand("family", "Counts along a hook-sum family");
  family->add_option("--family", c.family, "single-one, staircase or ones-then-zeros:K")
      ->capture_default_str();
  family->add_option("--n", c.n, "Largest n")->required();
  add_common(family, c, {"text", "json", "csv"});
  handlers[family] = cmd_family;

  auto* bounds = app.add_subcommand("bounds", "Bounds on T(1^n) for 2 <= n <= N");
  bounds->add_option("--n", c.n, "Largest n")->required();
  add_common(bounds, c, {"text", "csv"});
  handlers[bounds] = cmd_bounds;

  auto* probe = app.add_subcommand("mobius-probe", "max |mu(0,A)| over P(1^n)");
  probe->add_option("--n", c.n, "Matrix size")->required();
  add_common(probe, c, {"text", "json"});
  handlers[probe] = cmd_mobius_probe;

  auto* verify = app.add_subcommand("verify-all", "Run every acceptance criterion");
  add_common(verify, c, {"text"});
  handlers[verify] = cmd_verify_all;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!c.out_path.empty()) {
      file.open(c.out_path);
      if (!file) {
        err << "error: cannot open " << c.out_path << " for writing\n";
        return kExitUsage;
      }
      sink = &file;
    }
    const int code = handlers.at(chosen)(c, *sink);
    sink->flush();
    return code;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CeilingExceeded& e) {
    err << "error: " << e.what() << " (raise --ceiling)\n";
    return kExitCeiling;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCeiling;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InexactDivision& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv = {"tesler"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace tesler::cli
