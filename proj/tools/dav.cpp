// Command-line front end: exact Davenport constants for finite abelian
// groups, Cayley-table monoids, and finite commutative rings, with the
// formula-vs-brute-force verification suites.
//
// Exit codes: 0 success/agreement, 1 usage error, 2 verification
// disagreement, 3 search budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dav/abelian.hpp"
#include "dav/formulas.hpp"
#include "dav/monoid.hpp"
#include "dav/oracle.hpp"
#include "dav/ring.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitBudget = 3;

std::vector<long long> parse_group_literal(const std::string& text) {
  std::vector<long long> orders;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    const long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad group literal near '" + tok + "'");
    orders.push_back(v);
  }
  if (orders.empty()) throw std::invalid_argument("empty group literal");
  return orders;
}

struct CommonFlags {
  std::uint64_t budget_nodes = 400'000'000;
  int threads = 1;
  bool deep = false;
  bool json = false;
  std::string out;
};

dav::OracleOptions oracle_options(const CommonFlags& flags) {
  dav::OracleOptions opts;
  opts.budget.max_nodes = flags.budget_nodes;
  opts.threads = flags.threads;
  return opts;
}

void write_report(const CommonFlags& flags, const std::string& text) {
  if (flags.out.empty()) return;
  std::ofstream f(flags.out);
  if (!f) throw std::runtime_error("cannot open output file " + flags.out);
  f << text;
}

int cmd_group(const std::string& literal, const CommonFlags& flags) {
  const dav::AbelianGroup g = dav::normalize(parse_group_literal(literal));
  dav::SearchBudget budget;
  budget.max_nodes = flags.deep ? std::max<std::uint64_t>(flags.budget_nodes, 1ull << 40)
                                : flags.budget_nodes;
  const auto t0 = std::chrono::steady_clock::now();
  const dav::DavenportValue dv = dav::davenport(g, budget);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  if (flags.json) {
    nlohmann::json j;
    j["group"] = g.invariant_factors();
    j["order"] = g.order();
    j["m_star"] = dav::m_star(g);
    j["davenport"] = dv.value;
    j["via"] = dv.via == dav::DavenportVia::formula ? "formula" : "search";
    std::cout << j.dump() << "\n";
    write_report(flags, j.dump() + "\n");
  } else {
    std::cout << "G = " << g.to_string() << "  (order " << g.order() << ")\n"
              << "D(G) = " << dv.value << "   M(G) = " << dav::m_star(g) << "   via "
              << (dv.via == dav::DavenportVia::formula ? "formula" : "search") << "   ["
              << ms << " ms]\n";
  }
  return kExitOk;
}

int cmd_ring(const std::string& spec_text, bool with_oracle, bool show_bounds,
             const CommonFlags& flags) {
  const dav::RingSpec spec = dav::RingSpec::parse(spec_text);
  dav::OracleOptions opts = oracle_options(flags);
  opts.with_oracle = with_oracle;
  const dav::Thm1Verification v = dav::verify_thm1(spec, opts);
  if (flags.json) {
    std::cout << dav::to_json(v) << "\n";
    write_report(flags, dav::to_json(v) + "\n");
  } else {
    std::cout << "R = " << v.spec << "  (|R| = " << v.size << ")\n";
    std::cout << "decomposition: k1=" << v.thm1.decomposition.k1
              << " k2=" << v.thm1.decomposition.k2 << " k3=" << v.thm1.decomposition.k3
              << " k4=" << v.thm1.decomposition.k4 << "  residual:";
    for (const auto& f : v.thm1.decomposition.residual) std::cout << " " << f.spec.to_string();
    std::cout << "\n";
    std::cout << "D(R) = " << v.thm1.value << "  at (a,b) = (" << v.thm1.argmax_a << ","
              << v.thm1.argmax_b << ")   D(U(R)) = " << v.du
              << "   delta = " << v.thm1.value - v.du << "\n";
    if (show_bounds) {
      std::cout << "bounds: thm2 in [" << v.thm2.lower << ", " << v.thm2.upper << "]";
      if (v.thm2.tight != dav::Tightness::none)
        std::cout << " (tight: " << dav::tightness_name(v.thm2.tight) << ")";
      std::cout << "  thm3 <= " << v.thm3 << "\n";
    }
    if (!v.cases.empty()) {
      std::cout << "zero-defect cases:";
      for (int c : v.cases) std::cout << " " << c;
      std::cout << "\n";
    }
    if (v.oracle)
      std::cout << "oracle D = " << *v.oracle
                << (v.oracle == v.thm1.value ? "  (agrees)" : "  (DISAGREES)") << "\n";
    else if (v.oracle_lower_bound)
      std::cout << "oracle: budget exceeded, D >= " << *v.oracle_lower_bound
                << " (unverified)\n";
    if (!v.failures.empty()) {
      std::cout << "FAILURES:\n";
      for (const auto& f : v.failures) std::cout << "  " << f << "\n";
    }
  }
  return v.ok ? kExitOk : kExitDisagreement;
}

struct SuiteOutcome {
  int instances = 0;
  int failures = 0;
  std::string json_lines;
};

template <class Row>
void fold_rows(SuiteOutcome& out, const std::vector<Row>& rows) {
  for (const auto& r : rows) {
    ++out.instances;
    if (!r.ok) ++out.failures;
    out.json_lines += dav::to_json(r) + "\n";
  }
}

void fold_rows(SuiteOutcome& out, const std::vector<dav::LemmaCheck>& rows) {
  for (const auto& r : rows) {
    ++out.instances;
    if (!r.ok) ++out.failures;
    out.json_lines += dav::to_json(r) + "\n";
  }
}

int cmd_verify(const std::string& suite, long long zn_max, int poly_max_deg,
               const CommonFlags& flags) {
  const dav::OracleOptions opts = oracle_options(flags);
  SuiteOutcome out;
  const bool all = suite == "all";
  if (suite == "thm1-zn" || all)
    fold_rows(out, dav::run_thm1_zn_suite(2, zn_max, opts));
  if (suite == "thm1-poly" || all)
    fold_rows(out, dav::run_thm1_poly_suite(poly_max_deg, opts));
  if (suite == "lemmas" || all) fold_rows(out, dav::run_lemma_suite(opts));
  if (suite == "local-class" || all)
    fold_rows(out, dav::run_local_classification(27, 16, opts));
  if (suite == "rd" || all) fold_rows(out, dav::run_rd_suite(flags.deep, opts));
  if (out.instances == 0) {
    std::cerr << "unknown suite: " << suite
              << " (expected thm1-zn, thm1-poly, lemmas, local-class, rd, all)\n";
    return kExitUsage;
  }
  if (flags.json) std::cout << out.json_lines;
  std::cout << "suite " << suite << ": " << out.instances << " instances, "
            << out.failures << " failures\n";
  write_report(flags, out.json_lines);
  return out.failures == 0 ? kExitOk : kExitDisagreement;
}

int cmd_survey(const std::string& family, long long n_min, long long n_max,
               int poly_max_deg, const std::string& format, bool with_oracle,
               const CommonFlags& flags) {
  dav::OracleOptions opts = oracle_options(flags);
  opts.with_oracle = with_oracle;
  std::vector<dav::Thm1Verification> rows;
  if (family == "zn") {
    rows = dav::run_thm1_zn_suite(n_min, n_max, opts);
  } else if (family == "poly") {
    rows = dav::run_thm1_poly_suite(poly_max_deg, opts);
  } else {
    std::cerr << "unknown survey family: " << family << " (expected zn or poly)\n";
    return kExitUsage;
  }
  std::string text;
  if (format == "csv") {
    text = dav::csv_header_thm1() + "\n";
    for (const auto& r : rows) text += dav::to_csv(r) + "\n";
  } else {
    for (const auto& r : rows) text += dav::to_json(r) + "\n";
  }
  if (flags.out.empty())
    std::cout << text;
  else
    write_report(flags, text);
  for (const auto& r : rows)
    if (!r.ok) return kExitDisagreement;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Davenport constants for finite abelian groups, commutative monoids, "
               "and finite commutative rings"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonFlags flags;
  app.add_option("--budget-nodes", flags.budget_nodes, "search node budget per instance");
  app.add_option("--threads", flags.threads, "worker threads for sweeps");
  app.add_flag("--deep", flags.deep, "enable long-running checks");
  app.add_flag("--json", flags.json, "machine-readable output");
  app.add_option("--out", flags.out, "write the report to a file");

  std::string group_literal;
  auto* group_cmd =
      app.add_subcommand("group", "D(G) for a group literal like 2,2,6");
  group_cmd->add_option("literal", group_literal, "comma-separated cyclic orders")
      ->required();

  std::string ring_spec;
  bool ring_oracle = false, ring_bounds = false;
  auto* ring_cmd = app.add_subcommand(
      "ring", "D(R) for zmod:<n> | poly:<p>:<f> | product:[...]");
  ring_cmd->add_option("spec", ring_spec, "ring spec")->required();
  ring_cmd->add_flag("--oracle", ring_oracle, "cross-check by brute force");
  ring_cmd->add_flag("--bounds", ring_bounds, "print the bound corollaries");

  std::string suite;
  long long zn_max = 48;
  int poly_max_deg = 5;
  auto* verify_cmd = app.add_subcommand(
      "verify", "run a verification suite (thm1-zn, thm1-poly, lemmas, local-class, rd, all)");
  verify_cmd->add_option("suite", suite, "suite name")->required();
  verify_cmd->add_option("--zn-max", zn_max, "upper end of the Z/nZ sweep");
  verify_cmd->add_option("--poly-max-deg", poly_max_deg, "max modulus degree");

  std::string family, format = "csv";
  long long survey_min = 2, survey_max = 48;
  int survey_poly_deg = 5;
  auto* survey_cmd = app.add_subcommand("survey", "emit a per-instance table");
  survey_cmd->add_option("family", family, "zn or poly")->required();
  survey_cmd->add_option("--min", survey_min, "smallest n (zn family)");
  survey_cmd->add_option("--max", survey_max, "largest n (zn family)");
  survey_cmd->add_option("--max-deg", survey_poly_deg, "max modulus degree (poly family)");
  survey_cmd->add_option("--format", format, "csv or jsonl");
  bool survey_oracle = true;
  survey_cmd->add_flag("--oracle,!--no-oracle", survey_oracle, "include brute-force column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (group_cmd->parsed()) return cmd_group(group_literal, flags);
    if (ring_cmd->parsed()) return cmd_ring(ring_spec, ring_oracle, ring_bounds, flags);
    if (verify_cmd->parsed()) return cmd_verify(suite, zn_max, poly_max_deg, flags);
    if (survey_cmd->parsed())
      return cmd_survey(family, survey_min, survey_max, survey_poly_deg, format,
                        survey_oracle, flags);
  } catch (const dav::BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << " (best bound " << e.lower_bound()
              << ")\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
