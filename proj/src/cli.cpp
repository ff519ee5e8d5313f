#include "rhomboid/cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rhomboid/complexity.hpp"
#include "rhomboid/error.hpp"
#include "rhomboid/graph.hpp"
#include "rhomboid/oracle.hpp"
#include "rhomboid/report.hpp"

namespace rhomboid::cli {

namespace {

constexpr const char* terminal_help =
    "Terminals are written <kind><index>: b3 is basic vertex 3, u3 the upper\n"
    "vertex between b3 and b4, l3 the lower one. Subgraphs are given as\n"
    "SRC,DST, e.g. --sub u5,u7.";

struct sub_pair {
  terminal src;
  terminal dst;
};

sub_pair parse_sub(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw error(errc::parse, "--sub expects SRC,DST, got '" + text + "'");
  return {terminal::parse(text.substr(0, comma)),
          terminal::parse(text.substr(comma + 1))};
}

split_rounding parse_rounding(const std::string& s) {
  return s == "floor" ? split_rounding::floor : split_rounding::ceil;
}

output_format parse_output(const std::string& s) {
  return s == "json" ? output_format::json : output_format::text;
}

nlohmann::json versioned() { return {{"schema_version", 1}}; }

void add_common(CLI::App& cmd, std::string& output) {
  cmd.add_option("--output", output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_rounding(CLI::App& cmd, std::string& rounding) {
  cmd.add_option("--rounding", rounding,
                 "Rounding of the decomposition vertex for even spans")
      ->check(CLI::IsMember({"ceil", "floor"}))
      ->capture_default_str();
}

// --- gen -------------------------------------------------------------------

struct gen_args {
  std::string sub;
  bool count_only = false;
  bool juxtapose = false;
  bool ast = false;
};

int cmd_gen(const config& cfg, const gen_args& args, std::ostream& out) {
  generator gen(cfg.n, {cfg.rounding, true});
  subexpr_key key{basic(1), basic(cfg.n)};
  if (!args.sub.empty()) {
    auto [src, dst] = parse_sub(args.sub);
    key = {src, dst};
  }
  const expr e = gen.expression(key);
  const subgraph_kind kind = classify(key.src, key.dst);
  if (cfg.output == output_format::json) {
    auto j = versioned();
    j["n"] = cfg.n;
    j["src"] = key.src.to_string();
    j["dst"] = key.dst.to_string();
    j["family"] = to_string(kind.family);
    j["size"] = kind.size;
    j["literals"] = e.literal_count();
    if (!args.count_only)
      j["expression"] = to_text(e, {args.juxtapose});
    if (args.ast)
      j["ast"] = to_json(e);
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  if (args.count_only) {
    out << e.literal_count() << "\n";
    return exit_ok;
  }
  out << to_text(e, {args.juxtapose}) << "\n";
  out << "literals: " << e.literal_count() << "\n";
  return exit_ok;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const config& cfg, const std::string& mode, std::ostream& out) {
  const expr e = generate(cfg.n, {cfg.rounding, true});
  const labeled_digraph g = build_sr(cfg.n);
  verification_report report =
      mode == "exact"
          ? check_exact(e, g, cfg.limit)
          : check_fingerprint(e, g, cfg.trials, cfg.seed, prime_field(cfg.prime));
  if (cfg.output == output_format::json) {
    auto j = to_json(report);
    j["n"] = cfg.n;
    out << j.dump(2) << "\n";
  } else {
    out << "verify SR(" << cfg.n << ") " << mode << ": "
        << (report.passed ? "pass" : "FAIL") << "\n";
    if (report.mode == verification_mode::exact) {
      out << "  expression terms: " << report.expression_terms
          << "\n  graph paths:      " << report.graph_paths << "\n";
    } else {
      out << "  trials " << report.trials << ", seed " << *report.seed
          << ", prime " << *report.prime << "\n";
      for (const trial_record& r : report.transcript)
        out << "  trial " << r.trial << ": digest " << std::hex
            << std::setw(16) << std::setfill('0') << r.assignment_digest
            << std::dec << std::setfill(' ') << "  expr " << r.expression_value
            << "  graph " << r.graph_value
            << (r.agrees() ? "" : "  MISMATCH") << "\n";
    }
    if (!report.passed)
      out << "  witness: " << report.witness_text() << "\n";
  }
  return report.passed ? exit_ok : exit_failure;
}

// --- table -----------------------------------------------------------------

int cmd_table(const config& cfg, std::uint32_t from, std::uint32_t to,
              std::ostream& out, std::ostream& err) {
  if (from < 4 || from > to) {
    err << "table: need 4 <= --from <= --to\n";
    return exit_usage;
  }
  const auto recurrence = recurrence_table(to);
  generator gen(to, {cfg.rounding, true});
  bool agree = true;
  auto rows = nlohmann::json::array();
  std::ostringstream text;
  auto cell = [](std::optional<std::uint64_t> v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  text << std::setw(4) << "n" << std::setw(6) << "FDA" << std::setw(6) << "CDA"
       << std::setw(6) << "IFDA" << std::setw(18) << "1-VDA-recurrence"
       << std::setw(17) << "1-VDA-generated" << "\n";
  for (std::uint32_t n = from; n <= to; ++n) {
    const std::uint64_t rec = recurrence[n - 1].t;
    const std::uint64_t gen_count =
        gen.expression(basic(1), basic(n)).literal_count();
    agree = agree && rec == gen_count;
    auto ref = reference_row_for(n);
    std::optional<std::uint64_t> fda, cda, ifda;
    if (ref) {
      fda = ref->fda;
      cda = ref->cda;
      ifda = ref->ifda;
    }
    text << std::setw(4) << n << std::setw(6) << cell(fda) << std::setw(6)
         << cell(cda) << std::setw(6) << cell(ifda) << std::setw(18) << rec
         << std::setw(17) << gen_count << "\n";
    nlohmann::json row{{"n", n},
                       {"FDA", fda ? nlohmann::json(*fda) : nlohmann::json()},
                       {"CDA", cda ? nlohmann::json(*cda) : nlohmann::json()},
                       {"IFDA", ifda ? nlohmann::json(*ifda) : nlohmann::json()},
                       {"1-VDA-recurrence", rec},
                       {"1-VDA-generated", gen_count}};
    rows.push_back(std::move(row));
  }
  if (cfg.output == output_format::json) {
    auto j = versioned();
    j["rows"] = std::move(rows);
    j["agree"] = agree;
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
    if (!agree)
      out << "recurrence and generation DISAGREE\n";
  }
  return agree ? exit_ok : exit_failure;
}

// --- closed-form -----------------------------------------------------------

int cmd_closed_form(const config& cfg, std::uint32_t k, std::ostream& out,
                    std::ostream& err) {
  if (k < 2 || k > 16) {
    err << "closed-form: --k must be in [2, 16]\n";
    return exit_usage;
  }
  const std::uint32_t n = std::uint32_t{1} << k;
  const closed_form_values formula = closed_form(n);
  const complexity_row rec = recurrence_table(n)[n - 1];
  const vda_config vc{cfg.rounding, true};
  const closed_form_values generated{
      generated_count(count_family::sr, n, vc),
      generated_count(count_family::single_leaf, n, vc),
      generated_count(count_family::dipterous, n, vc)};
  const closed_form_values recurrence{rec.t, rec.t_hat, *rec.t_hathat};
  const bool match = formula == recurrence && formula == generated;

  if (cfg.output == output_format::json) {
    auto values = [](const closed_form_values& v) {
      return nlohmann::json{
          {"T", v.t}, {"T_hat", v.t_hat}, {"T_hathat", v.t_hathat}};
    };
    auto j = versioned();
    j["k"] = k;
    j["n"] = n;
    j["closed_form"] = values(formula);
    j["recurrence"] = values(recurrence);
    j["generated"] = values(generated);
    j["match"] = match;
    out << j.dump(2) << "\n";
  } else {
    out << "n = " << n << " (k = " << k << ")\n";
    out << std::left << std::setw(10) << "" << std::right << std::setw(14)
        << "closed-form" << std::setw(14) << "recurrence" << std::setw(14)
        << "generated" << "\n";
    auto line = [&](const char* name, std::uint64_t a, std::uint64_t b,
                    std::uint64_t c) {
      out << std::left << std::setw(10) << name << std::right << std::setw(14)
          << a << std::setw(14) << b << std::setw(14) << c << "\n";
    };
    line("T", formula.t, recurrence.t, generated.t);
    line("T_hat", formula.t_hat, recurrence.t_hat, generated.t_hat);
    line("T_hathat", formula.t_hathat, recurrence.t_hathat,
         generated.t_hathat);
    out << "verdict: " << (match ? "match" : "MISMATCH") << "\n";
  }
  return match ? exit_ok : exit_failure;
}

// --- dot -------------------------------------------------------------------

int cmd_dot(const config& cfg, const std::string& sub, std::ostream& out) {
  labeled_digraph g = build_sr(cfg.n);
  if (!sub.empty()) {
    auto [src, dst] = parse_sub(sub);
    g = induced_subgraph(g, src, dst);
  }
  out << to_dot(g);
  return exit_ok;
}

// --- report ----------------------------------------------------------------

int cmd_report(const config& cfg, std::ostream& out) {
  const discrepancy_report report = build_discrepancy_report();
  if (cfg.output == output_format::json)
    out << to_json(report).dump(2) << "\n";
  else
    out << to_text(report);
  return exit_ok;
}

// --- asymptotic ------------------------------------------------------------

int cmd_asymptotic(const config& cfg, const std::vector<std::uint64_t>& ns,
                   std::ostream& out) {
  const asymptotic_result r = asymptotic_check(ns);
  const double target = boost::rational_cast<double>(leading_coefficient());
  if (cfg.output == output_format::json) {
    auto j = versioned();
    j["target"] = target;
    auto samples = nlohmann::json::array();
    for (const auto& s : r.samples)
      samples.push_back({{"n", s.n}, {"T", s.t}, {"ratio", s.ratio}});
    j["samples"] = std::move(samples);
    j["converging"] =
        r.converging ? nlohmann::json(*r.converging) : nlohmann::json();
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "target 154/135 = " << std::setprecision(6) << target << "\n";
  for (const auto& s : r.samples)
    out << "  n=" << s.n << "  T=" << s.t << "  T/n^log2(6)=" << s.ratio
        << "\n";
  if (r.converging)
    out << (*r.converging ? "converging\n" : "NOT converging\n");
  return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Factored expressions for square rhomboids by one-vertex "
               "decomposition",
               "rhomboid"};
  app.require_subcommand(1);
  app.footer(terminal_help);

  config cfg;
  std::string rounding = "ceil";
  std::string output = "text";

  auto* gen = app.add_subcommand("gen", "Generate the expression of SR(n)");
  gen_args ga;
  gen->add_option("n", cfg.n, "Size of the square rhomboid")->required();
  gen->add_flag("--count-only", ga.count_only, "Print only the literal count");
  gen->add_option("--sub", ga.sub, "Subexpression for SRC,DST instead of b1,bn");
  gen->add_flag("--juxtapose", ga.juxtapose, "Omit '*' between factors");
  gen->add_flag("--ast", ga.ast, "Include the JSON AST (with --output json)");
  add_rounding(*gen, rounding);
  add_common(*gen, output);

  auto* verify = app.add_subcommand(
      "verify", "Check the generated expression against the path-sum");
  std::string mode = "exact";
  verify->add_option("n", cfg.n, "Size of the square rhomboid")->required();
  verify->add_option("--mode", mode, "Oracle to use")
      ->check(CLI::IsMember({"exact", "fingerprint"}))
      ->capture_default_str();
  verify->add_option("--trials", cfg.trials, "Fingerprint trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Fingerprint seed")
      ->capture_default_str();
  verify->add_option("--prime", cfg.prime, "Fingerprint modulus (prime)")
      ->capture_default_str();
  verify->add_option("--limit", cfg.limit, "Exact-mode expansion cap")
      ->capture_default_str();
  add_rounding(*verify, rounding);
  add_common(*verify, output);

  auto* table = app.add_subcommand(
      "table", "Literal counts next to the published comparison table");
  std::uint32_t from = 4, to = 10;
  table->add_option("--from", from, "First n")->capture_default_str();
  table->add_option("--to", to, "Last n")->capture_default_str();
  add_rounding(*table, rounding);
  add_common(*table, output);

  auto* closed = app.add_subcommand(
      "closed-form", "Compare closed form, recurrence and generation at 2^k");
  std::uint32_t k = 0;
  closed->add_option("--k", k, "Exponent, n = 2^k")->required();
  add_rounding(*closed, rounding);
  add_common(*closed, output);

  auto* dot = app.add_subcommand("dot", "Graphviz export of SR(n)");
  std::string dot_sub;
  dot->add_option("n", cfg.n, "Size of the square rhomboid")->required();
  dot->add_option("--sub", dot_sub, "Induced subgraph SRC,DST");

  auto* report = app.add_subcommand(
      "report", "Published base values and formulas checked against oracles");
  add_common(*report, output);

  auto* asym = app.add_subcommand(
      "asymptotic", "T(n)/n^log2(6) against the leading coefficient");
  std::vector<std::uint64_t> samples{16, 32, 64};
  asym->add_option("--samples", samples, "Powers of two >= 4")
      ->delimiter(',')
      ->capture_default_str();
  add_common(*asym, output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  cfg.rounding = parse_rounding(rounding);
  cfg.output = parse_output(output);

  try {
    if (!is_prime(cfg.prime))
      throw error(errc::domain, "--prime " + std::to_string(cfg.prime) +
                                    " is not prime");
    if (*gen)
      return cmd_gen(cfg, ga, out);
    if (*verify)
      return cmd_verify(cfg, mode, out);
    if (*table)
      return cmd_table(cfg, from, to, out, err);
    if (*closed)
      return cmd_closed_form(cfg, k, out, err);
    if (*dot)
      return cmd_dot(cfg, dot_sub, out);
    if (*report)
      return cmd_report(cfg, out);
    if (*asym)
      return cmd_asymptotic(cfg, samples, out);
  } catch (const error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return e.code() == errc::integrity ? exit_failure : exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}

} // namespace rhomboid::cli
