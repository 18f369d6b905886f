#include "obb/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "obb/cli/corpus.hpp"

namespace obb::cli {

namespace {

using nlohmann::json;

std::string align(const std::vector<std::vector<std::string>>& rows, bool label_column) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      const std::string pad(width[c] - row[c].size(), ' ');
      line += c == 0 && label_column ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string seconds_str(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

std::string labels(std::span<const CriticalPair> pairs) {
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += ' ';
    out += p.label();
  }
  return out.empty() ? "-" : out;
}

json label_array(std::span<const CriticalPair> pairs) {
  json a = json::array();
  for (const auto& p : pairs) a.push_back(p.label());
  return a;
}

std::string read_input(const std::string& file) {
  std::ostringstream buf;
  if (file == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(file);
  if (!in) throw InvalidArgument("cannot read '" + file + "'");
  buf << in.rdbuf();
  return buf.str();
}

MultiDegree parse_degree(const std::string& text) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InvalidArgument("bad degree '" + text + "'");
    }
  }
  if (v.empty()) throw InvalidArgument("bad degree '" + text + "'");
  return MultiDegree(std::move(v));
}

struct Options {
  std::string file;
  std::string ordering;
  std::string strategy = "ckr";
  std::string truncate;
  std::optional<double> time_limit;
  bool json = false;
  bool homogenize = false;
  bool trace = false;
  bool reduced = false;
  bool keep_tails = false;
};

Problem load(const Options& o, std::ostream& err) {
  Problem p = parse_problem(read_input(o.file));
  if (!o.ordering.empty()) p.ordering = OrderingSpec::parse(o.ordering);
  if (o.homogenize) p = homogenize(p);
  for (const auto& w : p.warnings) err << "warning: " << w << '\n';
  return p;
}

EngineConfig config(const Options& o, const Problem& p) {
  EngineConfig cfg;
  cfg.ordering = p.ordering;
  cfg.strategy = parse_strategy(o.strategy);
  if (!o.truncate.empty()) cfg.truncation = parse_degree(o.truncate);
  cfg.trace = o.trace;
  cfg.reduce_tails = !o.keep_tails;
  if (o.time_limit) {
    if (*o.time_limit <= 0) throw InvalidArgument("--time-limit must be positive");
    cfg.time_limit = std::chrono::milliseconds(
        static_cast<std::int64_t>(*o.time_limit * 1000.0));
  }
  return cfg;
}

void print_trace(std::span<const TraceEvent> trace, std::ostream& out) {
  for (const auto& e : trace) out << "  " << e.describe() << '\n';
}

json report_json(const RunReport& r) {
  const PairStats& s = r.stats;
  json j = {{"strategy", to_string(r.strategy)},
            {"ordering", r.ordering},
            {"G", r.basis_size},
            {"Sigma", s.sigma_total},
            {"Sigma2", s.sigma2},
            {"B", s.rule3_kills},
            {"M23", s.m23_kills},
            {"M48", s.m48_kills},
            {"Gain", s.gain()},
            {"treated", s.treated},
            {"zero_reductions", s.zero_reductions},
            {"seconds", r.seconds},
            {"degree_compatible", r.degree_compatible}};
  j["Theta"] = r.strategy == Strategy::kCkr ? json(s.theta) : json(nullptr);
  j["truncation"] = r.truncation ? json(format_degree(*r.truncation)) : json(nullptr);
  return j;
}

int cmd_gb(const Options& o, std::ostream& out, std::ostream& err) {
  const Problem p = load(o, err);
  const EngineConfig cfg = config(o, p);
  const EngineResult r = buchberger_with_min(p.generators, cfg);
  if (!r.degree_compatible) err << "warning: ordering is not degree compatible\n";
  std::vector<ModuleVector> basis = r.basis;
  if (o.reduced) basis = reduced_form(basis, cfg.ordering);
  const RunReport row = make_report(r, cfg);
  if (o.json) {
    json j;
    j["run"] = report_json(row);
    j["basis"] = json::array();
    for (const auto& g : basis) {
      const auto deg = is_homogeneous(g);
      j["basis"].push_back({{"degree", format_degree(deg->value)},
                            {"vector", format_vector(g, p.vars, cfg.ordering)}});
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "# " << basis.size() << (o.reduced ? " reduced" : "") << " elements, ordering "
      << cfg.ordering.name() << ", strategy " << to_string(cfg.strategy) << '\n';
  for (const auto& g : basis) out << format_vector(g, p.vars, cfg.ordering) << '\n';
  if (o.trace) print_trace(r.trace, out);
  return 0;
}

int cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
  const Problem p = load(o, err);
  const EngineConfig cfg = config(o, p);
  const EngineResult r = buchberger_with_min(p.generators, cfg);
  if (!r.degree_compatible) err << "warning: ordering is not degree compatible\n";
  const std::vector<RunReport> rows{make_report(r, cfg)};
  out << (o.json ? render_json(rows) : render_table(rows));
  if (o.trace && !o.json) print_trace(r.trace, out);
  return 0;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const Problem p = load(o, err);
  std::vector<RunReport> rows;
  for (const Strategy s : {Strategy::kGm, Strategy::kCkr}) {
    EngineConfig cfg = config(o, p);
    cfg.strategy = s;
    rows.push_back(make_report(buchberger_with_min(p.generators, cfg), cfg));
  }
  if (rows[0].basis_size != rows[1].basis_size) {
    err << "warning: strategies disagree on #(G)\n";
  }
  out << (o.json ? render_json(rows) : render_table(rows));
  return 0;
}

int cmd_minpairs(const Options& o, std::ostream& out, std::ostream& err) {
  const Problem p = load(o, err);
  out << render_minpairs(run_minpairs(p), o.json, o.trace);
  return 0;
}

void add_common(CLI::App* sub, Options& o, bool engine) {
  sub->add_option("file", o.file, "Problem file, - for stdin")->required();
  sub->add_option("--ordering", o.ordering,
                  "Override the ordering: lex|deglex|degrevlex[:top|:pot]");
  sub->add_flag("--json", o.json, "Machine-readable output");
  sub->add_flag("--homogenize", o.homogenize, "Homogenize with a new smallest variable");
  sub->add_flag("--trace", o.trace, "Print the pair-elimination log");
  if (!engine) return;
  sub->add_option("--truncate", o.truncate, "Stop after degree d (comma-joined for m > 1)");
  sub->add_option("--time-limit", o.time_limit, "Wall-clock budget in seconds");
  sub->add_flag("--keep-tails", o.keep_tails,
                "Do not reduce earlier same-degree elements by new ones");
}

}  // namespace

std::string format_degree(const MultiDegree& d) { return d.to_string(); }

RunReport make_report(const EngineResult& r, const EngineConfig& cfg) {
  RunReport row;
  row.strategy = cfg.strategy;
  row.ordering = cfg.ordering.name();
  row.basis_size = r.basis.size();
  row.stats = r.stats;
  row.seconds = r.seconds;
  row.degree_compatible = r.degree_compatible;
  row.truncation = cfg.truncation;
  return row;
}

std::string render_table(std::span<const RunReport> rows) {
  std::vector<std::vector<std::string>> cells{
      {"strategy", "#(G)", "#(Sigma)", "#(Sigma'')", "B", "M23", "M48", "Gain",
       "#(Theta)", "treated", "time[s]"}};
  for (const auto& r : rows) {
    const PairStats& s = r.stats;
    cells.push_back({to_string(r.strategy), std::to_string(r.basis_size),
                     std::to_string(s.sigma_total), std::to_string(s.sigma2),
                     std::to_string(s.rule3_kills), std::to_string(s.m23_kills),
                     std::to_string(s.m48_kills), std::to_string(s.gain()),
                     r.strategy == Strategy::kCkr ? std::to_string(s.theta) : "-",
                     std::to_string(s.treated), seconds_str(r.seconds)});
  }
  return align(cells, true);
}

std::string render_json(std::span<const RunReport> rows) {
  json j;
  j["runs"] = json::array();
  for (const auto& r : rows) j["runs"].push_back(report_json(r));
  return j.dump(2) + '\n';
}

MinPairsReport run_minpairs(const Problem& p) {
  if (!is_positive_grading(p.ctx->grading())) {
    throw MathDomainError("the grading matrix does not define a positive grading");
  }
  std::vector<LeadingData> leading;
  std::vector<ModuleTerm> terms;
  for (std::size_t k = 0; k < p.generators.size(); ++k) {
    if (p.generators[k].is_zero()) {
      throw InvalidArgument("generator " + std::to_string(k + 1) + " is zero");
    }
    LeadingData lm = leading_monomial(p.generators[k], p.ordering);
    lm.coefficient = 1;
    terms.push_back(lm.module_term());
    leading.push_back(std::move(lm));
  }
  MinPairsReport r;
  r.sigma = build_pairs(leading, *p.ctx);
  GmRulesResult gm = gm_rules(r.sigma, leading);
  r.sigma2 = std::move(gm.sigma2);
  r.sigma3 = std::move(gm.sigma3);
  const InducedOrdering tau(p.ordering, std::move(terms));
  r.bam = sigma_bam(r.sigma2, tau, *p.ctx);
  return r;
}

std::string render_minpairs(const MinPairsReport& r, bool as_json, bool trace) {
  const std::size_t b = r.sigma2.size() - r.sigma3.size();
  const auto gain = static_cast<std::int64_t>(r.bam.m23_kills + r.bam.m48_kills) -
                    static_cast<std::int64_t>(b);
  if (as_json) {
    json j = {{"Sigma", r.sigma.size()},
              {"Sigma2", r.sigma2.size()},
              {"Sigma3", r.sigma3.size()},
              {"B", b},
              {"M23", r.bam.m23_kills},
              {"M48", r.bam.m48_kills},
              {"Gain", gain},
              {"Theta", r.bam.theta.size()},
              {"head_reductions", r.bam.head_reductions},
              {"sigma2_pairs", label_array(r.sigma2)},
              {"sigma3_pairs", label_array(r.sigma3)},
              {"theta_pairs", label_array(r.bam.theta)}};
    if (trace) {
      j["trace"] = json::array();
      for (const auto& e : r.bam.trace) j["trace"].push_back(e.describe());
    }
    return j.dump(2) + '\n';
  }
  std::string out = align(
      {{"#(Sigma)", "#(Sigma'')", "#(Sigma''')", "B", "M23", "M48", "Gain", "#(Theta)",
        "head-reductions"},
       {std::to_string(r.sigma.size()), std::to_string(r.sigma2.size()),
        std::to_string(r.sigma3.size()), std::to_string(b),
        std::to_string(r.bam.m23_kills), std::to_string(r.bam.m48_kills),
        std::to_string(gain), std::to_string(r.bam.theta.size()),
        std::to_string(r.bam.head_reductions)}},
      false);
  out += "Sigma'':  " + labels(r.sigma2) + '\n';
  out += "Sigma''': " + labels(r.sigma3) + '\n';
  out += "Theta:    " + labels(r.bam.theta) + '\n';
  if (trace) {
    for (const auto& e : r.bam.trace) out += "  " + e.describe() + '\n';
  }
  return out;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kParse: return 2;
    case ErrorKind::kMathDomain: return 3;
    case ErrorKind::kResourceLimit: return 4;
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kDimension: return 1;
  }
  return 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Homogeneous Groebner bases that treat a minimal set of critical pairs",
               "obb"};
  app.require_subcommand(1);
  Options o;

  auto* gb = app.add_subcommand("gb", "Compute a Groebner basis");
  add_common(gb, o, true);
  gb->add_option("--strategy", o.strategy, "Pair strategy: naive|gm|ckr");
  gb->add_flag("--reduced", o.reduced, "Print the reduced basis instead of G");

  auto* stats = app.add_subcommand("stats", "Print the pair statistics row of a run");
  add_common(stats, o, true);
  stats->add_option("--strategy", o.strategy, "Pair strategy: naive|gm|ckr");

  auto* minpairs = app.add_subcommand(
      "minpairs", "Pair elimination on the leading terms of the generators only");
  add_common(minpairs, o, false);

  auto* compare = app.add_subcommand("compare", "Run gm and ckr and print both rows");
  add_common(compare, o, true);

  auto* gen = app.add_subcommand("gen", "Print a generated problem");
  gen->require_subcommand(1);
  std::size_t cyclic_n = 0;
  bool gen_homogenize = false;
  auto* cyclic = gen->add_subcommand("cyclic", "The cyclic-n system");
  cyclic->add_option("n", cyclic_n, "Number of variables")->required();
  cyclic->add_flag("--homogenize", gen_homogenize, "Homogenize with a new variable h");
  std::uint64_t seed = 1;
  std::string kind = "ideal";
  auto* random = gen->add_subcommand("random", "A random test instance");
  random->add_option("--seed", seed, "Generator seed");
  random->add_option("--kind", kind, "ideal | monomial")
      ->check(CLI::IsMember({"ideal", "monomial"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gb) return cmd_gb(o, out, err);
    if (*stats) return cmd_stats(o, out, err);
    if (*minpairs) return cmd_minpairs(o, out, err);
    if (*compare) return cmd_compare(o, out, err);
    if (*cyclic) {
      Problem p = gen_cyclic(cyclic_n);
      if (gen_homogenize) p = homogenize(p);
      out << render_problem(p);
      return 0;
    }
    if (*random) {
      std::mt19937_64 rng(seed);
      out << render_problem(kind == "ideal" ? random_ideal(rng) : random_monomials(rng));
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e);
  }
  return 1;
}

}  // namespace obb::cli
