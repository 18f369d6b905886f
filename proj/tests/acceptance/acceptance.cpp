// Acceptance runner: one PASS/FAIL line per criterion. `--only N` limits the
// run to criterion N.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "obb/cli/commands.hpp"
#include "obb/cli/corpus.hpp"
#include "obb/cli/problem.hpp"
#include "obb/engine.hpp"
#include "support/properties.hpp"

namespace {

using namespace obb;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<std::string> labels(std::span<const CriticalPair> pairs) {
  std::vector<std::string> out;
  for (const auto& p : pairs) out.push_back(p.label());
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k];
  return out + "}";
}

void expect(Outcome& o, bool ok, const std::string& what) {
  if (ok) return;
  o.pass = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += what;
}

void expect_set(Outcome& o, const std::string& name, std::span<const CriticalPair> got,
                std::vector<std::string> want) {
  std::sort(want.begin(), want.end());
  const auto have = labels(got);
  expect(o, have == want, name + " = " + join(have) + ", expected " + join(want));
}

const char* const kEx1 =
    "vars: x, y, z\nordering: deglex\ngens:\nx^3*z^2, x^3*y^4, y^5*z^2, x^2*y^5*z\n";
const char* const kEx2 =
    "vars: x1, x2, x3, x4, x5\nordering: deglex\ngens:\n"
    "x2^2*x3^6*x4*x5^2, x1^8*x2*x4*x5^4, x1^8*x2^2*x3^6, x1^8*x3^6*x5^4\n";
const char* const kEx3 =
    "vars: x, y, z\nordering: deglex\ngens:\n"
    "x^3*z^2 + x^2*y^2*z, x^3*y^8, y^10*z^2\n";

Outcome criterion1() {
  Outcome o;
  const cli::MinPairsReport r = cli::run_minpairs(cli::parse_problem(kEx1));
  expect(o, r.sigma.size() == 6, "#(Sigma) = " + std::to_string(r.sigma.size()));
  expect_set(o, "Sigma''", r.sigma2, {"(1,2)", "(2,4)", "(3,4)", "(1,3)"});
  expect_set(o, "Sigma'''", r.sigma3, {"(1,2)", "(2,4)", "(3,4)", "(1,3)"});
  expect_set(o, "Theta", r.bam.theta, {"(1,2)", "(2,4)", "(3,4)"});
  return o;
}

Outcome criterion2() {
  Outcome o;
  const cli::MinPairsReport r = cli::run_minpairs(cli::parse_problem(kEx2));
  expect_set(o, "Sigma''", r.sigma2, {"(1,2)", "(1,3)", "(2,4)", "(3,4)"});
  expect_set(o, "Theta", r.bam.theta, {"(1,3)", "(2,4)", "(3,4)"});
  std::size_t steps = 0;
  bool killed = false;
  for (const auto& e : r.bam.trace) {
    if (e.kind == TraceKind::kHeadReduction) ++steps;
    if (e.kind == TraceKind::kKilledReduced && e.i == 0 && e.j == 1) killed = true;
  }
  expect(o, steps == 1, std::to_string(steps) + " head-reduction steps logged");
  expect(o, killed, "no log entry removing (1,2) after a head reduction");
  expect(o, r.bam.m48_kills == 1 && r.bam.m23_kills == 0, "M23/M48 counters");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const cli::Problem p = cli::parse_problem(kEx3);
  EngineConfig cfg;
  cfg.ordering = p.ordering;
  cfg.trace = true;
  const EngineResult r = optimized_buchberger(p.generators, cfg);
  expect(o, r.basis.size() == 4, "#(G) = " + std::to_string(r.basis.size()));
  const ModuleVector g4 = cli::parse_vector("x^2*y^10*z", p);
  expect(o, std::find(r.basis.begin(), r.basis.end(), g4) != r.basis.end(),
         "x^2*y^10*z missing from G");
  expect_set(o, "treated", r.treated, {"(1,2)", "(2,4)", "(3,4)"});

  bool bstar = false;
  bool killed = false;
  for (const auto& e : r.trace) {
    if (e.kind == TraceKind::kBStarAdded && e.i == 1 && e.j == 2) bstar = true;
    if (e.kind == TraceKind::kKilledEqualHead && e.i == 0 && e.j == 2 && e.other_i == 1 &&
        e.other_j == 2 && e.degree == MultiDegree{15}) {
      killed = true;
    }
  }
  expect(o, bstar, "(2,3) never entered B*");
  expect(o, killed, "(1,3) not removed by MinPairs via (2,3) in degree 15");
  expect(o, r.stats.m23_kills + r.stats.m48_kills == 1, "MinPairs kill count");

  std::vector<LeadingData> lead;
  for (const auto& g : r.basis) lead.push_back(leading_monomial(g, cfg.ordering));
  if (lead.size() == 4) {
    const CriticalPair p23 = make_critical_pair(1, 2, lead, *p.ctx);
    const CriticalPair p24 = make_critical_pair(1, 3, lead, *p.ctx);
    const CriticalPair p34 = make_critical_pair(2, 3, lead, *p.ctx);
    const auto term = [&](const std::string& s) {
      return cli::parse_vector(s, p).terms()[0].term.term;
    };
    expect(o, p24.t_ij == term("y^2*z") && p23.t_ij == term("y^2*z^2") &&
                  properly_divides(p24.t_ij, p23.t_ij),
           "t_24 = y^2*z must properly divide t_23 = y^2*z^2");
    expect(o, p34.t_ij == term("x^2") && p23.t_ji == term("x^3") &&
                  properly_divides(p34.t_ij, p23.t_ji),
           "t_34 = x^2 must properly divide t_32 = x^3");
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const cli::Problem p = cli::homogenize(cli::gen_cyclic(7));
  EngineConfig cfg;
  cfg.ordering = OrderingSpec(BaseOrder::kDegRevLex);
  cfg.strategy = Strategy::kCkr;
  cfg.time_limit = std::chrono::minutes(10);
  try {
    const EngineResult r = buchberger_with_min(p.generators, cfg);
    expect(o, r.basis.size() == 443, "#(G) = " + std::to_string(r.basis.size()));
    expect(o, r.stats.sigma_total == 97903,
           "#(Sigma) = " + std::to_string(r.stats.sigma_total));
    std::ostringstream os;
    os << "#(G)=" << r.basis.size() << " #(Sigma)=" << r.stats.sigma_total
       << " #(Sigma'')=" << r.stats.sigma2 << " B=" << r.stats.rule3_kills
       << " M23=" << r.stats.m23_kills << " M48=" << r.stats.m48_kills
       << " #(Theta)=" << r.stats.theta;
    if (o.pass) o.detail = os.str();
    else o.detail += " (" + os.str() + ")";
  } catch (const ResourceLimitError& e) {
    o.pass = false;
    o.detail = e.what();
  }
  return o;
}

template <class Gen>
Outcome corpus_property(std::size_t count, std::uint64_t seed0, Gen make,
                        const std::function<std::string(const cli::Problem&)>& check) {
  Outcome o;
  std::size_t failures = 0;
  for (std::size_t k = 0; k < count; ++k) {
    std::mt19937_64 rng(seed0 + k);
    const cli::Problem p = make(rng);
    const std::string err = check(p);
    if (err.empty()) continue;
    if (failures++ == 0) o.detail = "seed " + std::to_string(seed0 + k) + ": " + err;
  }
  o.pass = failures == 0;
  o.detail = std::to_string(count) + " instances, " + std::to_string(failures) +
             " failures" + (o.detail.empty() ? "" : "; first: " + o.detail);
  return o;
}

cli::Problem ideal(std::mt19937_64& rng) { return cli::random_ideal(rng); }
cli::Problem monomials(std::mt19937_64& rng) { return cli::random_monomials(rng); }

constexpr std::uint64_t kIdealSeed = 5000;
constexpr std::uint64_t kMonomialSeed = 6000;
constexpr std::uint64_t kTruncationSeed = 9000;

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int k = 1; k + 1 < argc; ++k) {
    if (std::string(argv[k]) == "--only") only = std::atoi(argv[k + 1]);
  }
  const std::vector<Criterion> criteria{
      {1, "ex1 minpairs", 1.0, criterion1},
      {2, "ex2 minpairs", 1.0, criterion2},
      {3, "ex3 optimized run", 1.0, criterion3},
      {4, "cyclic-7 scale check", 600.0, criterion4},
      {5, "strategy equivalence", 300.0,
       [] {
         return corpus_property(200, kIdealSeed, ideal, test::check_strategy_equivalence);
       }},
      {6, "minimality oracle", 300.0,
       [] { return corpus_property(100, kMonomialSeed, monomials, test::check_minimality); }},
      {7, "dominance", 300.0,
       [] { return corpus_property(100, kMonomialSeed, monomials, test::check_dominance); }},
      {8, "reduced Sigma''", 300.0,
       [] {
         return corpus_property(100, kMonomialSeed, monomials, test::check_reduced_sigma);
       }},
      {9, "truncation", 300.0,
       [] { return corpus_property(50, kTruncationSeed, ideal, test::check_truncation); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.number != only) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) +
                  " s budget";
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.number << "  "
              << c.title << "  (" << std::fixed;
    std::cout.precision(3);
    std::cout << secs << " s)  " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
