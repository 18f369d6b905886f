#include <doctest.h>

#include <algorithm>
#include <random>

#include "obb/cli/commands.hpp"
#include "obb/cli/corpus.hpp"
#include "obb/cli/problem.hpp"
#include "obb/engine.hpp"
#include "obb/oracle.hpp"

using namespace obb;

namespace {

const char* const kEx3 =
    "vars: x, y, z\nordering: deglex\ngens:\nx^3*z^2 + x^2*y^2*z, x^3*y^8, y^10*z^2\n";

EngineConfig config(const cli::Problem& p, Strategy s = Strategy::kCkr) {
  EngineConfig cfg;
  cfg.ordering = p.ordering;
  cfg.strategy = s;
  return cfg;
}

std::vector<std::string> labels(std::span<const CriticalPair> pairs) {
  std::vector<std::string> out;
  for (const auto& p : pairs) out.push_back(p.label());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("ex3 basis and pair bookkeeping") {
  const cli::Problem p = cli::parse_problem(kEx3);
  for (const Strategy s : {Strategy::kNaive, Strategy::kGm, Strategy::kCkr}) {
    EngineConfig cfg = config(p, s);
    cfg.trace = true;
    const EngineResult r = buchberger_with_min(p.generators, cfg);
    REQUIRE(r.basis.size() == 4);
    for (std::size_t k = 0; k < 3; ++k) CHECK(r.basis[k] == p.generators[k]);
    CHECK(r.basis[3] == cli::parse_vector("x^2*y^10*z", p));
    CHECK(r.v_min == std::vector<std::size_t>{0, 1, 2});
    CHECK(is_groebner_basis(r.basis, p.ordering));
  }
  EngineConfig cfg = config(p);
  cfg.trace = true;
  const EngineResult r = optimized_buchberger(p.generators, cfg);
  CHECK(labels(r.treated) == std::vector<std::string>{"(1,2)", "(2,4)", "(3,4)"});
  CHECK(r.stats.m23_kills == 1);
  CHECK(r.stats.theta == 3);
  bool rule1 = false;
  bool rule2 = false;
  for (const auto& e : r.trace) {
    if (e.kind == TraceKind::kRule1Deleted && e.i == 1 && e.j == 2) rule1 = true;
    if (e.kind == TraceKind::kRule2Deleted && e.i == 0 && e.j == 3) rule2 = true;
  }
  CHECK(rule1);
  CHECK(rule2);
}

TEST_CASE("treated pairs match the standalone minimalization on ex3") {
  const cli::Problem p = cli::parse_problem(kEx3);
  const EngineResult r = optimized_buchberger(p.generators, config(p));
  cli::Problem lead = p;
  lead.generators = r.basis;
  const cli::MinPairsReport m = cli::run_minpairs(lead);
  CHECK(labels(r.treated) == labels(m.bam.theta));
}

TEST_CASE("truncation on ex3") {
  const cli::Problem p = cli::parse_problem(kEx3);
  EngineConfig cfg = config(p);
  cfg.truncation = MultiDegree{13};
  const EngineResult r = buchberger_with_min(p.generators, cfg);
  CHECK(r.basis.size() == 4);
  for (const auto& t : r.treated) CHECK(lex_compare(t.degree, MultiDegree{13}) <= 0);
  cfg.truncation = MultiDegree{4};
  CHECK_THROWS_AS(buchberger_with_min(p.generators, cfg), InvalidArgument);
  cfg.truncation = MultiDegree{4, 1};
  CHECK_THROWS_AS(buchberger_with_min(p.generators, cfg), DimensionError);
}

TEST_CASE("intake") {
  const cli::Problem p = cli::parse_problem("vars: x, y\ngens:\nx, x^2, y, 0, y\n");
  const EngineResult r = buchberger_with_min(p.generators, config(p));
  CHECK(r.v_min == std::vector<std::size_t>{0, 2});
  CHECK(r.intake.zero_dropped == 1);
  CHECK(r.intake.duplicates_dropped == 1);
  CHECK(r.stats.treated == 1);

  const cli::Problem single = cli::parse_problem("vars: x, y\ngens:\nx*y^2\n");
  const EngineResult s = optimized_buchberger(single.generators, config(single));
  CHECK(s.basis == single.generators);
  CHECK(s.treated.empty());

  const cli::Problem empty = cli::parse_problem("vars: x\ngens:\n");
  CHECK(buchberger_with_min(empty.generators, config(empty)).basis.empty());

  const cli::Problem inhom = cli::parse_problem("vars: x, y\ngens:\nx^2, x + y^2\n");
  try {
    buchberger_with_min(inhom.generators, config(inhom));
    FAIL("expected NonHomogeneousError");
  } catch (const NonHomogeneousError& e) {
    CHECK(e.generator() == 1);
  }

  const cli::Problem neg = cli::parse_problem("vars: x, y\ngrading: 1 -1\ngens:\nx*y\n");
  CHECK(neg.warnings.size() == 1);
  CHECK_THROWS_AS(buchberger_with_min(neg.generators, config(neg)), MathDomainError);
}

TEST_CASE("non degree compatible orderings are flagged") {
  const cli::Problem p = cli::parse_problem("vars: x, y\nordering: lex\ngens:\nx^2 - y^2, x*y\n");
  const EngineResult r = buchberger_with_min(p.generators, config(p));
  CHECK_FALSE(r.degree_compatible);
  CHECK(is_groebner_basis(r.basis, p.ordering));
}

TEST_CASE("multigraded modules") {
  const cli::Problem p = cli::parse_problem(
      "vars: x, y, z\ngrading: 1 1 1\ngrading: 0 1 2\nrank: 2\nshifts: 0,0 1,-1\n"
      "ordering: degrevlex:pot\ngens:\n[x*y, z], [x^2*y, x*z], [x^2*z, y*z], [x^3*y, 0]\n");
  const auto expected = reduced_form(naive_gb(p.generators, p.ordering), p.ordering);
  for (const Strategy s : {Strategy::kNaive, Strategy::kGm, Strategy::kCkr}) {
    const EngineResult r = buchberger_with_min(p.generators, config(p, s));
    CHECK(reduced_form(r.basis, p.ordering) == expected);
    CHECK(is_groebner_basis(r.basis, p.ordering));
    for (std::size_t k = 1; k < r.basis.size(); ++k) {
      CHECK(lex_compare(is_homogeneous(r.basis[k - 1])->value,
                        is_homogeneous(r.basis[k])->value) <= 0);
    }
  }
}

TEST_CASE("minimal generators inside a reduced basis") {
  const cli::Problem xy = cli::parse_problem("vars: x, y\ngens:\nx, y\n");
  CHECK(min_gens_of_reduced_gb(xy.generators, config(xy)) == std::vector<std::size_t>{0, 1});

  const cli::Problem sq = cli::parse_problem("vars: x, y\ngens:\nx^2, x*y, y^2\n");
  CHECK(min_gens_of_reduced_gb(sq.generators, config(sq)).size() ==
        minimalize(sq.generators).mu);

  const cli::Problem p = cli::parse_problem(kEx3);
  const auto reduced = reduced_form(optimized_buchberger(p.generators, config(p)).basis,
                                    p.ordering);
  REQUIRE(reduced.size() == 4);
  const auto vmin = min_gens_of_reduced_gb(reduced, config(p));
  CHECK(vmin.size() == 3);
  CHECK(vmin.size() == minimalize(reduced).mu);
  CHECK(std::find(vmin.begin(), vmin.end(), 3u) == vmin.end());

  const cli::Problem bad = cli::parse_problem("vars: x, y\ngens:\nx, x + y\n");
  CHECK_THROWS_AS(min_gens_of_reduced_gb(bad.generators, config(bad)), InvalidArgument);
}

TEST_CASE("tail reduction changes tails only") {
  const cli::Problem p = cli::homogenize(cli::gen_cyclic(5));
  EngineConfig plain = config(p);
  plain.reduce_tails = false;
  const EngineResult a = buchberger_with_min(p.generators, config(p));
  const EngineResult b = buchberger_with_min(p.generators, plain);
  REQUIRE(a.basis.size() == b.basis.size());
  CHECK(a.stats.sigma_total == b.stats.sigma_total);
  CHECK(reduced_form(a.basis, p.ordering) == reduced_form(b.basis, p.ordering));
  CHECK(is_groebner_basis(a.basis, p.ordering));
  // Same-degree elements never contain each other's leading terms.
  for (std::size_t i = 0; i < a.basis.size(); ++i) {
    const ModuleTerm li = leading_monomial(a.basis[i], p.ordering).module_term();
    for (std::size_t k = 0; k < a.basis.size(); ++k) {
      if (k != i) CHECK(a.basis[k].coefficient(li) == 0);
    }
  }
}

TEST_CASE("time limit") {
  const cli::Problem p = cli::homogenize(cli::gen_cyclic(6));
  EngineConfig cfg = config(p);
  cfg.time_limit = std::chrono::milliseconds(1);
  CHECK_THROWS_AS(buchberger_with_min(p.generators, cfg), ResourceLimitError);
}

TEST_CASE("V_min is irredundant and treated pairs match minimalization") {
  std::mt19937_64 rng(43);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const cli::Problem p = cli::random_ideal(rng);
    const EngineResult r = optimized_buchberger(p.generators, config(p));
    std::vector<ModuleVector> earlier;
    for (const std::size_t k : r.v_min) {
      if (!earlier.empty()) {
        CHECK_FALSE(is_member(p.generators[k], naive_gb(earlier, p.ordering), p.ordering));
      }
      earlier.push_back(p.generators[k]);
    }
    CHECK(r.v_min.size() == minimalize(p.generators).mu);
    cli::Problem lead = p;
    lead.generators = r.basis;
    if (r.treated.size() != cli::run_minpairs(lead).bam.theta.size()) ++mismatches;
  }
  MESSAGE("treated-pair count differed from |Theta| on " << mismatches << " of 40 instances");
}
