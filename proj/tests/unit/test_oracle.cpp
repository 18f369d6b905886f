#include <doctest.h>

#include <algorithm>
#include <random>

#include "obb/cli/corpus.hpp"
#include "obb/cli/problem.hpp"
#include "obb/engine.hpp"
#include "obb/oracle.hpp"
#include "obb/syzygy.hpp"

using namespace obb;

namespace {

cli::Problem problem(const std::string& gens, const char* vars = "x, y, z") {
  return cli::parse_problem(std::string("vars: ") + vars + "\nordering: deglex\ngens:\n" + gens);
}

}  // namespace

TEST_CASE("naive Buchberger") {
  const auto mono = problem("x^2*y");
  CHECK(naive_gb(mono.generators, mono.ordering) == mono.generators);
  const auto xy = problem("x, y");
  CHECK(naive_gb(xy.generators, xy.ordering) == xy.generators);

  const auto ex3 = problem("x^3*z^2 + x^2*y^2*z, x^3*y^8, y^10*z^2");
  EngineConfig cfg;
  cfg.ordering = ex3.ordering;
  CHECK(reduced_form(naive_gb(ex3.generators, ex3.ordering), ex3.ordering) ==
        reduced_form(optimized_buchberger(ex3.generators, cfg).basis, ex3.ordering));
}

TEST_CASE("membership") {
  const auto p = problem("x");
  CHECK(is_member(cli::parse_vector("x^2", p), p.generators, p.ordering));
  CHECK_FALSE(is_member(cli::parse_vector("y", p), p.generators, p.ordering));
}

TEST_CASE("ex1 syzygy membership") {
  const auto p = problem("x^3*z^2, x^3*y^4, y^5*z^2, x^2*y^5*z");
  std::vector<LeadingData> lead;
  for (const auto& g : p.generators) lead.push_back(leading_monomial(g, p.ordering));
  const ContextPtr syz = syzygy_context(lead, *p.ctx);
  auto sigma = [&](std::size_t i, std::size_t j) {
    return to_module_vector(critical_syzygy(i - 1, j - 1, lead), syz);
  };
  const OrderingSpec pot(BaseOrder::kDegRevLex, ModuleExtension::kPositionOverTerm);
  const std::vector<ModuleVector> span{sigma(1, 2), sigma(2, 4), sigma(3, 4)};
  CHECK(is_member(sigma(1, 3), naive_gb(span, pot), pot));
  // sigma_13 = y sigma_12 + z sigma_24 - x sigma_34
  const ModuleVector combo = sigma(1, 2).multiplied(Term{0, 1, 0}, 1) +
                             sigma(2, 4).multiplied(Term{0, 0, 1}, 1) -
                             sigma(3, 4).multiplied(Term{1, 0, 0}, 1);
  CHECK(combo == sigma(1, 3));
}

TEST_CASE("minimal generator counts") {
  const auto p = problem("x, x^2");
  const OracleReport r = minimalize(p.generators);
  CHECK(r.mu == 1);
  CHECK(r.indices == std::vector<std::size_t>{0});

  const auto ex1 = problem("x^3*z^2, x^3*y^4, y^5*z^2, x^2*y^5*z");
  std::vector<LeadingData> lead;
  for (const auto& g : ex1.generators) lead.push_back(leading_monomial(g, ex1.ordering));
  const auto pairs = build_pairs(lead, *ex1.ctx);
  const auto gm = gm_rules(pairs, lead);
  CHECK(syzygy_mu(gm.sigma2, lead, *ex1.ctx) == 3);
  CHECK(syzygy_mu(pairs, lead, *ex1.ctx) == 3);
}

TEST_CASE("mu does not depend on the order of same-degree generators") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    cli::Problem p = cli::random_ideal(rng, {3, 5, 3, 3, 5});
    const std::size_t mu = minimalize(p.generators).mu;
    std::vector<ModuleVector> shuffled = p.generators;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::stable_sort(shuffled.begin(), shuffled.end(),
                     [](const ModuleVector& a, const ModuleVector& b) {
                       return lex_compare(is_homogeneous(a)->value, is_homogeneous(b)->value) < 0;
                     });
    const OracleReport r = minimalize(shuffled);
    CHECK(r.mu == mu);
    CHECK(r.mu == r.indices.size());
  }
}
