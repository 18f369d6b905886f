#include "obb/cli/corpus.hpp"

#include <algorithm>

namespace obb::cli {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::string> var_names(std::size_t n) {
  static const char* const kNames[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(n <= 4 ? kNames[k] : "x" + std::to_string(k + 1));
  }
  return out;
}

OrderingSpec random_ordering(std::mt19937_64& rng) {
  static const BaseOrder kBases[] = {BaseOrder::kLex, BaseOrder::kDegLex,
                                     BaseOrder::kDegRevLex};
  const BaseOrder base = kBases[uniform(rng, 0, 2)];
  const ModuleExtension ext = uniform(rng, 0, 1) == 0
                                  ? ModuleExtension::kTermOverPosition
                                  : ModuleExtension::kPositionOverTerm;
  return OrderingSpec(base, ext);
}

// A random term of total degree d in n variables.
Term random_term(std::mt19937_64& rng, std::size_t n, std::size_t d) {
  Term t(n);
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t v = uniform(rng, 0, n - 1);
    t.set(v, t.exponents()[v] + 1);
  }
  return t;
}

}  // namespace

Problem random_ideal(std::mt19937_64& rng, const IdealParams& params) {
  Problem p;
  const std::size_t n = uniform(rng, 1, params.max_vars);
  p.vars = var_names(n);
  p.ctx = ModuleContext::standard(n);
  p.ordering = random_ordering(rng);
  const std::size_t s = uniform(rng, 1, params.max_gens);
  std::uniform_int_distribution<int> num(-params.max_coefficient, params.max_coefficient);
  std::uniform_int_distribution<int> den(1, params.max_coefficient);
  for (std::size_t g = 0; g < s; ++g) {
    const std::size_t d = uniform(rng, 1, params.max_degree);
    const std::size_t terms = uniform(rng, 1, params.max_terms);
    std::vector<ModuleVector::Entry> entries;
    for (std::size_t k = 0; k < terms; ++k) {
      int a = 0;
      while (a == 0) a = num(rng);
      Coefficient c(a, den(rng));
      c.canonicalize();
      entries.push_back({{random_term(rng, n, d), 0}, std::move(c)});
    }
    ModuleVector v(p.ctx, std::move(entries));
    if (!v.is_zero()) p.generators.push_back(std::move(v));
  }
  return p;
}

Problem random_monomials(std::mt19937_64& rng, const MonomialParams& params) {
  Problem p;
  const std::size_t n = uniform(rng, 1, params.max_vars);
  const std::size_t r = uniform(rng, 1, params.max_rank);
  p.vars = var_names(n);
  p.ctx = ModuleContext::standard(n, r);
  p.ordering = random_ordering(rng);
  const std::size_t s = uniform(rng, 1, params.max_gens);
  std::vector<ModuleTerm> seen;
  for (std::size_t attempt = 0; seen.size() < s && attempt < 64 * s; ++attempt) {
    Term t(n);
    for (std::size_t v = 0; v < n; ++v) {
      t.set(v, static_cast<Exponent>(uniform(rng, 0, params.max_exponent)));
    }
    ModuleTerm mt{std::move(t), uniform(rng, 0, r - 1)};
    if (std::find(seen.begin(), seen.end(), mt) != seen.end()) continue;
    seen.push_back(mt);
    p.generators.push_back(ModuleVector::monomial(p.ctx, Coefficient(1), std::move(mt)));
  }
  return p;
}

}  // namespace obb::cli
