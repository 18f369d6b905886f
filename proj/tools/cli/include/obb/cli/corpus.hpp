#pragma once

// Seeded random problem generators for property tests and `obb gen random`.

#include <cstdint>
#include <random>

#include "obb/cli/problem.hpp"

namespace obb::cli {

struct IdealParams {
  std::size_t max_vars = 4;
  std::size_t max_gens = 5;
  std::size_t max_degree = 5;
  std::size_t max_terms = 4;
  int max_coefficient = 10;  // bound on numerators and denominators
};

/// Homogeneous polynomials under the standard grading with a random base
/// ordering.
Problem random_ideal(std::mt19937_64& rng, const IdealParams& params = {});

struct MonomialParams {
  std::size_t max_gens = 8;
  std::size_t max_vars = 4;
  Exponent max_exponent = 6;
  std::size_t max_rank = 1;
};

/// Pairwise distinct monomial generators (leading-term instances).
Problem random_monomials(std::mt19937_64& rng, const MonomialParams& params = {});

}  // namespace obb::cli
