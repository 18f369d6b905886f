#pragma once

// Homogeneous Buchberger drivers: plain, with minimalization of the input,
// minimal generators inside a reduced basis, and the optimized variant that
// treats only a minimal set of critical pairs.

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "obb/algebra.hpp"
#include "obb/ordering.hpp"
#include "obb/pairset.hpp"
#include "obb/reduction.hpp"

namespace obb {

struct EngineConfig {
  OrderingSpec ordering;
  Strategy strategy = Strategy::kCkr;
  std::optional<MultiDegree> truncation;
  ReductionMode reduction = ReductionMode::kFull;
  // Keep same-degree basis elements reduced against each new element. This
  // changes tails only and keeps coefficients small.
  bool reduce_tails = true;
  bool trace = false;
  std::optional<std::chrono::milliseconds> time_limit;
};

struct IntakeReport {
  std::size_t zero_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

struct EngineResult {
  std::vector<ModuleVector> basis;   // G, monic, non-decreasing degrees
  std::vector<std::size_t> v_min;    // indices into the input tuple
  std::vector<CriticalPair> treated; // pairs whose S-vector was reduced
  PairStats stats;
  IntakeReport intake;
  std::vector<TraceEvent> trace;
  bool degree_compatible = true;
  double seconds = 0.0;
};

/// Full run; the strategy decides which pairs get treated. Throws
/// NonHomogeneousError, MathDomainError (grading not positive),
/// InvalidArgument (mixed contexts, bad truncation) and ResourceLimitError
/// (time limit).
EngineResult buchberger_with_min(std::span<const ModuleVector> generators,
                                 const EngineConfig& cfg);

/// G only.
std::vector<ModuleVector> homogeneous_buchberger(
    std::span<const ModuleVector> generators, const EngineConfig& cfg);

/// Same as buchberger_with_min with the optimized pair strategy forced.
EngineResult optimized_buchberger(std::span<const ModuleVector> generators,
                                  EngineConfig cfg);

/// Minimal generators contained in a reduced basis. Throws InvalidArgument
/// if `reduced_basis` is not the reduced Groebner basis of its module.
std::vector<std::size_t> min_gens_of_reduced_gb(
    std::span<const ModuleVector> reduced_basis, const EngineConfig& cfg);

/// Interreduced, monic, sorted by leading term.
std::vector<ModuleVector> reduced_form(std::span<const ModuleVector> basis,
                                       const TermOrder& order);

/// Every S-vector of `basis` reduces to zero.
bool is_groebner_basis(std::span<const ModuleVector> basis,
                       const TermOrder& order);

/// Monic, leading terms minimal, no tail term divisible by a leading term,
/// and a Groebner basis.
bool is_reduced_groebner_basis(std::span<const ModuleVector> basis,
                               const TermOrder& order);

}  // namespace obb
