#pragma once

// Brute-force references: a textbook Buchberger algorithm without any pair
// criteria, submodule membership, and mu(M) by degree-ordered membership.

#include <span>
#include <vector>

#include "obb/algebra.hpp"
#include "obb/ordering.hpp"
#include "obb/pairset.hpp"
#include "obb/reduction.hpp"

namespace obb {

/// Groebner basis by processing every critical pair in FIFO order. Does not
/// require homogeneous input. Zero vectors are ignored.
std::vector<ModuleVector> naive_gb(std::span<const ModuleVector> generators,
                                   const TermOrder& order);

/// True iff v reduces to zero over `gb`, which must be a Groebner basis.
bool is_member(const ModuleVector& v, std::span<const ModuleVector> gb,
               const TermOrder& order);

struct OracleReport {
  std::size_t mu = 0;
  std::vector<std::size_t> indices;  // kept generators, in processing order
};

/// Stable sort by degree, keep each generator that is not in the module of
/// the generators kept before it. Requires homogeneous input under a
/// positive grading.
OracleReport minimalize(std::span<const ModuleVector> generators,
                        const OrderingSpec& order =
                            OrderingSpec(BaseOrder::kDegRevLex,
                                         ModuleExtension::kPositionOverTerm));

/// The critical syzygies of `pairs` as vectors of the free module
/// (+)_i P(-d_i) built from `leading`.
std::vector<ModuleVector> syzygy_vectors(std::span<const CriticalPair> pairs,
                                         std::span<const LeadingData> leading,
                                         const ModuleContext& ctx);

/// mu of the module generated by the critical syzygies of `pairs`.
std::size_t syzygy_mu(std::span<const CriticalPair> pairs,
                      std::span<const LeadingData> leading,
                      const ModuleContext& ctx);

}  // namespace obb
