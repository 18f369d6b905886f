#pragma once

// Critical syzygies in their closed two-term form, and head reduction of
// one critical syzygy by another.

#include <span>
#include <vector>

#include "obb/algebra.hpp"
#include "obb/reduction.hpp"

namespace obb {

/// first_coeff * first_term * eps_first + second_coeff * second_term *
/// eps_second with first < second (0-based syzygy indices).
struct SyzygyElement {
  std::size_t first = 0;
  std::size_t second = 0;
  Term first_term;
  Term second_term;
  Coefficient first_coeff;
  Coefficient second_coeff;

  friend bool operator==(const SyzygyElement&, const SyzygyElement&) = default;
};

/// sigma_ij = lcm(t_i,t_j)/(c_i t_i) eps_i - lcm(t_i,t_j)/(c_j t_j) eps_j.
/// Requires i < j and equal components.
SyzygyElement critical_syzygy(std::size_t i, std::size_t j,
                              std::span<const LeadingData> leading);

/// sigma_ij -> t * sigma_i'j = sign * cofactor * sigma_kl, with k, l the
/// smaller and larger of i, i'.
struct HeadReductionStep {
  Term multiplier;  // t, cancels the eps_j terms
  Term cofactor;    // the leftover term in front of sigma_kl
  int sign = 1;
  std::size_t k = 0;
  std::size_t l = 0;

  bool cofactor_is_one() const { return cofactor.is_one(); }
};

/// u * s - (c/c') * v * by = scale * cofactor * sigma_kl, where s = sigma_ij,
/// by = sigma_i'j, c and c' are their eps_j coefficients and u, v make the
/// eps_j terms cancel (u = lcm(t_ji, t_ji')/t_ji, v = lcm/t_ji').
struct SyzygyCombination {
  Term s_multiplier;
  Term by_multiplier;
  Term cofactor;
  Coefficient scale;
  std::size_t k = 0;
  std::size_t l = 0;
};

/// The S-vector of two critical syzygies sharing the index j. Throws
/// InvalidArgument if the j indices differ or i == i'.
SyzygyCombination syzygy_s_vector(const SyzygyElement& s,
                                  const SyzygyElement& by,
                                  std::span<const LeadingData> leading);

/// Head reduction of `s` = sigma_ij by `by` = sigma_i'j. Throws
/// InvalidArgument if the j indices differ, i == i', or t_ji' does not
/// divide t_ji.
HeadReductionStep head_reduce_step(const SyzygyElement& s,
                                   const SyzygyElement& by,
                                   std::span<const LeadingData> leading);

/// The graded free module F' = (+)_i P(-d_i), d_i = deg_W(t_i e_gamma_i).
ContextPtr syzygy_context(std::span<const LeadingData> leading,
                          const ModuleContext& ctx);

/// The syzygy as a vector of F' (component = syzygy index).
ModuleVector to_module_vector(const SyzygyElement& s, const ContextPtr& syz_ctx);

/// sum_k a_k * c_k t_k e_gamma_k for the syzygy's two terms; zero exactly
/// when s is a syzygy of the leading monomials.
ModuleVector apply_to_leading(const SyzygyElement& s,
                              std::span<const LeadingData> leading,
                              const ContextPtr& ctx);

}  // namespace obb
