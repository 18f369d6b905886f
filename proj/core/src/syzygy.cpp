#include "obb/syzygy.hpp"

#include <algorithm>
#include <stdexcept>

#include "obb/error.hpp"

namespace obb {

SyzygyElement critical_syzygy(std::size_t i, std::size_t j,
                              std::span<const LeadingData> leading) {
  if (i >= j || j >= leading.size()) {
    throw InvalidArgument("critical syzygy needs indices i < j within range");
  }
  const LeadingData& li = leading[i];
  const LeadingData& lj = leading[j];
  if (li.component != lj.component) {
    throw InvalidArgument("critical syzygy of leading terms in different components");
  }
  const Term l = lcm(li.term, lj.term);
  return {i,
          j,
          quotient(l, li.term),
          quotient(l, lj.term),
          Coefficient(1) / li.coefficient,
          Coefficient(-1) / lj.coefficient};
}

SyzygyCombination syzygy_s_vector(const SyzygyElement& s,
                                  const SyzygyElement& by,
                                  std::span<const LeadingData> leading) {
  if (s.second != by.second) {
    throw InvalidArgument("syzygy S-vector needs matching j indices");
  }
  if (s.first == by.first) {
    throw InvalidArgument("syzygy S-vector of an element with itself");
  }
  SyzygyCombination out;
  const Term l = lcm(s.second_term, by.second_term);
  out.s_multiplier = quotient(l, s.second_term);
  out.by_multiplier = quotient(l, by.second_term);
  const Coefficient factor = s.second_coeff / by.second_coeff;

  // What is left: u * (s.first part) and -factor * v * (by.first part).
  const std::size_t i = s.first;
  const std::size_t ip = by.first;
  const Term ti = s.first_term * out.s_multiplier;
  const Term tip = by.first_term * out.by_multiplier;
  const Coefficient ci = s.first_coeff;
  const Coefficient cip = -factor * by.first_coeff;

  out.k = std::min(i, ip);
  out.l = std::max(i, ip);
  const SyzygyElement target = critical_syzygy(out.k, out.l, leading);
  const Term& term_k = i < ip ? ti : tip;
  const Term& term_l = i < ip ? tip : ti;
  const Coefficient& coeff_k = i < ip ? ci : cip;
  const Coefficient& coeff_l = i < ip ? cip : ci;

  out.cofactor = quotient(term_k, target.first_term);
  if (!(quotient(term_l, target.second_term) == out.cofactor)) {
    throw std::logic_error("syzygy S-vector is not a multiple of sigma_kl");
  }
  out.scale = coeff_k / target.first_coeff;
  if (out.scale != coeff_l / target.second_coeff) {
    throw std::logic_error("syzygy S-vector has unexpected coefficients");
  }
  return out;
}

HeadReductionStep head_reduce_step(const SyzygyElement& s,
                                   const SyzygyElement& by,
                                   std::span<const LeadingData> leading) {
  if (s.second != by.second) {
    throw InvalidArgument("head reduction needs matching j indices");
  }
  if (s.first == by.first) {
    throw InvalidArgument("a critical syzygy cannot head reduce itself");
  }
  if (!divides(by.second_term, s.second_term)) {
    throw InvalidArgument("reducer head term does not divide the head term");
  }
  const SyzygyCombination c = syzygy_s_vector(s, by, leading);
  if (c.scale != 1 && c.scale != -1) {
    throw std::logic_error("head reduction result has unexpected coefficients");
  }
  HeadReductionStep step;
  step.multiplier = c.by_multiplier;
  step.cofactor = c.cofactor;
  step.sign = c.scale > 0 ? 1 : -1;
  step.k = c.k;
  step.l = c.l;
  return step;
}

ContextPtr syzygy_context(std::span<const LeadingData> leading,
                          const ModuleContext& ctx) {
  ShiftVector shifts;
  shifts.reserve(leading.size());
  for (const auto& l : leading) shifts.push_back(ctx.degree(l.module_term()));
  if (shifts.empty()) shifts.push_back(MultiDegree(ctx.degree_rank()));
  return ModuleContext::make(ctx.grading(), std::move(shifts));
}

ModuleVector to_module_vector(const SyzygyElement& s, const ContextPtr& syz_ctx) {
  std::vector<ModuleVector::Entry> e;
  e.push_back({{s.first_term, s.first}, s.first_coeff});
  e.push_back({{s.second_term, s.second}, s.second_coeff});
  return ModuleVector(syz_ctx, std::move(e));
}

ModuleVector apply_to_leading(const SyzygyElement& s,
                              std::span<const LeadingData> leading,
                              const ContextPtr& ctx) {
  const LeadingData& a = leading[s.first];
  const LeadingData& b = leading[s.second];
  std::vector<ModuleVector::Entry> e;
  e.push_back({{s.first_term * a.term, a.component}, s.first_coeff * a.coefficient});
  e.push_back({{s.second_term * b.term, b.component}, s.second_coeff * b.coefficient});
  return ModuleVector(ctx, std::move(e));
}

}  // namespace obb
