#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "obb/algebra.hpp"

namespace obb {

/// A total, multiplicative well-ordering on module terms.
class TermOrder {
 public:
  virtual ~TermOrder() = default;
  virtual std::strong_ordering compare(const ModuleTerm& a,
                                       const ModuleTerm& b) const = 0;

  bool greater(const ModuleTerm& a, const ModuleTerm& b) const {
    return compare(a, b) > 0;
  }
};

enum class BaseOrder { kLex, kDegLex, kDegRevLex };

/// How a term ordering on T^n is extended to T^n<e_1..e_r>.
enum class ModuleExtension {
  kTermOverPosition,  // compare terms first, components break ties
  kPositionOverTerm,  // compare components first
};

/// Lex, DegLex or DegRevLex on x_1 > ... > x_n, extended to module terms.
/// Components rank by `priority` (highest first); the default is
/// e_1 > e_2 > ... > e_r.
class OrderingSpec final : public TermOrder {
 public:
  explicit OrderingSpec(BaseOrder base = BaseOrder::kDegRevLex,
                        ModuleExtension ext = ModuleExtension::kTermOverPosition,
                        std::vector<std::size_t> priority = {});

  /// Accepts "lex", "deglex", "degrevlex" with optional ":top" / ":pot".
  static OrderingSpec parse(std::string_view name);
  std::string name() const;

  BaseOrder base() const noexcept { return base_; }
  ModuleExtension extension() const noexcept { return ext_; }

  std::strong_ordering compare_terms(const Term& a, const Term& b) const;
  std::strong_ordering compare(const ModuleTerm& a,
                               const ModuleTerm& b) const override;

  friend bool operator==(const OrderingSpec& a, const OrderingSpec& b) {
    return a.base_ == b.base_ && a.ext_ == b.ext_ && a.priority_ == b.priority_;
  }

 private:
  std::strong_ordering compare_components(std::size_t a, std::size_t b) const;

  BaseOrder base_;
  ModuleExtension ext_;
  std::vector<std::size_t> priority_;  // rank of each component, 0 = highest
};

/// True only when the ordering is structurally guaranteed to refine
/// deg_W (including the shifts of `ctx`). Never proves compatibility by
/// search.
bool is_degree_compatible(const OrderingSpec& o, const DegreeMatrix& w);
bool is_degree_compatible(const OrderingSpec& o, const ModuleContext& ctx);

/// Randomized refutation: looks for a pair of module terms with
/// deg_W(a) >Lex deg_W(b) but a <_o b.
std::optional<std::pair<ModuleTerm, ModuleTerm>> find_degree_incompatibility(
    const OrderingSpec& o, const ModuleContext& ctx, std::uint64_t seed = 1,
    std::size_t trials = 2000, Exponent max_exponent = 4);

/// The ordering tau on syzygy terms t*eps_i induced by sigma and the tuple
/// of leading module terms (t_1 e_g1, ..., t_s e_gs): compare the images
/// t*t_i*e_gi under sigma, ties go to the larger index.
/// The component of a syzygy term is the 0-based index i.
class InducedOrdering final : public TermOrder {
 public:
  InducedOrdering(OrderingSpec sigma, std::vector<ModuleTerm> leading);

  const OrderingSpec& sigma() const noexcept { return sigma_; }
  const std::vector<ModuleTerm>& leading_terms() const noexcept {
    return leading_;
  }
  std::size_t size() const noexcept { return leading_.size(); }

  std::strong_ordering compare(const ModuleTerm& a,
                               const ModuleTerm& b) const override;

 private:
  OrderingSpec sigma_;
  std::vector<ModuleTerm> leading_;
};

/// tau_compare for syzygy terms given as (term, index) pairs.
inline std::strong_ordering tau_compare(const InducedOrdering& tau,
                                        const ModuleTerm& a,
                                        const ModuleTerm& b) {
  return tau.compare(a, b);
}

}  // namespace obb
