#pragma once

// Leading monomials, S-vectors, the division algorithm and interreduction.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "obb/algebra.hpp"
#include "obb/ordering.hpp"

namespace obb {

enum class ReductionMode {
  kFull,      // reduce every term (normal remainder)
  kHeadOnly,  // stop once the leading term is irreducible
};

/// LM(g) = coefficient * term * e_component.
struct LeadingData {
  Coefficient coefficient;
  Term term;
  std::size_t component = 0;

  ModuleTerm module_term() const { return {term, component}; }
};

/// Throws InvalidArgument on the zero vector.
LeadingData leading_monomial(const ModuleVector& v, const TermOrder& order);

/// lcm/(c_i t_i) g_i - lcm/(c_j t_j) g_j. Throws InvalidArgument when the
/// leading terms lie in different components.
ModuleVector s_vector(const ModuleVector& gi, const ModuleVector& gj,
                      const TermOrder& order);

/// v scaled so that its leading coefficient is 1 (zero stays zero).
ModuleVector make_monic(const ModuleVector& v, const TermOrder& order);

/// Result of dividing v by a tuple (g_1..g_s): v = sum q_i g_i + remainder.
/// Quotients live in the scalar ring of v's module.
struct DivisionResult {
  ModuleVector remainder;
  std::vector<ModuleVector> quotients;
};

/// An ordered tuple of non-zero divisors with cached leading data. Divisor
/// lookup returns the first matching element in tuple order.
class ReducerSet {
 public:
  explicit ReducerSet(const TermOrder& order) : order_(&order) {}

  /// Appends a non-zero vector and returns its index.
  std::size_t add(ModuleVector g);
  /// Replaces element i; the new vector must be non-zero.
  void replace(std::size_t i, ModuleVector g);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const ModuleVector& element(std::size_t i) const { return elements_[i]; }
  const std::vector<ModuleVector>& elements() const noexcept {
    return elements_;
  }
  const LeadingData& leading(std::size_t i) const { return leading_[i]; }
  const TermOrder& order() const noexcept { return *order_; }

  /// First element (in tuple order) whose leading term divides t.
  std::optional<std::size_t> find_divisor(const ModuleTerm& t) const;

  /// The normal remainder of v, computed fraction-free.
  ModuleVector reduce(const ModuleVector& v,
                      ReductionMode mode = ReductionMode::kFull) const;
  /// A non-zero rational multiple of reduce(v, mode) with coprime integer
  /// coefficients and positive leading coefficient.
  ModuleVector reduce_primitive(const ModuleVector& v,
                                ReductionMode mode = ReductionMode::kFull) const;
  /// reduce_primitive of the S-vector of elements i and j (same component).
  ModuleVector reduce_s_vector(std::size_t i, std::size_t j,
                               ReductionMode mode = ReductionMode::kFull) const;
  /// Removes LT(g_s) from the tail of every other element whose support
  /// contains it, by subtracting a multiple of g_s. Leading terms do not
  /// change. Returns the indices of the elements that changed.
  std::vector<std::size_t> reduce_tails_by(std::size_t s);
  /// Division with rational arithmetic and tracked quotients.
  DivisionResult divide(const ModuleVector& v) const;

  /// Integer coefficient entry; integer vectors are kept in descending order.
  struct IntegerTerm {
    ModuleTerm term;
    mpz_class coeff;
  };
  using IntegerVector = std::vector<IntegerTerm>;

 private:
  struct Cached {
    std::uint64_t mask = 0;
    std::size_t leading_entry = 0;  // position of the leading entry in storage
  };
  void index(std::size_t i);
  void refresh(std::size_t i);
  IntegerVector to_integer(const ModuleVector& v, Coefficient& scale) const;
  IntegerVector reduce_integer(IntegerVector p, ReductionMode mode,
                               Coefficient& scale) const;
  ModuleVector from_integer(const ContextPtr& ctx, const IntegerVector& p,
                            const Coefficient& scale) const;

  const TermOrder* order_;
  std::vector<ModuleVector> elements_;
  std::vector<LeadingData> leading_;
  std::vector<Cached> cache_;
  std::vector<IntegerVector> integer_;  // primitive copies, descending
  std::vector<std::vector<std::size_t>> by_component_;
};

/// NR_{order,G}(v); the first divisor in list order wins.
ModuleVector normal_remainder(const ModuleVector& v,
                              std::span<const ModuleVector> divisors,
                              const TermOrder& order,
                              ReductionMode mode = ReductionMode::kFull);

/// Division with tracked quotients.
DivisionResult divide(const ModuleVector& v,
                      std::span<const ModuleVector> divisors,
                      const TermOrder& order);

/// Monic, pairwise fully reduced generating set of the same module, sorted
/// by increasing leading term.
std::vector<ModuleVector> interreduce(std::span<const ModuleVector> generators,
                                      const TermOrder& order);

/// Bit i is set when x_{i mod 64} occurs in t.
std::uint64_t support_mask(const Term& t) noexcept;

}  // namespace obb
