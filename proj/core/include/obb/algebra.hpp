#pragma once

// Shared vocabulary: exact coefficients, terms, module terms, degree
// matrices, multidegrees and graded module vectors.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace obb {

/// Exact rational coefficient. GMP keeps it canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Coefficient = mpq_class;

using Exponent = std::uint32_t;

/// A power product x_1^a_1 ... x_n^a_n stored as a dense exponent vector.
class Term {
 public:
  Term() = default;
  /// The unit term 1 in `num_vars` indeterminates.
  explicit Term(std::size_t num_vars) : exps_(num_vars, 0) {}
  Term(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {}
  explicit Term(std::span<const Exponent> exps)
      : exps_(exps.begin(), exps.end()) {}

  /// x_index^power in `num_vars` indeterminates.
  static Term variable(std::size_t num_vars, std::size_t index,
                       Exponent power = 1);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e) { exps_[i] = e; }
  std::span<const Exponent> exponents() const noexcept {
    return {exps_.data(), exps_.size()};
  }

  bool is_one() const noexcept;
  std::uint64_t total_degree() const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept {
    return a.exps_ == b.exps_;
  }

 private:
  boost::container::small_vector<Exponent, 12> exps_;
};

/// Lexicographic comparison of raw exponent vectors. This is a storage
/// order for containers, not a term ordering chosen by the user.
std::strong_ordering storage_compare(const Term& a, const Term& b) noexcept;

struct TermStorageLess {
  bool operator()(const Term& a, const Term& b) const noexcept {
    return storage_compare(a, b) < 0;
  }
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

/// Product; throws ResourceLimitError on exponent overflow.
Term operator*(const Term& a, const Term& b);
Term lcm(const Term& a, const Term& b);
Term gcd(const Term& a, const Term& b);
/// True iff t divides u.
bool divides(const Term& t, const Term& u);
/// True iff t divides u and t != u.
bool properly_divides(const Term& t, const Term& u);
bool coprime(const Term& t, const Term& u);
/// t / u; throws InvalidArgument unless u divides t.
Term quotient(const Term& t, const Term& u);

/// t * e_component. Components are 0-based.
struct ModuleTerm {
  Term term;
  std::size_t component = 0;

  friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

std::strong_ordering storage_compare(const ModuleTerm& a,
                                     const ModuleTerm& b) noexcept;

/// Element of Z^m, compared lexicographically.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::size_t m) : values_(m, 0) {}
  MultiDegree(std::initializer_list<std::int64_t> v) : values_(v) {}
  explicit MultiDegree(std::vector<std::int64_t> v) : values_(std::move(v)) {}

  std::size_t size() const noexcept { return values_.size(); }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  bool is_zero() const noexcept;

  MultiDegree& operator+=(const MultiDegree& other);
  MultiDegree& operator-=(const MultiDegree& other);
  friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) {
    return a += b;
  }
  friend MultiDegree operator-(MultiDegree a, const MultiDegree& b) {
    return a -= b;
  }

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend std::strong_ordering operator<=>(const MultiDegree& a,
                                          const MultiDegree& b);

  /// "5" for m = 1, "3,2" otherwise.
  std::string to_string() const;

 private:
  std::vector<std::int64_t> values_;
};

/// Lex comparison on Z^m; first differing index decides. Throws
/// DimensionError on length mismatch.
std::strong_ordering lex_compare(const MultiDegree& a, const MultiDegree& b);

using ShiftVector = std::vector<MultiDegree>;

/// The m x n integer matrix W defining a Z^m-grading of K[x_1..x_n].
class DegreeMatrix {
 public:
  DegreeMatrix() = default;
  explicit DegreeMatrix(std::vector<std::vector<std::int64_t>> rows);

  /// The standard grading W = (1, ..., 1).
  static DegreeMatrix standard(std::size_t num_vars);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const std::vector<std::vector<std::int64_t>>& row_data() const noexcept {
    return rows_;
  }

  std::size_t rank() const noexcept { return rank_; }
  bool is_positive() const noexcept { return positive_; }
  bool is_standard() const noexcept;

  /// W * exponents(t). Throws DimensionError / ResourceLimitError.
  MultiDegree degree(const Term& t) const;

  friend bool operator==(const DegreeMatrix& a, const DegreeMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_;
  }

 private:
  std::vector<std::vector<std::int64_t>> rows_;
  std::size_t cols_ = 0;
  std::size_t rank_ = 0;
  bool positive_ = false;
};

/// rk(W) = m, no zero column, and the first non-zero entry of every column
/// is positive.
bool is_positive_grading(const DegreeMatrix& w);

/// deg_W(t e_gamma) = W * alpha + delta_gamma.
MultiDegree deg_w(const ModuleTerm& t, const DegreeMatrix& w,
                  const ShiftVector& shifts);

/// The graded free module F = (+)_{i=1..r} P(-delta_i) over P = K[x_1..x_n]
/// graded by W.
class ModuleContext {
 public:
  ModuleContext(DegreeMatrix grading, ShiftVector shifts);

  /// Polynomial ring in `num_vars` indeterminates with standard grading, r=1.
  static std::shared_ptr<const ModuleContext> standard(std::size_t num_vars,
                                                       std::size_t rank = 1);
  static std::shared_ptr<const ModuleContext> make(DegreeMatrix grading,
                                                   ShiftVector shifts);

  std::size_t num_vars() const noexcept { return grading_.cols(); }
  std::size_t rank() const noexcept { return shifts_.size(); }
  std::size_t degree_rank() const noexcept { return grading_.rows(); }
  const DegreeMatrix& grading() const noexcept { return grading_; }
  const ShiftVector& shifts() const noexcept { return shifts_; }

  MultiDegree degree(const Term& t) const { return grading_.degree(t); }
  MultiDegree degree(const ModuleTerm& t) const;

  /// The base ring P as a rank-one module with zero shift.
  std::shared_ptr<const ModuleContext> scalar_ring() const;

  friend bool operator==(const ModuleContext& a, const ModuleContext& b) {
    return a.grading_ == b.grading_ && a.shifts_ == b.shifts_;
  }

 private:
  DegreeMatrix grading_;
  ShiftVector shifts_;
};

using ContextPtr = std::shared_ptr<const ModuleContext>;

/// Finitely supported map ModuleTerm -> Coefficient without zero entries.
/// Entries are kept in storage order (component, then raw exponents); the
/// term ordering used by the algorithms is applied by the callers.
class ModuleVector {
 public:
  struct Entry {
    ModuleTerm term;
    Coefficient coeff;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  ModuleVector() = default;
  explicit ModuleVector(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  /// Combines repeated terms, drops zeros and validates dimensions.
  ModuleVector(ContextPtr ctx, std::vector<Entry> entries);

  static ModuleVector monomial(ContextPtr ctx, Coefficient c, ModuleTerm t);

  const ContextPtr& context_ptr() const noexcept { return ctx_; }
  const ModuleContext& context() const;

  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const Entry> terms() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  Coefficient coefficient(const ModuleTerm& t) const;

  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector& operator-=(const ModuleVector& other);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) {
    return a += b;
  }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) {
    return a -= b;
  }
  ModuleVector operator-() const;

  /// c * t * this.
  ModuleVector multiplied(const Term& t, const Coefficient& c) const;
  ModuleVector scaled(const Coefficient& c) const;

  /// Entries are already in storage order and non-zero; no re-validation.
  static ModuleVector from_sorted(ContextPtr ctx, std::vector<Entry> entries);

  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  void combine(const ModuleVector& other, int sign);

  ContextPtr ctx_;
  std::vector<Entry> entries_;
};

/// Degree of a homogeneous vector; the zero vector is homogeneous of every
/// degree and reports `any_degree`.
struct VectorDegree {
  bool any_degree = false;
  MultiDegree value;
};

/// The common degree of all support terms, or nullopt if v is not
/// homogeneous.
std::optional<VectorDegree> is_homogeneous(const ModuleVector& v);

}  // namespace obb
