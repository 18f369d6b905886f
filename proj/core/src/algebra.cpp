#include "obb/algebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "obb/error.hpp"

namespace obb {

namespace {

void require_same_vars(const Term& a, const Term& b, const char* op) {
  if (a.num_vars() != b.num_vars()) {
    throw DimensionError(std::string(op) + ": terms have " +
                         std::to_string(a.num_vars()) + " and " +
                         std::to_string(b.num_vars()) + " indeterminates");
  }
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ResourceLimitError("multidegree overflows 64-bit integers");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ResourceLimitError("multidegree overflows 64-bit integers");
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Term

Term Term::variable(std::size_t num_vars, std::size_t index, Exponent power) {
  if (index >= num_vars) {
    throw DimensionError("variable index " + std::to_string(index) +
                         " out of range");
  }
  Term t(num_vars);
  t.exps_[index] = power;
  return t;
}

bool Term::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

std::uint64_t Term::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

std::strong_ordering storage_compare(const Term& a, const Term& b) noexcept {
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  const std::size_t n = std::min(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (ea[i] != eb[i]) return ea[i] <=> eb[i];
  }
  return ea.size() <=> eb.size();
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : t.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Term operator*(const Term& a, const Term& b) {
  require_same_vars(a, b, "product");
  Term out(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    Exponent e;
    if (__builtin_add_overflow(a[i], b[i], &e)) {
      throw ResourceLimitError("exponent overflow in term product");
    }
    out.set(i, e);
  }
  return out;
}

Term lcm(const Term& a, const Term& b) {
  require_same_vars(a, b, "lcm");
  Term out(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    out.set(i, std::max(a[i], b[i]));
  }
  return out;
}

Term gcd(const Term& a, const Term& b) {
  require_same_vars(a, b, "gcd");
  Term out(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    out.set(i, std::min(a[i], b[i]));
  }
  return out;
}

bool divides(const Term& t, const Term& u) {
  require_same_vars(t, u, "divides");
  for (std::size_t i = 0; i < t.num_vars(); ++i) {
    if (t[i] > u[i]) return false;
  }
  return true;
}

bool properly_divides(const Term& t, const Term& u) {
  return divides(t, u) && !(t == u);
}

bool coprime(const Term& t, const Term& u) {
  require_same_vars(t, u, "coprime");
  for (std::size_t i = 0; i < t.num_vars(); ++i) {
    if (t[i] != 0 && u[i] != 0) return false;
  }
  return true;
}

Term quotient(const Term& t, const Term& u) {
  if (!divides(u, t)) {
    throw InvalidArgument("quotient: divisor does not divide the dividend");
  }
  Term out(t.num_vars());
  for (std::size_t i = 0; i < t.num_vars(); ++i) out.set(i, t[i] - u[i]);
  return out;
}

std::strong_ordering storage_compare(const ModuleTerm& a,
                                     const ModuleTerm& b) noexcept {
  if (a.component != b.component) return a.component <=> b.component;
  return storage_compare(a.term, b.term);
}

// ---------------------------------------------------------- MultiDegree

bool MultiDegree::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(),
                     [](std::int64_t v) { return v == 0; });
}

MultiDegree& MultiDegree::operator+=(const MultiDegree& other) {
  if (size() != other.size()) {
    throw DimensionError("multidegree length mismatch in addition");
  }
  for (std::size_t i = 0; i < size(); ++i) {
    values_[i] = checked_add(values_[i], other.values_[i]);
  }
  return *this;
}

MultiDegree& MultiDegree::operator-=(const MultiDegree& other) {
  if (size() != other.size()) {
    throw DimensionError("multidegree length mismatch in subtraction");
  }
  for (std::size_t i = 0; i < size(); ++i) {
    values_[i] = checked_add(values_[i], -other.values_[i]);
  }
  return *this;
}

std::strong_ordering operator<=>(const MultiDegree& a, const MultiDegree& b) {
  return lex_compare(a, b);
}

std::strong_ordering lex_compare(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) {
    throw DimensionError("cannot compare multidegrees of lengths " +
                         std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::string MultiDegree::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

// --------------------------------------------------------- DegreeMatrix

namespace {

std::size_t matrix_rank(const std::vector<std::vector<std::int64_t>>& rows,
                        std::size_t cols) {
  std::vector<std::vector<mpq_class>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

DegreeMatrix::DegreeMatrix(std::vector<std::vector<std::int64_t>> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty()) throw DimensionError("degree matrix needs at least one row");
  cols_ = rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) {
      throw DimensionError("degree matrix rows have different lengths");
    }
  }
  rank_ = matrix_rank(rows_, cols_);
  positive_ = rank_ == rows_.size();
  for (std::size_t c = 0; c < cols_ && positive_; ++c) {
    std::size_t r = 0;
    while (r < rows_.size() && rows_[r][c] == 0) ++r;
    positive_ = r < rows_.size() && rows_[r][c] > 0;
  }
}

DegreeMatrix DegreeMatrix::standard(std::size_t num_vars) {
  return DegreeMatrix({std::vector<std::int64_t>(num_vars, 1)});
}

bool DegreeMatrix::is_standard() const noexcept {
  return rows_.size() == 1 &&
         std::all_of(rows_[0].begin(), rows_[0].end(),
                     [](std::int64_t v) { return v == 1; });
}

MultiDegree DegreeMatrix::degree(const Term& t) const {
  if (t.num_vars() != cols_) {
    throw DimensionError("term has " + std::to_string(t.num_vars()) +
                         " indeterminates, grading expects " +
                         std::to_string(cols_));
  }
  std::vector<std::int64_t> d(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (t[c] == 0) continue;
      acc = checked_add(acc, checked_mul(rows_[r][c], t[c]));
    }
    d[r] = acc;
  }
  return MultiDegree(std::move(d));
}

bool is_positive_grading(const DegreeMatrix& w) { return w.is_positive(); }

MultiDegree deg_w(const ModuleTerm& t, const DegreeMatrix& w,
                  const ShiftVector& shifts) {
  if (t.component >= shifts.size()) {
    throw DimensionError("component " + std::to_string(t.component + 1) +
                         " exceeds module rank " +
                         std::to_string(shifts.size()));
  }
  const MultiDegree& shift = shifts[t.component];
  if (shift.size() != w.rows()) {
    throw DimensionError("shift length does not match the grading");
  }
  return w.degree(t.term) + shift;
}

// -------------------------------------------------------- ModuleContext

ModuleContext::ModuleContext(DegreeMatrix grading, ShiftVector shifts)
    : grading_(std::move(grading)), shifts_(std::move(shifts)) {
  if (shifts_.empty()) throw DimensionError("module rank must be at least 1");
  for (const auto& s : shifts_) {
    if (s.size() != grading_.rows()) {
      throw DimensionError("shift has length " + std::to_string(s.size()) +
                           ", grading has " + std::to_string(grading_.rows()) +
                           " rows");
    }
  }
}

std::shared_ptr<const ModuleContext> ModuleContext::standard(
    std::size_t num_vars, std::size_t rank) {
  return make(DegreeMatrix::standard(num_vars),
              ShiftVector(rank, MultiDegree(1)));
}

std::shared_ptr<const ModuleContext> ModuleContext::make(DegreeMatrix grading,
                                                         ShiftVector shifts) {
  return std::make_shared<const ModuleContext>(std::move(grading),
                                               std::move(shifts));
}

MultiDegree ModuleContext::degree(const ModuleTerm& t) const {
  return deg_w(t, grading_, shifts_);
}

std::shared_ptr<const ModuleContext> ModuleContext::scalar_ring() const {
  return make(grading_, ShiftVector{MultiDegree(grading_.rows())});
}

// --------------------------------------------------------- ModuleVector

namespace {

bool entry_less(const ModuleVector::Entry& a, const ModuleVector::Entry& b) {
  return storage_compare(a.term, b.term) < 0;
}

}  // namespace

ModuleVector::ModuleVector(ContextPtr ctx, std::vector<Entry> entries)
    : ctx_(std::move(ctx)) {
  if (!ctx_) throw InvalidArgument("module vector needs a context");
  for (const auto& e : entries) {
    if (e.term.term.num_vars() != ctx_->num_vars()) {
      throw DimensionError("term has " +
                           std::to_string(e.term.term.num_vars()) +
                           " indeterminates, ring has " +
                           std::to_string(ctx_->num_vars()));
    }
    if (e.term.component >= ctx_->rank()) {
      throw DimensionError("component " + std::to_string(e.term.component + 1) +
                           " exceeds module rank " +
                           std::to_string(ctx_->rank()));
    }
  }
  std::stable_sort(entries.begin(), entries.end(), entry_less);
  for (auto& e : entries) {
    e.coeff.canonicalize();
    if (!entries_.empty() && entries_.back().term == e.term) {
      entries_.back().coeff += e.coeff;
      if (entries_.back().coeff == 0) entries_.pop_back();
    } else if (e.coeff != 0) {
      entries_.push_back(std::move(e));
    }
  }
}

ModuleVector ModuleVector::monomial(ContextPtr ctx, Coefficient c,
                                    ModuleTerm t) {
  std::vector<Entry> e;
  e.push_back({std::move(t), std::move(c)});
  return ModuleVector(std::move(ctx), std::move(e));
}

ModuleVector ModuleVector::from_sorted(ContextPtr ctx,
                                       std::vector<Entry> entries) {
  ModuleVector v(std::move(ctx));
  v.entries_ = std::move(entries);
  return v;
}

const ModuleContext& ModuleVector::context() const {
  if (!ctx_) throw InvalidArgument("module vector has no context");
  return *ctx_;
}

Coefficient ModuleVector::coefficient(const ModuleTerm& t) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), t,
      [](const Entry& e, const ModuleTerm& k) {
        return storage_compare(e.term, k) < 0;
      });
  if (it != entries_.end() && it->term == t) return it->coeff;
  return 0;
}

void ModuleVector::combine(const ModuleVector& other, int sign) {
  if (!ctx_) {
    ctx_ = other.ctx_;
  } else if (other.ctx_ && other.ctx_ != ctx_ && !(*other.ctx_ == *ctx_)) {
    throw DimensionError("module vectors live in different modules");
  }
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() ||
        (a != entries_.end() && storage_compare(a->term, b->term) < 0)) {
      out.push_back(std::move(*a++));
    } else if (a == entries_.end() || storage_compare(b->term, a->term) < 0) {
      out.push_back(*b++);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Coefficient c = a->coeff;
      if (sign < 0) c -= b->coeff; else c += b->coeff;
      if (c != 0) out.push_back({std::move(a->term), std::move(c)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  combine(other, 1);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
  combine(other, -1);
  return *this;
}

ModuleVector ModuleVector::operator-() const {
  ModuleVector out = *this;
  for (auto& e : out.entries_) e.coeff = -e.coeff;
  return out;
}

ModuleVector ModuleVector::multiplied(const Term& t,
                                      const Coefficient& c) const {
  if (c == 0) return ModuleVector(ctx_);
  std::vector<Entry> out;
  out.reserve(entries_.size());
  // Multiplication by a term preserves the storage order.
  for (const auto& e : entries_) {
    out.push_back({{e.term.term * t, e.term.component}, e.coeff * c});
  }
  return from_sorted(ctx_, std::move(out));
}

ModuleVector ModuleVector::scaled(const Coefficient& c) const {
  if (c == 0) return ModuleVector(ctx_);
  ModuleVector out = *this;
  for (auto& e : out.entries_) e.coeff *= c;
  return out;
}

std::optional<VectorDegree> is_homogeneous(const ModuleVector& v) {
  if (v.is_zero()) return VectorDegree{true, {}};
  const ModuleContext& ctx = v.context();
  MultiDegree d = ctx.degree(v.terms().front().term);
  for (const auto& e : v.terms().subspan(1)) {
    if (!(ctx.degree(e.term) == d)) return std::nullopt;
  }
  return VectorDegree{false, std::move(d)};
}

}  // namespace obb
