#include "obb/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "obb/error.hpp"

namespace obb {

OrderingSpec::OrderingSpec(BaseOrder base, ModuleExtension ext,
                           std::vector<std::size_t> priority)
    : base_(base), ext_(ext) {
  // `priority` lists components from highest to lowest; store the inverse.
  if (!priority.empty()) {
    std::vector<std::size_t> sorted = priority;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i) {
        throw InvalidArgument("component priority must be a permutation");
      }
    }
    priority_.assign(priority.size(), 0);
    for (std::size_t rank = 0; rank < priority.size(); ++rank) {
      priority_[priority[rank]] = rank;
    }
  }
}

OrderingSpec OrderingSpec::parse(std::string_view name) {
  std::string_view base = name;
  ModuleExtension ext = ModuleExtension::kTermOverPosition;
  if (auto colon = name.find(':'); colon != std::string_view::npos) {
    base = name.substr(0, colon);
    std::string_view suffix = name.substr(colon + 1);
    if (suffix == "top") {
      ext = ModuleExtension::kTermOverPosition;
    } else if (suffix == "pot") {
      ext = ModuleExtension::kPositionOverTerm;
    } else {
      throw InvalidArgument("unknown module extension '" +
                            std::string(suffix) + "' (expected top or pot)");
    }
  }
  if (base == "lex") return OrderingSpec(BaseOrder::kLex, ext);
  if (base == "deglex") return OrderingSpec(BaseOrder::kDegLex, ext);
  if (base == "degrevlex") return OrderingSpec(BaseOrder::kDegRevLex, ext);
  throw InvalidArgument("unknown ordering '" + std::string(base) +
                        "' (expected lex, deglex or degrevlex)");
}

std::string OrderingSpec::name() const {
  std::string out;
  switch (base_) {
    case BaseOrder::kLex: out = "lex"; break;
    case BaseOrder::kDegLex: out = "deglex"; break;
    case BaseOrder::kDegRevLex: out = "degrevlex"; break;
  }
  out += ext_ == ModuleExtension::kTermOverPosition ? ":top" : ":pot";
  return out;
}

std::strong_ordering OrderingSpec::compare_terms(const Term& a,
                                                 const Term& b) const {
  const std::size_t n = a.num_vars();
  if (n != b.num_vars()) {
    throw DimensionError("cannot compare terms over different rings");
  }
  if (base_ != BaseOrder::kLex) {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) return da <=> db;
  }
  if (base_ == BaseOrder::kDegRevLex) {
    for (std::size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering OrderingSpec::compare_components(std::size_t a,
                                                      std::size_t b) const {
  if (a == b) return std::strong_ordering::equal;
  const std::size_t ra = a < priority_.size() ? priority_[a] : a;
  const std::size_t rb = b < priority_.size() ? priority_[b] : b;
  return rb <=> ra;  // lower rank is the larger component
}

std::strong_ordering OrderingSpec::compare(const ModuleTerm& a,
                                           const ModuleTerm& b) const {
  if (ext_ == ModuleExtension::kPositionOverTerm) {
    if (auto c = compare_components(a.component, b.component); c != 0) return c;
    return compare_terms(a.term, b.term);
  }
  if (auto c = compare_terms(a.term, b.term); c != 0) return c;
  return compare_components(a.component, b.component);
}

// ------------------------------------------------ degree compatibility

bool is_degree_compatible(const OrderingSpec& o, const DegreeMatrix& w) {
  if (!w.is_positive()) return false;
  if (w.cols() == 1) return true;  // every positive grading orders x^a by a
  if (o.base() == BaseOrder::kLex) return false;
  // Deg* orderings refine total degree, so W must be a positive multiple
  // of (1, ..., 1).
  if (w.rows() != 1) return false;
  const auto& row = w.row_data().front();
  return std::all_of(row.begin(), row.end(),
                     [&](std::int64_t v) { return v == row.front(); });
}

bool is_degree_compatible(const OrderingSpec& o, const ModuleContext& ctx) {
  if (!is_degree_compatible(o, ctx.grading())) return false;
  if (ctx.rank() == 1) return true;
  if (o.extension() == ModuleExtension::kPositionOverTerm) return false;
  const auto& shifts = ctx.shifts();
  return std::all_of(shifts.begin(), shifts.end(),
                     [&](const MultiDegree& d) { return d == shifts.front(); });
}

std::optional<std::pair<ModuleTerm, ModuleTerm>> find_degree_incompatibility(
    const OrderingSpec& o, const ModuleContext& ctx, std::uint64_t seed,
    std::size_t trials, Exponent max_exponent) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Exponent> exp(0, max_exponent);
  std::uniform_int_distribution<std::size_t> comp(0, ctx.rank() - 1);
  auto random_term = [&] {
    Term t(ctx.num_vars());
    for (std::size_t i = 0; i < ctx.num_vars(); ++i) t.set(i, exp(rng));
    return ModuleTerm{std::move(t), comp(rng)};
  };
  for (std::size_t k = 0; k < trials; ++k) {
    ModuleTerm a = random_term();
    ModuleTerm b = random_term();
    const auto by_degree = lex_compare(ctx.degree(a), ctx.degree(b));
    if (by_degree == 0) continue;
    if (by_degree < 0) std::swap(a, b);
    if (o.compare(a, b) < 0) return std::make_pair(a, b);
  }
  return std::nullopt;
}

// ---------------------------------------------------- induced ordering

InducedOrdering::InducedOrdering(OrderingSpec sigma,
                                 std::vector<ModuleTerm> leading)
    : sigma_(std::move(sigma)), leading_(std::move(leading)) {}

std::strong_ordering InducedOrdering::compare(const ModuleTerm& a,
                                              const ModuleTerm& b) const {
  if (a.component >= leading_.size() || b.component >= leading_.size()) {
    throw DimensionError("syzygy index out of range for induced ordering");
  }
  const ModuleTerm& la = leading_[a.component];
  const ModuleTerm& lb = leading_[b.component];
  const ModuleTerm ia{a.term * la.term, la.component};
  const ModuleTerm ib{b.term * lb.term, lb.component};
  if (auto c = sigma_.compare(ia, ib); c != 0) return c;
  return a.component <=> b.component;
}

}  // namespace obb
