#include "obb/reduction.hpp"

#include <algorithm>
#include <map>

#include "obb/error.hpp"

namespace obb {

namespace {

struct DescendingBy {
  const TermOrder* order;
  bool operator()(const ModuleTerm& a, const ModuleTerm& b) const {
    return order->compare(a, b) > 0;
  }
};

using WorkMap = std::map<ModuleTerm, Coefficient, DescendingBy>;

std::vector<ModuleVector::Entry> to_storage_order(
    std::vector<ModuleVector::Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const ModuleVector::Entry& a, const ModuleVector::Entry& b) {
              return storage_compare(a.term, b.term) < 0;
            });
  return entries;
}

}  // namespace

std::uint64_t support_mask(const Term& t) noexcept {
  std::uint64_t m = 0;
  const auto e = t.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) m |= std::uint64_t{1} << (i % 64);
  }
  return m;
}

LeadingData leading_monomial(const ModuleVector& v, const TermOrder& order) {
  if (v.is_zero()) {
    throw InvalidArgument("the zero vector has no leading monomial");
  }
  const ModuleVector::Entry* best = &v.terms().front();
  for (const auto& e : v.terms().subspan(1)) {
    if (order.compare(e.term, best->term) > 0) best = &e;
  }
  return {best->coeff, best->term.term, best->term.component};
}

ModuleVector s_vector(const ModuleVector& gi, const ModuleVector& gj,
                      const TermOrder& order) {
  const LeadingData li = leading_monomial(gi, order);
  const LeadingData lj = leading_monomial(gj, order);
  if (li.component != lj.component) {
    throw InvalidArgument("S-vector of leading terms in components " +
                          std::to_string(li.component + 1) + " and " +
                          std::to_string(lj.component + 1));
  }
  const Term l = lcm(li.term, lj.term);
  ModuleVector out =
      gi.multiplied(quotient(l, li.term), Coefficient(1) / li.coefficient);
  out -= gj.multiplied(quotient(l, lj.term), Coefficient(1) / lj.coefficient);
  return out;
}

ModuleVector make_monic(const ModuleVector& v, const TermOrder& order) {
  if (v.is_zero()) return v;
  const LeadingData lm = leading_monomial(v, order);
  if (lm.coefficient == 1) return v;
  return v.scaled(Coefficient(1) / lm.coefficient);
}

// ------------------------------------------------------------ ReducerSet

std::size_t ReducerSet::add(ModuleVector g) {
  if (g.is_zero()) throw InvalidArgument("cannot add the zero vector as divisor");
  elements_.push_back(std::move(g));
  leading_.emplace_back();
  cache_.emplace_back();
  integer_.emplace_back();
  index(elements_.size() - 1);
  return elements_.size() - 1;
}

void ReducerSet::replace(std::size_t i, ModuleVector g) {
  if (g.is_zero()) throw InvalidArgument("cannot add the zero vector as divisor");
  const std::size_t old_component = leading_.at(i).component;
  auto& list = by_component_[old_component];
  list.erase(std::find(list.begin(), list.end(), i));
  elements_[i] = std::move(g);
  index(i);
  // Keep per-component lists in tuple order.
  auto& fresh = by_component_[leading_[i].component];
  std::sort(fresh.begin(), fresh.end());
}

void ReducerSet::index(std::size_t i) {
  refresh(i);
  const std::size_t component = leading_[i].component;
  if (by_component_.size() <= component) by_component_.resize(component + 1);
  by_component_[component].push_back(i);
}

void ReducerSet::refresh(std::size_t i) {
  const ModuleVector& g = elements_[i];
  leading_[i] = leading_monomial(g, *order_);
  const ModuleTerm lt = leading_[i].module_term();
  const auto terms = g.terms();
  std::size_t pos = 0;
  while (!(terms[pos].term == lt)) ++pos;
  cache_[i] = {support_mask(lt.term), pos};
  Coefficient unused;
  integer_[i] = to_integer(g, unused);
}

std::optional<std::size_t> ReducerSet::find_divisor(const ModuleTerm& t) const {
  if (t.component >= by_component_.size()) return std::nullopt;
  const std::uint64_t mask = support_mask(t.term);
  for (std::size_t i : by_component_[t.component]) {
    if ((cache_[i].mask & ~mask) != 0) continue;
    if (divides(leading_[i].term, t.term)) return i;
  }
  return std::nullopt;
}

namespace {

// Shared division loop; `on_step(i, multiplier, coeff)` records quotients.
template <typename OnStep>
ModuleVector run_division(const ReducerSet& set, const ModuleVector& v,
                          ReductionMode mode,
                          const std::vector<std::size_t>& leading_pos,
                          OnStep&& on_step) {
  if (v.is_zero()) return v;
  WorkMap work(DescendingBy{&set.order()});
  for (const auto& e : v.terms()) work.emplace(e.term, e.coeff);

  std::vector<ModuleVector::Entry> rest;
  while (!work.empty()) {
    auto top = work.begin();
    const auto divisor = set.find_divisor(top->first);
    if (!divisor) {
      if (mode == ReductionMode::kHeadOnly) {
        for (auto& [t, c] : work) rest.push_back({t, std::move(c)});
        break;
      }
      rest.push_back({top->first, std::move(top->second)});
      work.erase(top);
      continue;
    }
    const std::size_t i = *divisor;
    const LeadingData& lead = set.leading(i);
    const Term multiplier = quotient(top->first.term, lead.term);
    const Coefficient factor = top->second / lead.coefficient;
    work.erase(top);
    on_step(i, multiplier, factor);

    const auto terms = set.element(i).terms();
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (k == leading_pos[i]) continue;
      ModuleTerm mt{terms[k].term.term * multiplier, terms[k].term.component};
      auto [it, inserted] = work.try_emplace(std::move(mt));
      if (inserted) {
        it->second = -factor * terms[k].coeff;
      } else {
        it->second -= factor * terms[k].coeff;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return ModuleVector::from_sorted(v.context_ptr(),
                                   to_storage_order(std::move(rest)));
}

}  // namespace

namespace {

constexpr std::size_t kContentInterval = 8;

// Divides all coefficients by their gcd; returns it (1 when nothing to do).
mpz_class remove_content(ReducerSet::IntegerVector& a,
                         ReducerSet::IntegerVector& b, std::size_t b_from) {
  mpz_class g = 0;
  for (const auto& e : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.coeff.get_mpz_t());
    if (g == 1) return g;
  }
  for (std::size_t k = b_from; k < b.size(); ++k) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b[k].coeff.get_mpz_t());
    if (g == 1) return g;
  }
  if (g == 0) return 1;
  for (auto& e : a) mpz_divexact(e.coeff.get_mpz_t(), e.coeff.get_mpz_t(), g.get_mpz_t());
  for (std::size_t k = b_from; k < b.size(); ++k) {
    mpz_divexact(b[k].coeff.get_mpz_t(), b[k].coeff.get_mpz_t(), g.get_mpz_t());
  }
  return g;
}

}  // namespace

ReducerSet::IntegerVector ReducerSet::to_integer(const ModuleVector& v,
                                                 Coefficient& scale) const {
  IntegerVector out;
  out.reserve(v.size());
  mpz_class den = 1;
  for (const auto& e : v.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.coeff.get_den_mpz_t());
  }
  mpz_class content = 0;
  for (const auto& e : v.terms()) {
    mpz_class c = den / e.coeff.get_den();
    c *= e.coeff.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    out.push_back({e.term, std::move(c)});
  }
  if (content != 0 && content != 1) {
    for (auto& e : out) {
      mpz_divexact(e.coeff.get_mpz_t(), e.coeff.get_mpz_t(), content.get_mpz_t());
    }
  }
  std::sort(out.begin(), out.end(), [&](const IntegerTerm& a, const IntegerTerm& b) {
    return order_->compare(a.term, b.term) > 0;
  });
  scale = Coefficient(content == 0 ? mpz_class(1) : content, den);
  return out;
}

// p = scale * (remainder); on return p holds the remainder part with the
// invariant v == scale * p modulo the reducers.
ReducerSet::IntegerVector ReducerSet::reduce_integer(IntegerVector p,
                                                     ReductionMode mode,
                                                     Coefficient& scale) const {
  IntegerVector rest;
  std::size_t head = 0;
  std::size_t steps = 0;
  mpz_class g, a, b;
  IntegerVector next;
  while (head < p.size()) {
    const ModuleTerm& top = p[head].term;
    const auto divisor = find_divisor(top);
    if (!divisor) {
      if (mode == ReductionMode::kHeadOnly) {
        for (std::size_t k = head; k < p.size(); ++k) rest.push_back(std::move(p[k]));
        head = p.size();
        break;
      }
      rest.push_back(std::move(p[head]));
      ++head;
      continue;
    }
    const IntegerVector& red = integer_[*divisor];
    const Term multiplier = quotient(top.term, red.front().term.term);
    // b * p - a * multiplier * red, with a/b = top coefficient / lead.
    mpz_gcd(g.get_mpz_t(), p[head].coeff.get_mpz_t(), red.front().coeff.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), p[head].coeff.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), red.front().coeff.get_mpz_t(), g.get_mpz_t());
    if (b < 0) {
      b = -b;
      a = -a;
    }
    const bool scale_all = b != 1;

    next.clear();
    next.reserve(p.size() - head + red.size());
    std::size_t x = head + 1;
    std::size_t y = 1;
    ModuleTerm shifted;
    bool have_shifted = false;
    while (x < p.size() || y < red.size()) {
      if (y < red.size() && !have_shifted) {
        shifted = {red[y].term.term * multiplier, red[y].term.component};
        have_shifted = true;
      }
      std::strong_ordering c = std::strong_ordering::greater;
      if (x == p.size()) {
        c = std::strong_ordering::less;
      } else if (y < red.size()) {
        c = order_->compare(p[x].term, shifted);
      }
      if (c > 0) {
        next.push_back(std::move(p[x]));
        if (scale_all) next.back().coeff *= b;
        ++x;
      } else if (c < 0) {
        IntegerTerm t{std::move(shifted), mpz_class()};
        mpz_mul(t.coeff.get_mpz_t(), a.get_mpz_t(), red[y].coeff.get_mpz_t());
        mpz_neg(t.coeff.get_mpz_t(), t.coeff.get_mpz_t());
        next.push_back(std::move(t));
        have_shifted = false;
        ++y;
      } else {
        IntegerTerm t{std::move(p[x].term), std::move(p[x].coeff)};
        if (scale_all) t.coeff *= b;
        mpz_submul(t.coeff.get_mpz_t(), a.get_mpz_t(), red[y].coeff.get_mpz_t());
        if (t.coeff != 0) next.push_back(std::move(t));
        have_shifted = false;
        ++x;
        ++y;
      }
    }
    std::swap(p, next);
    head = 0;
    if (scale_all) {
      for (auto& e : rest) e.coeff *= b;
      scale /= b;
    }
    if (++steps % kContentInterval == 0) {
      const mpz_class content = remove_content(rest, p, head);
      if (content != 1) scale *= content;
    }
  }
  return rest;
}

ModuleVector ReducerSet::from_integer(const ContextPtr& ctx,
                                      const IntegerVector& p,
                                      const Coefficient& scale) const {
  std::vector<ModuleVector::Entry> entries;
  entries.reserve(p.size());
  for (const auto& e : p) {
    Coefficient c(e.coeff);
    c *= scale;
    entries.push_back({e.term, std::move(c)});
  }
  return ModuleVector::from_sorted(ctx, to_storage_order(std::move(entries)));
}

ModuleVector ReducerSet::reduce(const ModuleVector& v, ReductionMode mode) const {
  if (v.is_zero()) return v;
  Coefficient scale;
  IntegerVector p = to_integer(v, scale);
  IntegerVector r = reduce_integer(std::move(p), mode, scale);
  return from_integer(v.context_ptr(), r, scale);
}

namespace {

ModuleVector primitive_of(ReducerSet::IntegerVector r, const ContextPtr& ctx) {
  mpz_class content = 0;
  for (const auto& e : r) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.coeff.get_mpz_t());
  }
  if (!r.empty() && r.front().coeff < 0) content = -content;
  std::vector<ModuleVector::Entry> entries;
  entries.reserve(r.size());
  for (auto& e : r) {
    if (content != 1) {
      mpz_divexact(e.coeff.get_mpz_t(), e.coeff.get_mpz_t(), content.get_mpz_t());
    }
    entries.push_back({std::move(e.term), Coefficient(e.coeff)});
  }
  return ModuleVector::from_sorted(ctx, to_storage_order(std::move(entries)));
}

}  // namespace

ModuleVector ReducerSet::reduce_primitive(const ModuleVector& v,
                                          ReductionMode mode) const {
  if (v.is_zero()) return v;
  Coefficient scale;
  IntegerVector p = to_integer(v, scale);
  return primitive_of(reduce_integer(std::move(p), mode, scale), v.context_ptr());
}

ModuleVector ReducerSet::reduce_s_vector(std::size_t i, std::size_t j,
                                         ReductionMode mode) const {
  const IntegerVector& gi = integer_.at(i);
  const IntegerVector& gj = integer_.at(j);
  if (gi.front().term.component != gj.front().term.component) {
    throw InvalidArgument("S-vector of leading terms in different components");
  }
  const Term l = lcm(gi.front().term.term, gj.front().term.term);
  const Term mi = quotient(l, gi.front().term.term);
  const Term mj = quotient(l, gj.front().term.term);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), gi.front().coeff.get_mpz_t(), gj.front().coeff.get_mpz_t());
  const mpz_class fi = gj.front().coeff / g;
  const mpz_class fj = gi.front().coeff / g;

  // fi * mi * gi - fj * mj * gj without the cancelling leading terms.
  IntegerVector s;
  s.reserve(gi.size() + gj.size());
  std::size_t x = 1;
  std::size_t y = 1;
  while (x < gi.size() || y < gj.size()) {
    ModuleTerm tx, ty;
    if (x < gi.size()) tx = {gi[x].term.term * mi, gi[x].term.component};
    if (y < gj.size()) ty = {gj[y].term.term * mj, gj[y].term.component};
    std::strong_ordering c = std::strong_ordering::equal;
    if (x == gi.size()) {
      c = std::strong_ordering::less;
    } else if (y == gj.size()) {
      c = std::strong_ordering::greater;
    } else {
      c = order_->compare(tx, ty);
    }
    if (c > 0) {
      s.push_back({std::move(tx), fi * gi[x].coeff});
      ++x;
    } else if (c < 0) {
      s.push_back({std::move(ty), -fj * gj[y].coeff});
      ++y;
    } else {
      mpz_class v = fi * gi[x].coeff;
      mpz_submul(v.get_mpz_t(), fj.get_mpz_t(), gj[y].coeff.get_mpz_t());
      if (v != 0) s.push_back({std::move(tx), std::move(v)});
      ++x;
      ++y;
    }
  }
  const ContextPtr& ctx = elements_[i].context_ptr();
  if (s.empty()) return ModuleVector(ctx);
  Coefficient scale = 1;
  return primitive_of(reduce_integer(std::move(s), mode, scale), ctx);
}

std::vector<std::size_t> ReducerSet::reduce_tails_by(std::size_t s) {
  const IntegerVector r = integer_.at(s);
  const ModuleTerm& lt = r.front().term;
  const auto descending = [&](const IntegerTerm& e, const ModuleTerm& t) {
    return order_->compare(e.term, t) > 0;
  };
  std::vector<std::size_t> changed;
  for (std::size_t k : by_component_[lt.component]) {
    if (k == s) continue;
    const IntegerVector& p = integer_[k];
    const auto hit = std::lower_bound(p.begin() + 1, p.end(), lt, descending);
    if (hit == p.end() || !(hit->term == lt)) continue;

    // b * p - a * r cancels the term; r's tail is already reduced.
    mpz_class g, a, b;
    mpz_gcd(g.get_mpz_t(), hit->coeff.get_mpz_t(), r.front().coeff.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), hit->coeff.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), r.front().coeff.get_mpz_t(), g.get_mpz_t());
    IntegerVector out;
    out.reserve(p.size() + r.size());
    std::size_t x = 0;
    std::size_t y = 1;
    while (x < p.size() || y < r.size()) {
      std::strong_ordering c = std::strong_ordering::equal;
      if (x == p.size()) {
        c = std::strong_ordering::less;
      } else if (y == r.size()) {
        c = std::strong_ordering::greater;
      } else {
        c = order_->compare(p[x].term, r[y].term);
      }
      if (c > 0) {
        if (&p[x] != &*hit) out.push_back({p[x].term, b * p[x].coeff});
        ++x;
      } else if (c < 0) {
        out.push_back({r[y].term, -a * r[y].coeff});
        ++y;
      } else {
        mpz_class v = b * p[x].coeff;
        mpz_submul(v.get_mpz_t(), a.get_mpz_t(), r[y].coeff.get_mpz_t());
        if (v != 0) out.push_back({p[x].term, std::move(v)});
        ++x;
        ++y;
      }
    }
    elements_[k] = primitive_of(std::move(out), elements_[k].context_ptr());
    refresh(k);
    changed.push_back(k);
  }
  return changed;
}

DivisionResult ReducerSet::divide(const ModuleVector& v) const {
  std::vector<std::size_t> pos(cache_.size());
  for (std::size_t i = 0; i < cache_.size(); ++i) pos[i] = cache_[i].leading_entry;
  std::vector<std::vector<ModuleVector::Entry>> q(elements_.size());
  ModuleVector rem = run_division(
      *this, v, ReductionMode::kFull, pos,
      [&](std::size_t i, const Term& m, const Coefficient& c) {
        q[i].push_back({{m, 0}, c});
      });
  DivisionResult out;
  out.remainder = std::move(rem);
  const ContextPtr scalars =
      v.context_ptr() ? v.context_ptr()->scalar_ring() : nullptr;
  for (auto& entries : q) {
    out.quotients.emplace_back(scalars ? ModuleVector(scalars, std::move(entries))
                                       : ModuleVector());
  }
  return out;
}

ModuleVector normal_remainder(const ModuleVector& v,
                              std::span<const ModuleVector> divisors,
                              const TermOrder& order, ReductionMode mode) {
  ReducerSet set(order);
  for (const auto& g : divisors) {
    if (!g.is_zero()) set.add(g);
  }
  return set.reduce(v, mode);
}

DivisionResult divide(const ModuleVector& v,
                      std::span<const ModuleVector> divisors,
                      const TermOrder& order) {
  // Zero divisors never divide anything; keep quotient slots aligned.
  ReducerSet set(order);
  std::vector<std::size_t> slot;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (!divisors[i].is_zero()) {
      set.add(divisors[i]);
      slot.push_back(i);
    }
  }
  DivisionResult inner = set.divide(v);
  DivisionResult out;
  out.remainder = std::move(inner.remainder);
  const ContextPtr scalars =
      v.context_ptr() ? v.context_ptr()->scalar_ring() : nullptr;
  out.quotients.assign(divisors.size(), ModuleVector(scalars));
  for (std::size_t k = 0; k < slot.size(); ++k) {
    out.quotients[slot[k]] = std::move(inner.quotients[k]);
  }
  return out;
}

std::vector<ModuleVector> interreduce(std::span<const ModuleVector> generators,
                                      const TermOrder& order) {
  std::vector<ModuleVector> work;
  for (const auto& g : generators) {
    if (!g.is_zero()) work.push_back(make_monic(g, order));
  }

  // Replace elements whose leading term is divisible by another leading term
  // until the leading terms are minimal. On equal leading terms the later
  // element is the one reduced.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      const ModuleTerm lt = leading_monomial(work[i], order).module_term();
      for (std::size_t j = 0; j < work.size(); ++j) {
        if (j == i) continue;
        const ModuleTerm lj = leading_monomial(work[j], order).module_term();
        if (lj.component != lt.component || !divides(lj.term, lt.term)) continue;
        if (lj.term == lt.term && j > i) continue;
        std::vector<ModuleVector> others;
        for (std::size_t k = 0; k < work.size(); ++k) {
          if (k != i) others.push_back(work[k]);
        }
        ModuleVector r = normal_remainder(work[i], others, order);
        if (r.is_zero()) {
          work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          work[i] = make_monic(r, order);
        }
        changed = true;
        break;
      }
    }
  }

  // Tail reduction; leading terms are now pairwise non-dividing, so they
  // do not change.
  for (std::size_t i = 0; i < work.size(); ++i) {
    std::vector<ModuleVector> others;
    for (std::size_t k = 0; k < work.size(); ++k) {
      if (k != i) others.push_back(work[k]);
    }
    work[i] = make_monic(normal_remainder(work[i], others, order), order);
  }

  std::sort(work.begin(), work.end(),
            [&](const ModuleVector& a, const ModuleVector& b) {
              return order.compare(leading_monomial(a, order).module_term(),
                                   leading_monomial(b, order).module_term()) < 0;
            });
  return work;
}

}  // namespace obb
