#include "obb/engine.hpp"

#include <algorithm>
#include <map>

#include "obb/error.hpp"

namespace obb {

namespace {

enum class Mode { kCompute, kReducedBasis };

struct ModuleTermLess {
  bool operator()(const ModuleTerm& a, const ModuleTerm& b) const {
    return storage_compare(a, b) < 0;
  }
};

class Run {
 public:
  Run(const EngineConfig& cfg, Mode mode)
      : cfg_(cfg), mode_(mode), reducer_(cfg_.ordering) {}

  EngineResult execute(std::span<const ModuleVector> generators);

 private:
  void intake(std::span<const ModuleVector> generators);
  void append(ModuleVector g, const MultiDegree& d);
  void check_deadline() const;

  const EngineConfig& cfg_;
  Mode mode_;
  ReducerSet reducer_;
  ContextPtr ctx_;
  std::vector<LeadingData> leading_;
  std::map<ModuleTerm, std::size_t, ModuleTermLess> by_leading_term_;
  std::map<MultiDegree, std::vector<std::size_t>> pending_inputs_;  // W
  std::optional<PairCollections> pairs_;
  EngineResult result_;
  std::chrono::steady_clock::time_point start_;
  std::vector<TraceEvent>* trace_ = nullptr;
};

void Run::check_deadline() const {
  if (!cfg_.time_limit) return;
  if (std::chrono::steady_clock::now() - start_ > *cfg_.time_limit) {
    throw ResourceLimitError("time limit of " +
                             std::to_string(cfg_.time_limit->count()) +
                             " ms exceeded");
  }
}

void Run::intake(std::span<const ModuleVector> generators) {
  std::vector<std::size_t> accepted;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const ModuleVector& v = generators[k];
    if (v.is_zero()) {
      ++result_.intake.zero_dropped;
      continue;
    }
    if (!ctx_) {
      ctx_ = v.context_ptr();
    } else if (!(*v.context_ptr() == *ctx_)) {
      throw InvalidArgument("generator " + std::to_string(k + 1) +
                            " lives in a different module");
    }
    const auto deg = is_homogeneous(v);
    if (!deg) {
      throw NonHomogeneousError(k, "generator " + std::to_string(k + 1) +
                                       " is not homogeneous");
    }
    bool duplicate = false;
    for (std::size_t a : accepted) {
      if (generators[a] == v) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) {
      ++result_.intake.duplicates_dropped;
      continue;
    }
    accepted.push_back(k);
    pending_inputs_[deg->value].push_back(k);
  }
  if (!ctx_) return;
  if (!is_positive_grading(ctx_->grading())) {
    throw MathDomainError("the grading matrix does not define a positive grading");
  }
  if (cfg_.truncation) {
    if (cfg_.truncation->size() != ctx_->degree_rank()) {
      throw DimensionError("truncation degree has " +
                           std::to_string(cfg_.truncation->size()) +
                           " entries, the grading has " +
                           std::to_string(ctx_->degree_rank()) + " rows");
    }
    if (lex_compare(*cfg_.truncation, pending_inputs_.begin()->first) < 0) {
      throw InvalidArgument("truncation degree " + cfg_.truncation->to_string() +
                            " is below the smallest generator degree " +
                            pending_inputs_.begin()->first.to_string());
    }
  }
}

void Run::append(ModuleVector g, const MultiDegree& d) {
  const std::size_t s = reducer_.add(std::move(g));
  leading_.push_back(reducer_.leading(s));
  by_leading_term_.emplace(leading_.back().module_term(), s);
  if (cfg_.reduce_tails && cfg_.reduction == ReductionMode::kFull) {
    for (std::size_t k : reducer_.reduce_tails_by(s)) leading_[k] = reducer_.leading(k);
  }
  if (trace_ != nullptr) {
    trace_->push_back({TraceKind::kNewElement, d, 0, 0, 0, 0, s});
  }
  pairs_->update(leading_, s, result_.stats, trace_);
}

EngineResult Run::execute(std::span<const ModuleVector> generators) {
  start_ = std::chrono::steady_clock::now();
  if (cfg_.trace) trace_ = &result_.trace;
  intake(generators);
  if (!ctx_) return std::move(result_);
  result_.degree_compatible = is_degree_compatible(cfg_.ordering, *ctx_);
  pairs_.emplace(cfg_.strategy, ctx_, cfg_.truncation);

  while (!pairs_->pending_empty() || !pending_inputs_.empty()) {
    MultiDegree d;
    const auto bd = pairs_->smallest_degree();
    if (!bd) {
      d = pending_inputs_.begin()->first;
    } else if (pending_inputs_.empty()) {
      d = *bd;
    } else {
      d = std::min(*bd, pending_inputs_.begin()->first);
    }
    if (cfg_.truncation && lex_compare(d, *cfg_.truncation) > 0) break;

    PairSlice slice = pairs_->take_slice(d);
    if (cfg_.strategy == Strategy::kCkr) {
      BStarSlice bstar = pairs_->take_bstar_slice(d);
      pairs_->min_pairs(slice, bstar, result_.stats, trace_);
    }
    while (auto p = slice.pop_front()) {
      check_deadline();
      pairs_->mark_treated(*p, result_.stats);
      result_.treated.push_back(*p);
      if (trace_ != nullptr) {
        trace_->push_back({TraceKind::kTreated, d, p->i, p->j, 0, 0, 0});
      }
      ModuleVector r = reducer_.reduce_s_vector(p->i, p->j, cfg_.reduction);
      if (r.is_zero()) {
        ++result_.stats.zero_reductions;
        continue;
      }
      append(std::move(r), d);
    }

    std::vector<std::size_t> inputs;
    if (auto it = pending_inputs_.find(d); it != pending_inputs_.end()) {
      inputs = std::move(it->second);
      pending_inputs_.erase(it);
    }
    for (std::size_t k : inputs) {
      check_deadline();
      const ModuleVector& v = generators[k];
      if (mode_ == Mode::kReducedBasis) {
        const LeadingData lv = leading_monomial(v, cfg_.ordering);
        auto hit = by_leading_term_.find(lv.module_term());
        if (hit != by_leading_term_.end()) {
          reducer_.replace(hit->second, v);
          leading_[hit->second] = reducer_.leading(hit->second);
          continue;
        }
        result_.v_min.push_back(k);
        append(v, d);
        continue;
      }
      ModuleVector r = reducer_.reduce_primitive(v, cfg_.reduction);
      if (r.is_zero()) continue;
      result_.v_min.push_back(k);
      append(std::move(r), d);
    }
  }

  if (cfg_.strategy == Strategy::kCkr) result_.stats.theta = result_.stats.treated;
  result_.basis.reserve(reducer_.size());
  for (const auto& g : reducer_.elements()) {
    result_.basis.push_back(make_monic(g, cfg_.ordering));
  }
  result_.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start_).count();
  return std::move(result_);
}

}  // namespace

EngineResult buchberger_with_min(std::span<const ModuleVector> generators,
                                 const EngineConfig& cfg) {
  Run run(cfg, Mode::kCompute);
  return run.execute(generators);
}

std::vector<ModuleVector> homogeneous_buchberger(
    std::span<const ModuleVector> generators, const EngineConfig& cfg) {
  return buchberger_with_min(generators, cfg).basis;
}

EngineResult optimized_buchberger(std::span<const ModuleVector> generators,
                                  EngineConfig cfg) {
  cfg.strategy = Strategy::kCkr;
  return buchberger_with_min(generators, cfg);
}

std::vector<std::size_t> min_gens_of_reduced_gb(
    std::span<const ModuleVector> reduced_basis, const EngineConfig& cfg) {
  for (std::size_t k = 0; k < reduced_basis.size(); ++k) {
    if (reduced_basis[k].is_zero()) {
      throw InvalidArgument("element " + std::to_string(k + 1) +
                            " of the reduced basis is zero");
    }
    if (!is_homogeneous(reduced_basis[k])) {
      throw NonHomogeneousError(k, "generator " + std::to_string(k + 1) +
                                       " is not homogeneous");
    }
  }
  if (!is_reduced_groebner_basis(reduced_basis, cfg.ordering)) {
    throw InvalidArgument("input is not a reduced Groebner basis");
  }
  Run run(cfg, Mode::kReducedBasis);
  return run.execute(reduced_basis).v_min;
}

std::vector<ModuleVector> reduced_form(std::span<const ModuleVector> basis,
                                       const TermOrder& order) {
  return interreduce(basis, order);
}

bool is_groebner_basis(std::span<const ModuleVector> basis,
                       const TermOrder& order) {
  ReducerSet set(order);
  for (const auto& g : basis) {
    if (!g.is_zero()) set.add(g);
  }
  for (std::size_t j = 0; j < set.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (set.leading(i).component != set.leading(j).component) continue;
      const ModuleVector s = s_vector(set.element(i), set.element(j), order);
      if (!set.reduce(s).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced_groebner_basis(std::span<const ModuleVector> basis,
                               const TermOrder& order) {
  std::vector<LeadingData> lead;
  for (const auto& g : basis) {
    if (g.is_zero()) return false;
    lead.push_back(leading_monomial(g, order));
    if (lead.back().coefficient != 1) return false;
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const auto& e : basis[i].terms()) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j == i || lead[j].component != e.term.component) continue;
        if (divides(lead[j].term, e.term.term)) return false;
      }
    }
  }
  return is_groebner_basis(basis, order);
}

}  // namespace obb
