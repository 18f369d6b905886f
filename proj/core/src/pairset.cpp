#include "obb/pairset.hpp"

#include <algorithm>
#include <stdexcept>

#include "obb/error.hpp"

namespace obb {

namespace {

std::strong_ordering deglex_compare(const Term& a, const Term& b) {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da <=> db;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t k = 0; k < ea.size(); ++k) {
    if (ea[k] != eb[k]) return ea[k] <=> eb[k];
  }
  return std::strong_ordering::equal;
}

std::string index_pair(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Rule 3 condition for (i, j) with respect to a third element k, in terms
// of lcms: t_k | lcm_ij, lcm_ik != lcm_ij, lcm_jk != lcm_ij.
bool rule3_applies(const CriticalPair& p, std::size_t k,
                   std::span<const LeadingData> leading) {
  const LeadingData& lk = leading[k];
  if (lk.component != leading[p.i].component) return false;
  if (!divides(lk.term, p.lcm)) return false;
  if (lcm(leading[p.i].term, lk.term) == p.lcm) return false;
  if (lcm(leading[p.j].term, lk.term) == p.lcm) return false;
  return true;
}

}  // namespace

std::string CriticalPair::label() const { return index_pair(i, j); }

CriticalPair make_critical_pair(std::size_t i, std::size_t j,
                                std::span<const LeadingData> leading,
                                const ModuleContext& ctx) {
  if (i >= j || j >= leading.size()) {
    throw InvalidArgument("critical pair needs indices i < j within range");
  }
  const LeadingData& li = leading[i];
  const LeadingData& lj = leading[j];
  if (li.component != lj.component) {
    throw InvalidArgument("critical pair of leading terms in different components");
  }
  CriticalPair p;
  p.i = i;
  p.j = j;
  p.lcm = lcm(li.term, lj.term);
  p.t_ij = quotient(p.lcm, li.term);
  p.t_ji = quotient(p.lcm, lj.term);
  p.degree = ctx.degree(ModuleTerm{p.lcm, li.component});
  return p;
}

bool PairOrder::operator()(const CriticalPair& a, const CriticalPair& b) const {
  const auto c = deglex_compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

std::vector<CriticalPair> build_pairs(std::span<const LeadingData> leading,
                                      const ModuleContext& ctx) {
  std::vector<CriticalPair> out;
  for (std::size_t j = 0; j < leading.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (leading[i].component == leading[j].component) {
        out.push_back(make_critical_pair(i, j, leading, ctx));
      }
    }
  }
  return out;
}

GmRulesResult gm_rules(std::span<const CriticalPair> pairs,
                       std::span<const LeadingData> leading) {
  // Index the cofactors t_ji by (j, i).
  std::map<std::pair<std::size_t, std::size_t>, const CriticalPair*> by_index;
  for (const auto& p : pairs) by_index[{p.i, p.j}] = &p;
  auto cofactor = [&](std::size_t k, std::size_t i) -> const Term* {
    // t_ki = lcm(t_i, t_k)/t_k
    const auto key = i < k ? std::pair{i, k} : std::pair{k, i};
    auto it = by_index.find(key);
    if (it == by_index.end()) return nullptr;
    return i < k ? &it->second->t_ji : &it->second->t_ij;
  };

  GmRulesResult out;
  for (const auto& p : pairs) {
    const std::size_t j = p.i;  // pair (j, k) with j < k
    const std::size_t k = p.j;
    bool dead = false;
    // Rule 1: some i < j with t_ki | t_kj.
    for (std::size_t i = 0; i < j && !dead; ++i) {
      const Term* t_ki = cofactor(k, i);
      if (t_ki != nullptr && divides(*t_ki, p.t_ji)) dead = true;
    }
    // Rule 2: some l with j < l < k and t_kl properly dividing t_kj.
    for (std::size_t l = j + 1; l < k && !dead; ++l) {
      const Term* t_kl = cofactor(k, l);
      if (t_kl != nullptr && properly_divides(*t_kl, p.t_ji)) dead = true;
    }
    if (!dead) out.sigma2.push_back(p);
  }
  for (const auto& p : out.sigma2) {
    bool dead = false;
    for (std::size_t k = p.j + 1; k < leading.size() && !dead; ++k) {
      dead = rule3_applies(p, k, leading);
    }
    if (dead) {
      ++out.rule3_killed;
    } else {
      out.sigma3.push_back(p);
    }
  }
  return out;
}

std::string to_string(TraceKind kind) {
  switch (kind) {
    case TraceKind::kPairsFormed: return "pairs-formed";
    case TraceKind::kRule1Deleted: return "rule1";
    case TraceKind::kRule2Deleted: return "rule2";
    case TraceKind::kRule3Deleted: return "rule3";
    case TraceKind::kBStarAdded: return "bstar-added";
    case TraceKind::kAlreadyTreated: return "already-treated";
    case TraceKind::kKilledEqualHead: return "killed-equal-head";
    case TraceKind::kHeadReduction: return "head-reduction";
    case TraceKind::kCofactorNotOne: return "cofactor-not-one";
    case TraceKind::kReducedTreated: return "reduced-already-treated";
    case TraceKind::kKilledReduced: return "killed-after-reduction";
    case TraceKind::kChained: return "chained";
    case TraceKind::kNoReducer: return "no-reducer";
    case TraceKind::kTreated: return "treated";
    case TraceKind::kNewElement: return "new-element";
    case TraceKind::kMinimal: return "minimal";
  }
  return "unknown";
}

std::string TraceEvent::describe() const {
  std::string s = "[" + degree.to_string() + "] " + to_string(kind);
  switch (kind) {
    case TraceKind::kPairsFormed:
    case TraceKind::kNewElement:
      s += " g" + std::to_string(element + 1);
      break;
    case TraceKind::kKilledEqualHead:
    case TraceKind::kHeadReduction:
    case TraceKind::kKilledReduced:
    case TraceKind::kRule1Deleted:
    case TraceKind::kRule2Deleted:
    case TraceKind::kRule3Deleted:
      s += " " + index_pair(i, j) + " by " + index_pair(other_i, other_j);
      break;
    default:
      s += " " + index_pair(i, j);
      break;
  }
  return s;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kNaive: return "naive";
    case Strategy::kGm: return "gm";
    case Strategy::kCkr: return "ckr";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "naive") return Strategy::kNaive;
  if (name == "gm") return Strategy::kGm;
  if (name == "ckr") return Strategy::kCkr;
  throw InvalidArgument("unknown strategy '" + std::string(name) +
                        "' (expected naive, gm or ckr)");
}

// ------------------------------------------------------------- PairSlice

bool PairSlice::head_less(const std::pair<std::size_t, Term>& a,
                          const std::pair<std::size_t, Term>& b) {
  if (a.first != b.first) return a.first < b.first;
  return storage_compare(a.second, b.second) < 0;
}

PairSlice::PairSlice(MultiDegree degree, std::vector<CriticalPair> pairs)
    : degree_(std::move(degree)), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(), PairOrder{});
  alive_.assign(pairs_.size(), true);
  alive_count_ = pairs_.size();
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    by_head_.emplace(std::pair{pairs_[k].j, pairs_[k].t_ji}, k);
  }
}

std::optional<CriticalPair> PairSlice::pop_front() {
  while (cursor_ < pairs_.size() && !alive_[cursor_]) ++cursor_;
  if (cursor_ == pairs_.size()) return std::nullopt;
  CriticalPair p = pairs_[cursor_];
  alive_[cursor_] = false;
  --alive_count_;
  auto it = by_head_.find(std::pair{p.j, p.t_ji});
  if (it != by_head_.end() && it->second == cursor_) by_head_.erase(it);
  return p;
}

std::optional<CriticalPair> PairSlice::find_equal_head(std::size_t j,
                                                       const Term& t_ji) const {
  auto it = by_head_.find(std::pair{j, t_ji});
  if (it == by_head_.end()) return std::nullopt;
  return pairs_[it->second];
}

void PairSlice::erase(const CriticalPair& p) {
  auto it = by_head_.find(std::pair{p.j, p.t_ji});
  if (it == by_head_.end() || pairs_[it->second].i != p.i) return;
  alive_[it->second] = false;
  --alive_count_;
  by_head_.erase(it);
}

std::vector<CriticalPair> PairSlice::remaining() const {
  std::vector<CriticalPair> out;
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if (alive_[k]) out.push_back(pairs_[k]);
  }
  return out;
}

// ------------------------------------------------------- PairCollections

PairCollections::PairCollections(Strategy strategy, ContextPtr ctx,
                                 std::optional<MultiDegree> truncation)
    : strategy_(strategy), ctx_(std::move(ctx)), truncation_(std::move(truncation)) {}

void PairCollections::enqueue(CriticalPair p) {
  pending_[p.degree].push_back(std::move(p));
}

void PairCollections::apply_rule3(std::span<const LeadingData> leading,
                                  std::size_t new_index, bool remove,
                                  PairStats& stats,
                                  std::vector<TraceEvent>* trace) {
  for (auto slice = pending_.begin(); slice != pending_.end();) {
    auto& pairs = slice->second;
    auto keep = pairs.begin();
    for (auto& p : pairs) {
      if (rule3_applies(p, new_index, leading) &&
          !rule3_marked_.contains({p.i, p.j})) {
        rule3_marked_.insert({p.i, p.j});
        ++stats.rule3_kills;
        if (trace != nullptr) {
          trace->push_back({TraceKind::kRule3Deleted, p.degree, p.i, p.j,
                            p.i, new_index, new_index});
        }
        if (remove) continue;
      }
      if (&*keep != &p) *keep = std::move(p);
      ++keep;
    }
    pairs.erase(keep, pairs.end());
    slice = pairs.empty() ? pending_.erase(slice) : std::next(slice);
  }
}

void PairCollections::update(std::span<const LeadingData> leading,
                             std::size_t new_index, PairStats& stats,
                             std::vector<TraceEvent>* trace) {
  if (new_index + 1 != leading.size()) {
    throw InvalidArgument("update expects the newest basis element");
  }
  leading_.assign(leading.begin(), leading.end());
  if (a_by_j_.size() <= new_index) a_by_j_.resize(new_index + 1);
  const std::size_t s = new_index;
  const LeadingData& ls = leading[s];

  // The basis element may be a Rule 3 witness for pending pairs.
  if (strategy_ != Strategy::kNaive) {
    apply_rule3(leading, s, strategy_ == Strategy::kGm, stats, trace);
  }

  // U1
  std::vector<CriticalPair> c;
  for (std::size_t i = 0; i < s; ++i) {
    if (leading[i].component == ls.component) {
      c.push_back(make_critical_pair(i, s, leading, *ctx_));
    }
  }
  auto within = [&](const CriticalPair& p) {
    return !truncation_ || lex_compare(p.degree, *truncation_) <= 0;
  };
  stats.sigma_total += static_cast<std::size_t>(
      std::count_if(c.begin(), c.end(), within));
  if (trace != nullptr) {
    MultiDegree d = ctx_->degree(ls.module_term());
    trace->push_back({TraceKind::kPairsFormed, d, 0, s, 0, 0, s});
  }

  // U2 and U3 run for every strategy so that #(Sigma'') is reported; the
  // naive strategy keeps all of C afterwards.
  std::vector<CriticalPair> survivors;
  {
    std::vector<bool> dead(c.size(), false);
    // U2: (j, s) dies if some earlier i has t_si | t_sj.
    for (std::size_t b = 0; b < c.size(); ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        if (divides(c[a].t_ji, c[b].t_ji)) {
          dead[b] = true;
          if (trace != nullptr && strategy_ != Strategy::kNaive) {
            trace->push_back({TraceKind::kRule1Deleted, c[b].degree, c[b].i, s,
                              c[a].i, s, 0});
          }
          break;
        }
      }
    }
    // U3: (i, s) dies if some later j < s has t_sj properly dividing t_si.
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (dead[a]) continue;
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        if (properly_divides(c[b].t_ji, c[a].t_ji)) {
          dead[a] = true;
          if (trace != nullptr && strategy_ != Strategy::kNaive) {
            trace->push_back({TraceKind::kRule2Deleted, c[a].degree, c[a].i, s,
                              c[b].i, s, 0});
          }
          break;
        }
      }
    }
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (!dead[a]) survivors.push_back(c[a]);
    }
    stats.sigma2 += static_cast<std::size_t>(
        std::count_if(survivors.begin(), survivors.end(), within));
  }
  if (strategy_ == Strategy::kNaive) survivors = std::move(c);

  // U4
  if (strategy_ == Strategy::kCkr) {
    for (std::size_t a = 0; a < survivors.size(); ++a) {
      for (std::size_t b = a + 1; b < survivors.size(); ++b) {
        if (!coprime(survivors[a].t_ij, survivors[b].t_ij)) continue;
        const std::size_t i = survivors[a].i;
        const std::size_t j = survivors[b].i;
        if (!bstar_seen_.insert({i, j}).second) continue;
        CriticalPair p = make_critical_pair(i, j, leading, *ctx_);
        if (!within(p)) continue;
        ++stats.bstar_entries;
        if (trace != nullptr) {
          trace->push_back({TraceKind::kBStarAdded, p.degree, i, j, 0, 0, s});
        }
        bstar_[p.degree].push_back(std::move(p));
      }
    }
  }

  // U5
  for (auto& p : survivors) {
    if (!within(p)) continue;
    enqueue(std::move(p));
  }
}

std::optional<MultiDegree> PairCollections::smallest_degree() const {
  if (pending_.empty()) return std::nullopt;
  return pending_.begin()->first;
}

PairSlice PairCollections::take_slice(const MultiDegree& d) {
  auto it = pending_.find(d);
  if (it == pending_.end()) return PairSlice(d, {});
  PairSlice out(d, std::move(it->second));
  pending_.erase(it);
  return out;
}

BStarSlice PairCollections::take_bstar_slice(const MultiDegree& d) {
  BStarSlice out;
  while (!bstar_.empty() && bstar_.begin()->first < d) {
    bstar_.erase(bstar_.begin());
  }
  auto it = bstar_.find(d);
  if (it == bstar_.end()) return out;
  for (auto& p : it->second) out.insert(std::move(p));
  bstar_.erase(it);
  return out;
}

void PairCollections::append_to_a(const CriticalPair& p) {
  if (a_by_j_.size() <= p.j) a_by_j_.resize(p.j + 1);
  a_by_j_[p.j].push_back({p.i, p.t_ji});
  ++a_size_;
}

const PairCollections::AEntry* PairCollections::find_in_a(
    std::size_t j, const Term& t_ji) const {
  if (j >= a_by_j_.size()) return nullptr;
  for (const auto& e : a_by_j_[j]) {
    if (e.t_ji == t_ji) return &e;
  }
  return nullptr;
}

const PairCollections::AEntry* PairCollections::find_reducer_in_a(
    std::size_t i, std::size_t j, const Term& t_ji) const {
  if (j >= a_by_j_.size()) return nullptr;
  const AEntry* best = nullptr;
  for (const auto& e : a_by_j_[j]) {
    if (e.i == i || !divides(e.t_ji, t_ji)) continue;
    if (best == nullptr) {
      best = &e;
      continue;
    }
    const auto c = deglex_compare(e.t_ji, best->t_ji);
    if (c < 0 || (c == 0 && e.i < best->i)) best = &e;
  }
  return best;
}

void PairCollections::mark_treated(const CriticalPair& p, PairStats& stats) {
  append_to_a(p);
  ++stats.treated;
  if (rule3_marked_.contains({p.i, p.j})) ++stats.rule3_treated;
}

void PairCollections::min_pairs(PairSlice& b_d, BStarSlice& bstar_d,
                                PairStats& stats,
                                std::vector<TraceEvent>* trace) {
  auto log = [&](TraceKind kind, std::size_t i, std::size_t j, std::size_t oi,
                 std::size_t oj) {
    if (trace != nullptr) trace->push_back({kind, b_d.degree(), i, j, oi, oj, 0});
  };

  while (!bstar_d.empty()) {
    // M1
    CriticalPair cur = *bstar_d.begin();
    bstar_d.erase(bstar_d.begin());
    // M2
    if (const AEntry* e = find_in_a(cur.j, cur.t_ji)) {
      log(TraceKind::kAlreadyTreated, cur.i, cur.j, e->i, cur.j);
      continue;
    }
    // M3
    if (auto hit = b_d.find_equal_head(cur.j, cur.t_ji)) {
      b_d.erase(*hit);
      append_to_a(*hit);
      ++stats.m23_kills;
      log(TraceKind::kKilledEqualHead, hit->i, hit->j, cur.i, cur.j);
      continue;
    }
    for (;;) {
      // M4
      const AEntry* red = find_reducer_in_a(cur.i, cur.j, cur.t_ji);
      if (red == nullptr) {
        log(TraceKind::kNoReducer, cur.i, cur.j, 0, 0);
        break;
      }
      const std::size_t ip = red->i;
      const Term t_ipj = quotient(lcm(leading_[ip].term, leading_[cur.j].term),
                                  leading_[ip].term);
      log(TraceKind::kHeadReduction, cur.i, cur.j, ip, cur.j);
      if (!coprime(cur.t_ij, t_ipj)) {
        log(TraceKind::kCofactorNotOne, cur.i, cur.j, ip, cur.j);
        break;
      }
      const std::size_t k = std::min(cur.i, ip);
      const std::size_t l = std::max(cur.i, ip);
      const CriticalPair kl = make_critical_pair(k, l, leading_, *ctx_);
      // M5
      if (const AEntry* e = find_in_a(l, kl.t_ji)) {
        log(TraceKind::kReducedTreated, k, l, e->i, l);
        break;
      }
      // M6
      if (auto hit = b_d.find_equal_head(l, kl.t_ji)) {
        b_d.erase(*hit);
        append_to_a(*hit);
        ++stats.m48_kills;
        log(TraceKind::kKilledReduced, hit->i, hit->j, cur.i, cur.j);
        break;
      }
      // M7
      auto again = bstar_d.find(kl);
      if (again == bstar_d.end() || !again->same_indices(kl)) break;
      bstar_d.erase(again);
      log(TraceKind::kChained, k, l, cur.i, cur.j);
      cur = kl;
    }
    // M8
  }
}

}  // namespace obb
