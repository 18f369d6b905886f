#include <algorithm>
#include <map>
#include <set>

#include "obb/error.hpp"
#include "obb/pairset.hpp"

namespace obb {

namespace {

using Key = std::pair<std::size_t, std::size_t>;

struct Entry {
  CriticalPair pair;
  SyzygyElement syz;
};

}  // namespace

SigmaBamResult sigma_bam(std::span<const CriticalPair> sigma2,
                         const InducedOrdering& tau, const ModuleContext& ctx) {
  std::vector<LeadingData> leading;
  for (const auto& mt : tau.leading_terms()) {
    leading.push_back({Coefficient(1), mt.term, mt.component});
  }
  auto entry = [&](std::size_t i, std::size_t j) {
    return Entry{make_critical_pair(i, j, leading, ctx),
                 critical_syzygy(i, j, leading)};
  };
  // LT_tau(sigma_ij) = t_ji eps_j; check that against tau itself.
  auto head = [&](const Entry& e) {
    const ModuleTerm a{e.syz.first_term, e.syz.first};
    const ModuleTerm b{e.syz.second_term, e.syz.second};
    if (tau.compare(b, a) <= 0) {
      throw std::logic_error("leading term of a critical syzygy is not on eps_j");
    }
    return b;
  };

  SigmaBamResult out;
  auto log = [&](TraceKind kind, const MultiDegree& d, std::size_t i,
                 std::size_t j, std::size_t oi, std::size_t oj) {
    out.trace.push_back({kind, d, i, j, oi, oj, 0});
  };

  // 1-2
  std::map<MultiDegree, std::map<Key, Entry>> w;
  std::map<MultiDegree, std::map<Key, Entry>> bstar;
  for (const auto& p : sigma2) {
    Entry e = entry(p.i, p.j);
    w[e.pair.degree].emplace(Key{p.i, p.j}, e);
  }
  std::set<Key> bstar_seen;
  for (std::size_t a = 0; a < sigma2.size(); ++a) {
    for (std::size_t b = 0; b < sigma2.size(); ++b) {
      const CriticalPair& p = sigma2[a];
      const CriticalPair& q = sigma2[b];
      if (p.j != q.j || p.i >= q.i) continue;
      const SyzygyCombination s = syzygy_s_vector(
          critical_syzygy(p.i, p.j, leading), critical_syzygy(q.i, q.j, leading),
          leading);
      if (!s.cofactor.is_one() || !bstar_seen.insert({s.k, s.l}).second) continue;
      Entry e = entry(s.k, s.l);
      out.bstar.push_back(e.pair);
      log(TraceKind::kBStarAdded, e.pair.degree, s.k, s.l, p.i, q.i);
      bstar[e.pair.degree].emplace(Key{s.k, s.l}, std::move(e));
    }
  }

  // A, keyed by j, with the degree each entry was appended at.
  struct AEntry {
    Entry e;
    MultiDegree degree;
  };
  std::map<std::size_t, std::vector<AEntry>> a;
  auto in_a_d = [&](const ModuleTerm& lt, const MultiDegree& d) -> const AEntry* {
    auto it = a.find(lt.component);
    if (it == a.end()) return nullptr;
    for (const auto& x : it->second) {
      if (x.degree == d && head(x.e) == lt) return &x;
    }
    return nullptr;
  };
  auto in_w_d = [&](std::map<Key, Entry>& wd,
                    const ModuleTerm& lt) -> std::map<Key, Entry>::iterator {
    for (auto it = wd.begin(); it != wd.end(); ++it) {
      if (head(it->second) == lt) return it;
    }
    return wd.end();
  };

  while (!w.empty() || !bstar.empty()) {
    // 3
    MultiDegree d;
    if (w.empty()) {
      d = bstar.begin()->first;
    } else if (bstar.empty()) {
      d = w.begin()->first;
    } else {
      d = std::min(w.begin()->first, bstar.begin()->first);
    }
    std::map<Key, Entry> wd;
    std::map<Key, Entry> bd;
    if (auto it = w.find(d); it != w.end()) {
      wd = std::move(it->second);
      w.erase(it);
    }
    if (auto it = bstar.find(d); it != bstar.end()) {
      bd = std::move(it->second);
      bstar.erase(it);
    }

    auto append_a = [&](const Entry& e) { a[e.syz.second].push_back({e, d}); };

    // 4: entries taken in the same order the engine uses.
    auto next_bstar = [&]() {
      auto best = bd.begin();
      for (auto it = bd.begin(); it != bd.end(); ++it) {
        if (PairOrder{}(it->second.pair, best->second.pair)) best = it;
      }
      Entry e = best->second;
      bd.erase(best);
      return e;
    };
    while (!bd.empty()) {
      Entry cur = next_bstar();
      const ModuleTerm lt = head(cur);
      // 5
      if (const AEntry* x = in_a_d(lt, d)) {
        log(TraceKind::kAlreadyTreated, d, cur.pair.i, cur.pair.j,
            x->e.pair.i, x->e.pair.j);
        continue;
      }
      // 6
      if (auto it = in_w_d(wd, lt); it != wd.end()) {
        log(TraceKind::kKilledEqualHead, d, it->second.pair.i,
            it->second.pair.j, cur.pair.i, cur.pair.j);
        append_a(it->second);
        wd.erase(it);
        ++out.m23_kills;
        continue;
      }
      for (;;) {
        // 7
        const ModuleTerm cur_lt = head(cur);
        const AEntry* red = nullptr;
        if (auto it = a.find(cur_lt.component); it != a.end()) {
          for (const auto& x : it->second) {
            if (!(lex_compare(x.degree, d) < 0)) continue;
            if (!divides(head(x.e).term, cur_lt.term)) continue;
            if (red == nullptr) {
              red = &x;
              continue;
            }
            const Term& bt = head(red->e).term;
            const Term& xt = head(x.e).term;
            if (xt.total_degree() != bt.total_degree()
                    ? xt.total_degree() < bt.total_degree()
                    : (storage_compare(xt, bt) < 0 ||
                       (xt == bt && x.e.pair.i < red->e.pair.i))) {
              red = &x;
            }
          }
        }
        if (red == nullptr) {
          log(TraceKind::kNoReducer, d, cur.pair.i, cur.pair.j, 0, 0);
          break;
        }
        const HeadReductionStep step = head_reduce_step(cur.syz, red->e.syz, leading);
        ++out.head_reductions;
        log(TraceKind::kHeadReduction, d, cur.pair.i, cur.pair.j,
            red->e.pair.i, red->e.pair.j);
        if (!step.cofactor_is_one()) {
          log(TraceKind::kCofactorNotOne, d, cur.pair.i, cur.pair.j,
              red->e.pair.i, red->e.pair.j);
          break;
        }
        Entry kl = entry(step.k, step.l);
        const ModuleTerm kl_lt = head(kl);
        // 8
        if (const AEntry* x = in_a_d(kl_lt, d)) {
          log(TraceKind::kReducedTreated, d, step.k, step.l, x->e.pair.i,
              x->e.pair.j);
          break;
        }
        // 9
        if (auto it = in_w_d(wd, kl_lt); it != wd.end()) {
          log(TraceKind::kKilledReduced, d, it->second.pair.i,
              it->second.pair.j, cur.pair.i, cur.pair.j);
          append_a(it->second);
          wd.erase(it);
          ++out.m48_kills;
          break;
        }
        // 10
        auto again = bd.find(Key{step.k, step.l});
        if (again == bd.end()) break;
        bd.erase(again);
        log(TraceKind::kChained, d, step.k, step.l, cur.pair.i, cur.pair.j);
        cur = std::move(kl);
      }
    }
    // 11
    std::vector<CriticalPair> minimal;
    for (auto& [key, e] : wd) minimal.push_back(e.pair);
    std::sort(minimal.begin(), minimal.end(), PairOrder{});
    for (const auto& p : minimal) {
      log(TraceKind::kMinimal, d, p.i, p.j, 0, 0);
      out.theta.push_back(p);
    }
    for (auto& [key, e] : wd) append_a(e);
  }
  return out;
}

}  // namespace obb
