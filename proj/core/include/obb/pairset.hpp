#pragma once

// Critical pairs, the Gebauer-Moeller rules, minimalization of the critical
// syzygies, and the pair bookkeeping (Update / MinPairs) driven by the
// engine.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "obb/algebra.hpp"
#include "obb/ordering.hpp"
#include "obb/reduction.hpp"
#include "obb/syzygy.hpp"

namespace obb {

/// (i, j), i < j, same component, with cached lcm and cofactors
/// t_ij = lcm/t_i, t_ji = lcm/t_j. Indices are 0-based.
struct CriticalPair {
  std::size_t i = 0;
  std::size_t j = 0;
  Term lcm;
  Term t_ij;
  Term t_ji;
  MultiDegree degree;

  /// "(1,3)" with 1-based indices.
  std::string label() const;
  bool same_indices(const CriticalPair& o) const { return i == o.i && j == o.j; }
};

CriticalPair make_critical_pair(std::size_t i, std::size_t j,
                                std::span<const LeadingData> leading,
                                const ModuleContext& ctx);

/// The selection order inside a degree slice: increasing DegLex of the lcm,
/// then (j, i).
struct PairOrder {
  bool operator()(const CriticalPair& a, const CriticalPair& b) const;
};

/// All critical pairs of the tuple, sorted by (j, i).
std::vector<CriticalPair> build_pairs(std::span<const LeadingData> leading,
                                      const ModuleContext& ctx);

struct GmRulesResult {
  std::vector<CriticalPair> sigma2;  // after Rules 1 and 2
  std::vector<CriticalPair> sigma3;  // after Rule 3
  std::size_t rule3_killed = 0;
};

/// Gebauer-Moeller Rules 1-3 applied to the full set of critical pairs.
GmRulesResult gm_rules(std::span<const CriticalPair> pairs,
                       std::span<const LeadingData> leading);

/// Pair-elimination counters. theta = sigma2 - m23_kills - m48_kills holds
/// for every optimized run; for gm runs treated = sigma2 - rule3_kills.
struct PairStats {
  std::size_t sigma_total = 0;  // #(Sigma): all critical pairs formed
  std::size_t sigma2 = 0;       // #(Sigma''): survivors of Rules 1-2
  std::size_t rule3_kills = 0;  // B
  std::size_t m23_kills = 0;    // M23
  std::size_t m48_kills = 0;    // M48
  std::size_t theta = 0;        // #(Theta) (optimized runs)
  std::size_t treated = 0;      // pairs whose S-vector was reduced
  std::size_t zero_reductions = 0;
  std::size_t bstar_entries = 0;
  /// Pairs Rule 3 flags that were nevertheless treated. Always 0 in the
  /// optimized strategy; checked by tests.
  std::size_t rule3_treated = 0;

  std::int64_t gain() const {
    return static_cast<std::int64_t>(m23_kills + m48_kills) -
           static_cast<std::int64_t>(rule3_kills);
  }
};

// ------------------------------------------------------------------ trace

enum class TraceKind {
  kPairsFormed,      // U1
  kRule1Deleted,     // U2 / Rule 1
  kRule2Deleted,     // U3 / Rule 2
  kRule3Deleted,     // GM backward criterion
  kBStarAdded,       // U4 / pair of pairs with coprime cofactors
  kAlreadyTreated,   // M2 / step 5
  kKilledEqualHead,  // M3 / step 6
  kHeadReduction,    // M4 / step 7
  kCofactorNotOne,   // M4 / step 7 with cofactor != 1
  kReducedTreated,   // M5 / step 8
  kKilledReduced,    // M6 / step 9
  kChained,          // M7 / step 10
  kNoReducer,        // M4 found nothing (not expected on valid input)
  kTreated,          // step 4: S-vector reduced
  kNewElement,       // new basis element appended
  kMinimal,          // step 11: minimal generator
};

std::string to_string(TraceKind kind);

struct TraceEvent {
  TraceKind kind;
  MultiDegree degree;
  std::size_t i = 0;  // subject pair (0-based)
  std::size_t j = 0;
  std::size_t other_i = 0;  // related pair, when there is one
  std::size_t other_j = 0;
  std::size_t element = 0;  // basis index for kNewElement / kPairsFormed

  std::string describe() const;
};

// -------------------------------------------------- syzygy minimalization

struct SigmaBamResult {
  std::vector<CriticalPair> theta;
  std::vector<CriticalPair> bstar;  // pairs of pairs with cofactor 1
  std::size_t m23_kills = 0;        // steps 5-6
  std::size_t m48_kills = 0;        // steps 7-10
  std::size_t head_reductions = 0;
  std::vector<TraceEvent> trace;
};

/// Minimalizes the critical syzygies: returns Theta, a subset of `sigma2`
/// minimally generating the syzygy module of the leading monomials.
/// `sigma2` must be the Rules-1-2 survivor set for tau's leading terms.
SigmaBamResult sigma_bam(std::span<const CriticalPair> sigma2,
                         const InducedOrdering& tau, const ModuleContext& ctx);

// ------------------------------------------------------- engine pair sets

/// Pairs of one degree, in PairOrder, with lookup by (j, t_ji).
class PairSlice {
 public:
  PairSlice() = default;
  PairSlice(MultiDegree degree, std::vector<CriticalPair> pairs);

  const MultiDegree& degree() const noexcept { return degree_; }
  bool empty() const noexcept { return alive_count_ == 0; }
  std::size_t size() const noexcept { return alive_count_; }

  /// Removes and returns the first pair in selection order.
  std::optional<CriticalPair> pop_front();
  /// The pair (i', j) with t_ji' == t_ji, if present.
  std::optional<CriticalPair> find_equal_head(std::size_t j,
                                              const Term& t_ji) const;
  void erase(const CriticalPair& p);
  std::vector<CriticalPair> remaining() const;

 private:
  MultiDegree degree_;
  std::vector<CriticalPair> pairs_;
  std::vector<bool> alive_;
  std::size_t alive_count_ = 0;
  std::size_t cursor_ = 0;
  std::map<std::pair<std::size_t, Term>, std::size_t,
           bool (*)(const std::pair<std::size_t, Term>&,
                    const std::pair<std::size_t, Term>&)>
      by_head_{&head_less};

  static bool head_less(const std::pair<std::size_t, Term>& a,
                        const std::pair<std::size_t, Term>& b);
};

/// Pairs of pairs of one degree.
using BStarSlice = std::set<CriticalPair, PairOrder>;

enum class Strategy { kNaive, kGm, kCkr };

std::string to_string(Strategy s);
Strategy parse_strategy(std::string_view name);

/// The pair collections A, B and B* of one engine run.
class PairCollections {
 public:
  PairCollections(Strategy strategy, ContextPtr ctx,
                  std::optional<MultiDegree> truncation = std::nullopt);

  /// Registers the basis element with index `new_index` (= leading.size()-1)
  /// and forms its pairs according to the strategy.
  void update(std::span<const LeadingData> leading, std::size_t new_index,
              PairStats& stats, std::vector<TraceEvent>* trace);

  bool pending_empty() const noexcept { return pending_.empty(); }
  std::optional<MultiDegree> smallest_degree() const;

  /// Removes and returns B_d (and B*_d for the optimized strategy). B*
  /// entries of lower degree are discarded.
  PairSlice take_slice(const MultiDegree& d);
  BStarSlice take_bstar_slice(const MultiDegree& d);

  /// MinPairs(A, B_d, B*_d).
  void min_pairs(PairSlice& b_d, BStarSlice& bstar_d, PairStats& stats,
                 std::vector<TraceEvent>* trace);

  /// Step 4: the pair is chosen for treatment and appended to A.
  void mark_treated(const CriticalPair& p, PairStats& stats);

  std::size_t treated_size() const noexcept { return a_size_; }

 private:
  struct AEntry {
    std::size_t i;
    Term t_ji;
  };

  void append_to_a(const CriticalPair& p);
  const AEntry* find_in_a(std::size_t j, const Term& t_ji) const;
  const AEntry* find_reducer_in_a(std::size_t i, std::size_t j,
                                  const Term& t_ji) const;
  void enqueue(CriticalPair p);
  void apply_rule3(std::span<const LeadingData> leading, std::size_t new_index,
                   bool remove, PairStats& stats,
                   std::vector<TraceEvent>* trace);

  Strategy strategy_;
  ContextPtr ctx_;
  std::optional<MultiDegree> truncation_;
  std::map<MultiDegree, std::vector<CriticalPair>> pending_;  // B
  std::map<MultiDegree, std::vector<CriticalPair>> bstar_;    // B*
  std::set<std::pair<std::size_t, std::size_t>> bstar_seen_;
  std::set<std::pair<std::size_t, std::size_t>> rule3_marked_;
  std::vector<std::vector<AEntry>> a_by_j_;  // A
  std::size_t a_size_ = 0;
  std::vector<LeadingData> leading_;
};

}  // namespace obb
