#include "obb/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "obb/error.hpp"
#include "obb/syzygy.hpp"

namespace obb {

std::vector<ModuleVector> naive_gb(std::span<const ModuleVector> generators,
                                   const TermOrder& order) {
  std::vector<ModuleVector> g;
  for (const auto& v : generators) {
    if (!v.is_zero()) g.push_back(v);
  }
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) queue.emplace_back(i, j);
  }
  while (!queue.empty()) {
    const auto [i, j] = queue.front();
    queue.pop_front();
    const LeadingData li = leading_monomial(g[i], order);
    const LeadingData lj = leading_monomial(g[j], order);
    if (li.component != lj.component) continue;
    ModuleVector r = normal_remainder(s_vector(g[i], g[j], order), g, order);
    if (r.is_zero()) continue;
    g.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) {
      queue.emplace_back(k, g.size() - 1);
    }
  }
  return g;
}

bool is_member(const ModuleVector& v, std::span<const ModuleVector> gb,
               const TermOrder& order) {
  return normal_remainder(v, gb, order).is_zero();
}

OracleReport minimalize(std::span<const ModuleVector> generators,
                        const OrderingSpec& order) {
  std::vector<std::size_t> idx(generators.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<MultiDegree> deg(generators.size());
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].is_zero()) continue;
    const auto h = is_homogeneous(generators[k]);
    if (!h) {
      throw NonHomogeneousError(k, "generator " + std::to_string(k + 1) +
                                       " is not homogeneous");
    }
    deg[k] = h->value;
  }
  std::erase_if(idx, [&](std::size_t k) { return generators[k].is_zero(); });
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return lex_compare(deg[a], deg[b]) < 0;
  });

  OracleReport out;
  std::vector<ModuleVector> kept;
  std::vector<ModuleVector> gb;
  for (std::size_t k : idx) {
    if (!gb.empty() && is_member(generators[k], gb, order)) continue;
    out.indices.push_back(k);
    kept.push_back(generators[k]);
    gb = naive_gb(kept, order);
  }
  out.mu = out.indices.size();
  return out;
}

std::vector<ModuleVector> syzygy_vectors(std::span<const CriticalPair> pairs,
                                         std::span<const LeadingData> leading,
                                         const ModuleContext& ctx) {
  const ContextPtr syz = syzygy_context(leading, ctx);
  std::vector<ModuleVector> out;
  for (const auto& p : pairs) {
    out.push_back(to_module_vector(critical_syzygy(p.i, p.j, leading), syz));
  }
  return out;
}

std::size_t syzygy_mu(std::span<const CriticalPair> pairs,
                      std::span<const LeadingData> leading,
                      const ModuleContext& ctx) {
  return minimalize(syzygy_vectors(pairs, leading, ctx)).mu;
}

}  // namespace obb
