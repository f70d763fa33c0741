#include "nakayama/tau_tilting.hpp"

#include <algorithm>

#include "detail/clique.hpp"
#include "nakayama/homology.hpp"

namespace nakayama {

namespace {

bool hom_to_tau_vanishes(const Algebra& a, const IndecModule& x, const IndecModule& y) {
  const auto ty = tau(a, y);
  return !ty || hom_dim(a, x, *ty) == 0;
}

}  // namespace

bool is_tau_rigid(const Algebra& a, const ModuleSet& m) {
  a.require_valid(m);
  for (const auto& x : m)
    for (const auto& y : m)
      if (!hom_to_tau_vanishes(a, x, y)) return false;
  return true;
}

std::vector<ModuleSet> enumerate_tau_tilting(const Algebra& a) {
  std::vector<IndecModule> pool;
  for (const auto& m : indecomposables(a))
    if (hom_to_tau_vanishes(a, m, m)) pool.push_back(m);

  detail::CompatibilityGraph g(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      if (hom_to_tau_vanishes(a, pool[i], pool[j]) && hom_to_tau_vanishes(a, pool[j], pool[i]))
        g.connect(i, j);

  std::vector<ModuleSet> out;
  detail::for_each_k_clique(g, static_cast<std::size_t>(a.size()),
                            [&](const std::vector<std::size_t>& clique) {
                              std::vector<IndecModule> items;
                              for (auto i : clique) items.push_back(pool[i]);
                              out.emplace_back(std::move(items));
                            });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SupportPair> enumerate_sttilt(const QuotientAlgebra& q) {
  const VertexSet surviving = q.surviving();
  const std::vector<Vertex> alive(surviving.begin(), surviving.end());
  if (alive.size() >= 31)
    throw Error(ErrorCode::unsupported_input, "too many simples for killed-set enumeration");

  std::vector<SupportPair> out;
  const unsigned long subsets = 1ul << alive.size();
  for (unsigned long mask = 0; mask < subsets; ++mask) {
    VertexSet extra;
    for (std::size_t b = 0; b < alive.size(); ++b)
      if (mask & (1ul << b)) extra.insert(alive[b]);
    const QuotientAlgebra sub = quotient_algebra(q, extra);

    // τ-tilting over a product is a product of τ-tilting modules.
    std::vector<std::vector<IndecModule>> partial{{}};
    for (std::size_t c = 0; c < sub.components.size(); ++c) {
      std::vector<std::vector<IndecModule>> next;
      for (const auto& local : enumerate_tau_tilting(sub.components[c]))
        for (const auto& prefix : partial) {
          auto items = prefix;
          for (const auto& m : local) items.push_back(sub.to_parent(c, m));
          next.push_back(std::move(items));
        }
      partial = std::move(next);
    }
    for (auto& items : partial) out.push_back({ModuleSet(std::move(items)), sub.killed});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](const SupportPair& x, const SupportPair& y) { return x.modules == y.modules; }),
            out.end());
  return out;
}

std::vector<SupportPair> enumerate_sttilt(const Algebra& a) {
  return enumerate_sttilt(quotient_algebra(a, {}));
}

bool is_sttilt_pair(const Algebra& a, const ModuleSet& m, const VertexSet& kill) {
  a.require_valid(m);
  for (Vertex v : kill)
    if (!a.is_vertex(v))
      throw Error(ErrorCode::unknown_vertex, "vertex " + std::to_string(v) + " is not a vertex");
  if (static_cast<int>(m.size() + kill.size()) != a.size()) return false;
  for (const auto& x : m) {
    for (Vertex v : a.layers(x))
      if (kill.count(v)) return false;
    for (Vertex v : kill)
      if (hom_dim(a, a.projective(v), x) != 0) return false;
  }
  return is_tau_rigid(a, m);
}

}  // namespace nakayama
