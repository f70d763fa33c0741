#include "nakayama/tilting.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "detail/clique.hpp"
#include "nakayama/homology.hpp"

namespace nakayama {

namespace {

bool pd_at_most_one(const Algebra& a, const IndecModule& m) {
  return proj_dim(a, m) <= ExtendedNat(1);
}

std::vector<IndecModule> projective_injectives(const Algebra& a) {
  std::vector<IndecModule> out;
  for (Vertex v = 1; v <= a.size(); ++v)
    if (is_injective(a, a.projective(v))) out.push_back(a.projective(v));
  return out;
}

bool is_socle_of_projinj(const Algebra& a, const IndecModule& m) {
  if (m.len != 1) return false;
  const auto pis = projective_injectives(a);
  return std::any_of(pis.begin(), pis.end(),
                     [&](const IndecModule& p) { return a.socle(p) == m.top; });
}

std::vector<TiltingRecord> sorted_records(const Algebra& a, std::set<ModuleSet> found) {
  std::vector<TiltingRecord> out;
  out.reserve(found.size());
  for (const auto& t : found) out.push_back(make_tilting_record(a, t));
  return out;
}

}  // namespace

TiltingRecord make_tilting_record(const Algebra& a, const ModuleSet& t) {
  a.require_valid(t);
  TiltingRecord rec{t, {}};
  rec.flags.reserve(t.size());
  for (const auto& m : t) rec.flags.push_back({a.is_projective(m), is_socle_of_projinj(a, m)});
  return rec;
}

std::string TiltingCertificate::describe() const {
  switch (violation) {
    case Violation::none:
      return "tilting";
    case Violation::projective_dimension:
      return "pd " + to_string(first) + " > 1";
    case Violation::ext_nonvanishing:
      return "Ext^1(" + to_string(first) + ", " + to_string(second) + ") != 0";
    case Violation::summand_count:
      return "wrong number of indecomposable summands";
  }
  return {};
}

TiltingCertificate check_tilting(const Algebra& a, const ModuleSet& t) {
  a.require_valid(t);
  using V = TiltingCertificate::Violation;
  for (const auto& m : t)
    if (!pd_at_most_one(a, m)) return {V::projective_dimension, m, std::nullopt};
  for (const auto& x : t)
    for (const auto& y : t)
      if (ext1_dim(a, x, y) != 0) return {V::ext_nonvanishing, x, y};
  if (static_cast<int>(t.size()) != a.size()) return {V::summand_count, std::nullopt, std::nullopt};
  return {};
}

bool is_tilting(const Algebra& a, const ModuleSet& t) { return check_tilting(a, t).tilting(); }

std::vector<TiltingRecord> enumerate_tilting(const Algebra& a) {
  std::vector<IndecModule> pool;
  for (const auto& m : indecomposables(a))
    if (pd_at_most_one(a, m) && ext1_dim(a, m, m) == 0) pool.push_back(m);

  detail::CompatibilityGraph g(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      if (ext1_dim(a, pool[i], pool[j]) == 0 && ext1_dim(a, pool[j], pool[i]) == 0) g.connect(i, j);

  std::set<ModuleSet> found;
  detail::for_each_k_clique(g, static_cast<std::size_t>(a.size()),
                            [&](const std::vector<std::size_t>& clique) {
                              std::vector<IndecModule> items;
                              for (auto i : clique) items.push_back(pool[i]);
                              found.insert(ModuleSet(std::move(items)));
                            });
  for (const auto& t : found)
    if (!is_tilting(a, t))
      throw Error(ErrorCode::internal_inconsistency,
                  "clique " + to_string(t) + " failed the tilting re-check");
  return sorted_records(a, std::move(found));
}

std::vector<TiltingRecord> enumerate_tilting_by_mutation(const Algebra& a) {
  std::vector<IndecModule> regular;
  for (Vertex v = 1; v <= a.size(); ++v) regular.push_back(a.projective(v));
  const ModuleSet start(std::move(regular));

  std::set<ModuleSet> found{start};
  std::deque<ModuleSet> queue{start};
  while (!queue.empty()) {
    const auto rec = make_tilting_record(a, queue.front());
    queue.pop_front();
    for (const auto& x : rec.modules) {
      auto next = mutation_at(a, rec, x);
      if (next && found.insert(next->modules).second) queue.push_back(next->modules);
    }
  }
  return sorted_records(a, std::move(found));
}

bool generates(const Algebra& a, const ModuleSet& t, const IndecModule& x) {
  a.require_valid(x);
  return std::any_of(t.begin(), t.end(),
                     [&](const IndecModule& m) { return m.top == x.top && x.len <= m.len; });
}

bool leq_gen(const Algebra& a, const ModuleSet& lhs, const ModuleSet& rhs) {
  return std::all_of(lhs.begin(), lhs.end(),
                     [&](const IndecModule& m) { return generates(a, rhs, m); });
}

std::optional<TiltingRecord> mutation_at(const Algebra& a, const TiltingRecord& t,
                                         const IndecModule& x) {
  if (!t.modules.contains(x))
    throw Error(ErrorCode::not_a_summand, to_string(x) + " is not a summand of " + to_string(t.modules));
  const ModuleSet rest = t.modules.without(x);
  std::optional<TiltingRecord> result;
  for (const auto& y : indecomposables(a)) {
    if (t.modules.contains(y) || !pd_at_most_one(a, y)) continue;
    const ModuleSet candidate = rest.with(y);
    if (!is_tilting(a, candidate)) continue;
    if (result)
      throw Error(ErrorCode::internal_inconsistency,
                  "almost complete tilting module " + to_string(rest) + " has three complements");
    result = make_tilting_record(a, candidate);
  }
  return result;
}

bool MutationSequence::consistent() const {
  if (!mutated) return true;
  return cokernel && mutated->modules.contains(*cokernel) && !mutated->modules.contains(projective);
}

MutationSequence proj_mutation_sequence(const Algebra& a, const TiltingRecord& t,
                                        const IndecModule& p) {
  if (!t.modules.contains(p))
    throw Error(ErrorCode::not_a_summand, to_string(p) + " is not a summand of " + to_string(t.modules));
  if (!a.is_projective(p) || is_injective(a, p))
    throw Error(ErrorCode::not_applicable, to_string(p) + " is not projective non-injective");
  const IndecModule env = injective_env_vertex(a, a.socle(p));
  MutationSequence seq{p, env, quotient_top(a, env, env.len - p.len), mutation_at(a, t, p)};
  return seq;
}

ModuleSet minimal_tilting_candidate(const Algebra& a) {
  const auto profile = gorenstein_profile(a);
  std::vector<IndecModule> items(profile.i0.begin(), profile.i0.end());
  for (const auto& m : cosyzygy_of_regular(a)) items.push_back(m);
  return ModuleSet(std::move(items));
}

TiltingRecord minimal_tilting(const Algebra& a) {
  if (!gorenstein_profile(a).is_1_gorenstein)
    throw Error(ErrorCode::not_applicable,
                to_string(a) + " is not Auslander 1-Gorenstein (I^0 is not projective)");
  const ModuleSet candidate = minimal_tilting_candidate(a);
  const auto cert = check_tilting(a, candidate);
  if (!cert.tilting())
    throw Error(ErrorCode::verification_failed,
                "I^0 + cosyzygy of the regular module is not tilting: " + cert.describe());

  std::vector<ModuleSet> minima;
  const auto all = enumerate_tilting(a);
  for (const auto& t : all) {
    const bool below_all = std::all_of(all.begin(), all.end(), [&](const TiltingRecord& o) {
      return leq_gen(a, t.modules, o.modules);
    });
    if (below_all) minima.push_back(t.modules);
  }
  if (minima.size() != 1 || minima.front() != candidate)
    throw Error(ErrorCode::verification_failed,
                "Gen-order minimum does not equal " + to_string(candidate));
  return make_tilting_record(a, candidate);
}

std::vector<IndecModule> summand_shape_violations(const Algebra& a, const ModuleSet& t) {
  a.require_valid(t);
  std::vector<IndecModule> out;
  for (const auto& m : t)
    if (!a.is_projective(m) && !is_socle_of_projinj(a, m)) out.push_back(m);
  return out;
}

bool summand_shape_check(const Algebra& a, const ModuleSet& t) {
  return summand_shape_violations(a, t).empty();
}

// ---------------------------------------------------------------------------
// Exchange graph

bool ExchangeGraph::connected() const {
  if (nodes.empty()) return false;
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<bool> seen(nodes.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
  }
  return reached == nodes.size();
}

bool ExchangeGraph::hasse_matches_exchange() const {
  std::set<std::pair<std::size_t, std::size_t>> lhs, rhs;
  for (auto [i, j] : edges) lhs.insert(std::minmax(i, j));
  for (auto [i, j] : hasse) rhs.insert(std::minmax(i, j));
  return lhs == rhs;
}

ExchangeGraph exchange_graph(const Algebra& a) {
  ExchangeGraph g;
  g.nodes = enumerate_tilting(a);
  const std::size_t n = g.nodes.size();
  const auto corank_one = static_cast<std::size_t>(a.size() - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.nodes[i].modules.overlap(g.nodes[j].modules) == corank_one) g.edges.emplace_back(i, j);

  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      less[i][j] = i != j && leq_gen(a, g.nodes[i].modules, g.nodes[j].modules);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!less[i][j]) continue;
      bool covering = true;
      for (std::size_t k = 0; k < n && covering; ++k)
        if (less[i][k] && less[k][j]) covering = false;
      if (covering) g.hasse.emplace_back(i, j);
    }
  return g;
}

std::string to_dot(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "digraph exchange {\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    os << "  t" << i << " [label=\"" << to_string(g.nodes[i].modules) << "\"];\n";
  for (auto [i, j] : g.edges) os << "  t" << i << " -> t" << j << " [dir=none];\n";
  for (auto [lo, hi] : g.hasse) os << "  t" << lo << " -> t" << hi << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace nakayama
