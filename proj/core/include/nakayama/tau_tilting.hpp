#pragma once

#include <compare>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

/// Support τ-tilting pair in parent coordinates: `modules` is τ-tilting over
/// the quotient by the idempotents at `killed`.
struct SupportPair {
  ModuleSet modules;
  VertexSet killed;

  friend bool operator==(const SupportPair&, const SupportPair&) = default;
  friend auto operator<=>(const SupportPair& a, const SupportPair& b) {
    if (auto c = a.modules <=> b.modules; c != 0) return c;
    return a.killed <=> b.killed;
  }
};

/// Hom(X, τY) = 0 for all summands X, Y.
bool is_tau_rigid(const Algebra& a, const ModuleSet& m);

/// τ-tilting modules over a connected algebra (τ-rigid, |M| = N).
std::vector<ModuleSet> enumerate_tau_tilting(const Algebra& a);

/// Support τ-tilting modules over q, one pair per killed set containing
/// q.killed, in canonical order.
std::vector<SupportPair> enumerate_sttilt(const QuotientAlgebra& q);
std::vector<SupportPair> enumerate_sttilt(const Algebra& a);

/// Pair formulation: M τ-rigid over A, Hom(P(v), M) = 0 for v in kill, and
/// |M| + |kill| = N.
bool is_sttilt_pair(const Algebra& a, const ModuleSet& m, const VertexSet& kill);

}  // namespace nakayama
