#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/tau_tilting.hpp"
#include "nakayama/tilting.hpp"

namespace nakayama {

/// Auslander algebra Γ of a radical-square-zero Nakayama algebra Λ.
/// dictionary[v-1] is the Λ-indecomposable M_v behind Γ-vertex v; a Γ-arrow
/// v -> v-1 corresponds to an irreducible map M_{v-1} -> M_v.
struct AuslanderResult {
  Algebra base;
  Algebra gamma;
  std::vector<IndecModule> dictionary;
  VertexSet projinj;  ///< Γ-vertices v with P(v) projective-injective
};

/// Closed-form Kupisch series of Γ. Throws unsupported_input unless Λ is
/// radical square zero.
AuslanderResult auslander_algebra(const Algebra& lambda);

/// Vertices v of `a` whose projective P(v) is also injective.
VertexSet projective_injective_vertices(const Algebra& a);

/// Sends a tilting Γ-module to a support τ-tilting pair over Γ/(e), e the
/// projective-injective idempotent: every summand goes to its largest
/// quotient supported off e, and unused surviving vertices join the killed
/// set.
SupportPair to_support_pair(const AuslanderResult& res, const TiltingRecord& t);

struct BijectionReport {
  std::size_t tilting_count = 0;
  std::size_t sttilt_count = 0;
  bool injective = false;
  bool surjective = false;
  std::vector<std::pair<ModuleSet, SupportPair>> matching;
  std::vector<std::string> mismatches;

  bool ok() const noexcept { return injective && surjective && mismatches.empty(); }
};

/// Compares tilt Γ with sτ-tilt Γ/(e) under to_support_pair.
BijectionReport verify_bijection(const AuslanderResult& res);

struct CountReport {
  int n = 0;
  Orientation kind = Orientation::linear;
  std::size_t count = 0;
  std::size_t expected = 0;
  bool shapes_ok = false;
  bool minimal_ok = false;
  std::vector<std::string> failures;

  bool ok() const noexcept { return count == expected && shapes_ok && minimal_ok && failures.empty(); }
};

inline constexpr int kMaxVerifyN = 10;

/// Tilting count of Γ for the radical-square-zero Λ with n simples, against
/// 2^n (cyclic) or 2^(n-1) (linear), plus summand shapes and the minimal
/// tilting module.
CountReport verify_counts(int n, Orientation kind);

}  // namespace nakayama
