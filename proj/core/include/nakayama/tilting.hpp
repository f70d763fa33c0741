#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

struct SummandFlags {
  bool projective = false;
  bool simple_socle_of_projinj = false;
};

/// A tilting module with per-summand shape flags (aligned with modules).
struct TiltingRecord {
  ModuleSet modules;
  std::vector<SummandFlags> flags;

  friend bool operator==(const TiltingRecord& a, const TiltingRecord& b) {
    return a.modules == b.modules;
  }
};

TiltingRecord make_tilting_record(const Algebra& a, const ModuleSet& t);

/// Outcome of the tilting test; `violation` names the first failed condition.
struct TiltingCertificate {
  enum class Violation { none, projective_dimension, ext_nonvanishing, summand_count };

  Violation violation = Violation::none;
  std::optional<IndecModule> first;   ///< offending summand (or Ext source)
  std::optional<IndecModule> second;  ///< Ext target, if any

  bool tilting() const noexcept { return violation == Violation::none; }
  std::string describe() const;
};

/// pd <= 1 summandwise, Ext^1 vanishing on all ordered summand pairs, and
/// exactly N summands.
TiltingCertificate check_tilting(const Algebra& a, const ModuleSet& t);
bool is_tilting(const Algebra& a, const ModuleSet& t);

/// All tilting modules, sorted by canonical summand order. Normative route:
/// N-cliques in the Ext-compatibility graph of rigid pd <= 1 modules.
std::vector<TiltingRecord> enumerate_tilting(const Algebra& a);
/// Secondary route: closure of the regular module under mutation.
std::vector<TiltingRecord> enumerate_tilting_by_mutation(const Algebra& a);

/// x is in Gen(t), i.e. x is a quotient of one summand.
bool generates(const Algebra& a, const ModuleSet& t, const IndecModule& x);
/// Gen(lhs) is contained in Gen(rhs).
bool leq_gen(const Algebra& a, const ModuleSet& lhs, const ModuleSet& rhs);

/// The other complement of t without x, if there is one.
std::optional<TiltingRecord> mutation_at(const Algebra& a, const TiltingRecord& t,
                                         const IndecModule& x);

/// 0 -> P -> I(soc P) -> S -> 0 for a projective non-injective summand P,
/// paired with the actual mutation of t at P.
struct MutationSequence {
  IndecModule projective;
  IndecModule envelope;
  MaybeModule cokernel;
  std::optional<TiltingRecord> mutated;

  bool cokernel_simple() const noexcept { return cokernel && cokernel->len == 1; }
  /// Either no second complement exists, or it is exactly the cokernel.
  bool consistent() const;
};

MutationSequence proj_mutation_sequence(const Algebra& a, const TiltingRecord& t,
                                        const IndecModule& p);

/// I^0(A) + Ω^{-1}A without checks.
ModuleSet minimal_tilting_candidate(const Algebra& a);
/// Requires an Auslander 1-Gorenstein algebra; verifies that the candidate is
/// tilting and the unique Gen-minimum of enumerate_tilting.
TiltingRecord minimal_tilting(const Algebra& a);

/// Summands that are neither projective nor the simple socle of a
/// projective-injective indecomposable.
std::vector<IndecModule> summand_shape_violations(const Algebra& a, const ModuleSet& t);
bool summand_shape_check(const Algebra& a, const ModuleSet& t);

/// Exchange graph on the tilting modules. `hasse` holds covering relations
/// (lower, upper) of the Gen order.
struct ExchangeGraph {
  std::vector<TiltingRecord> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::pair<std::size_t, std::size_t>> hasse;

  bool connected() const;
  /// Whether the undirected Hasse diagram coincides with the exchange edges.
  bool hasse_matches_exchange() const;
};

ExchangeGraph exchange_graph(const Algebra& a);

std::string to_dot(const ExchangeGraph& g);

}  // namespace nakayama
