#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nakayama/algebra.hpp"
#include "nakayama/auslander.hpp"

namespace nakayama {

/// Every valid Kupisch series with at most max_vertices entries, each at
/// most max_entry, both orientations, in a fixed order.
std::vector<Algebra> kupisch_universe(int max_vertices, int max_entry);

struct OracleMismatch {
  std::string algebra;
  std::string quantity;
  std::string detail;
};

/// Closed-form hom_dim, ext1_dim, tau and syzygy against the representation
/// oracle, over all modules (pairs) of `a`.
std::vector<OracleMismatch> compare_with_oracle(const Algebra& a);

/// Kupisch model of Γ against the quiver of the oracle's endomorphism
/// algebra of the Λ-indecomposables: vertex count, arrows, total dimension
/// and which length-two paths vanish.
std::vector<std::string> auslander_oracle_mismatches(const AuslanderResult& res);

struct Assertion {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int max_n = 5;
  bool with_oracle = false;
};

/// Runs the whole chain of structural checks on the Auslander algebras of
/// radical-square-zero Nakayama algebras with up to max_n simples.
std::vector<Assertion> verify_paper(const VerifyOptions& options);

nlohmann::json to_json(const std::vector<Assertion>& report);

}  // namespace nakayama
