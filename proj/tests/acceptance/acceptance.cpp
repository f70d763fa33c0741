// One line per acceptance criterion; exit status 0 iff every line is PASS.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nakayama/auslander.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/tau_tilting.hpp"
#include "nakayama/tilting.hpp"
#include "nakayama/verify.hpp"
#include "support.hpp"

namespace {

using namespace nakayama;
using Clock = std::chrono::steady_clock;

constexpr double kCountBudgetSeconds = 60.0;
constexpr double kOracleBudgetSeconds = 300.0;
constexpr int kCountMaxLinear = 8;
constexpr int kCountMaxCyclic = 6;
constexpr int kShapeMaxN = 6;
constexpr int kMinimalMaxN = 5;
constexpr int kSemisimpleMaxN = 10;
constexpr int kBijectionMaxN = 6;
constexpr int kOracleMaxVertices = 6;
constexpr int kOracleMaxEntry = 4;
constexpr int kEndAlgebraMaxN = 5;
constexpr int kProfileMaxN = 8;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<AuslanderResult> gammas(int max_n) {
  std::vector<AuslanderResult> out;
  for (Orientation kind : {Orientation::linear, Orientation::cyclic})
    for (int n = 1; n <= max_n; ++n) out.push_back(auslander_algebra(make_rsz_nakayama(n, kind)));
  return out;
}

std::string where(const AuslanderResult& r) { return to_string(r.gamma); }

Outcome counts() {
  const auto start = Clock::now();
  Outcome o;
  std::size_t checked = 0;
  for (Orientation kind : {Orientation::linear, Orientation::cyclic}) {
    const int max_n = kind == Orientation::linear ? kCountMaxLinear : kCountMaxCyclic;
    for (int n = 1; n <= max_n; ++n) {
      const auto gamma = auslander_algebra(make_rsz_nakayama(n, kind)).gamma;
      const std::size_t expected = std::size_t{1} << (kind == Orientation::linear ? n - 1 : n);
      const auto got = enumerate_tilting(gamma).size();
      ++checked;
      if (got != expected) {
        o.pass = false;
        o.detail += std::string(to_string(kind)) + " n=" + std::to_string(n) + ": " +
                    std::to_string(got) + " != " + std::to_string(expected) + "; ";
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= kCountBudgetSeconds) o.pass = false;
  std::ostringstream os;
  os << checked << " algebras, " << std::fixed << std::setprecision(2) << secs << "s (budget "
     << kCountBudgetSeconds << "s)";
  o.detail = o.detail + os.str();
  return o;
}

Outcome golden_families() {
  const auto check = [](const Algebra& g, const std::vector<std::string>& listed) {
    std::vector<ModuleSet> want, got;
    for (const auto& t : listed) want.push_back(testing::modules(g, t));
    for (const auto& t : enumerate_tilting(g)) got.push_back(t.modules);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    return want == got;
  };
  const bool lin = check(testing::gamma_lin3(),
                         {"P(1) P(2) P(3) P(4) P(5)", "P(5) P(4) S(4) P(2) P(1)",
                          "P(5) P(4) P(3) P(2) S(2)", "P(5) P(4) S(4) P(2) S(2)"});
  const bool cyc = check(testing::gamma_cyc3(),
                         {"P(1) P(2) P(3) P(4) P(5) P(6)", "S(1) P(5) P(4) P(3) P(2) P(1)",
                          "P(6) P(5) S(5) P(3) P(2) P(1)", "P(6) P(5) P(4) P(3) S(3) P(1)",
                          "S(1) P(5) S(5) P(3) P(2) P(1)", "P(6) P(5) S(5) P(3) S(3) P(1)",
                          "S(1) P(5) P(4) P(3) S(3) P(1)", "S(1) P(5) S(5) P(3) S(3) P(1)"});
  return {lin && cyc, std::string("linear n=3 ") + (lin ? "match" : "MISMATCH") + ", cyclic n=3 " +
                          (cyc ? "match" : "MISMATCH")};
}

Outcome base_case() {
  const auto g = auslander_algebra(make_rsz_nakayama(1, Orientation::cyclic)).gamma;
  const auto n = enumerate_tilting(g).size();
  return {g == testing::dual_numbers_gamma() && n == 2, to_string(g) + ": " + std::to_string(n) + " tilting modules"};
}

Outcome summand_shapes() {
  Outcome o;
  std::size_t modules = 0;
  for (const auto& r : gammas(kShapeMaxN))
    for (const auto& t : enumerate_tilting(r.gamma)) {
      ++modules;
      for (const auto& bad : summand_shape_violations(r.gamma, t.modules)) {
        o.pass = false;
        o.detail += where(r) + " " + to_string(bad) + "; ";
      }
    }
  o.detail += std::to_string(modules) + " tilting modules, n <= " + std::to_string(kShapeMaxN);
  return o;
}

Outcome projective_mutations() {
  Outcome o;
  std::size_t exchanges = 0;
  for (const auto& r : gammas(kShapeMaxN))
    for (const auto& t : enumerate_tilting(r.gamma))
      for (const auto& p : t.modules) {
        if (!r.gamma.is_projective(p) || is_injective(r.gamma, p)) continue;
        const auto seq = proj_mutation_sequence(r.gamma, t, p);
        ++exchanges;
        if (!seq.cokernel_simple() || !seq.consistent()) {
          o.pass = false;
          o.detail += where(r) + " at " + to_string(p) + "; ";
        }
      }
  o.detail += std::to_string(exchanges) + " projective non-injective summands";
  return o;
}

Outcome minimal_modules() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& r : gammas(kMinimalMaxN)) {
    ++checked;
    try {
      const auto m = minimal_tilting(r.gamma);
      if (m.modules != minimal_tilting_candidate(r.gamma)) throw Error(ErrorCode::verification_failed, "candidate");
    } catch (const Error& e) {
      o.pass = false;
      o.detail += where(r) + ": " + e.what() + "; ";
    }
  }
  o.detail += std::to_string(checked) + " algebras, n <= " + std::to_string(kMinimalMaxN);
  return o;
}

Outcome semisimple_counts() {
  Outcome o;
  for (int n = 1; n <= kSemisimpleMaxN; ++n) {
    const auto pairs = enumerate_sttilt(semisimple_algebra(n));
    const bool zero = std::any_of(pairs.begin(), pairs.end(), [](const SupportPair& p) { return p.modules.empty(); });
    if (pairs.size() != (std::size_t{1} << n) || !zero) {
      o.pass = false;
      o.detail += "n=" + std::to_string(n) + ": " + std::to_string(pairs.size()) + "; ";
    }
  }
  o.detail += "n = 1.." + std::to_string(kSemisimpleMaxN);
  return o;
}

Outcome bijections() {
  Outcome o;
  std::size_t total = 0;
  for (const auto& r : gammas(kBijectionMaxN)) {
    const auto rep = verify_bijection(r);
    total += rep.tilting_count;
    if (!rep.ok()) {
      o.pass = false;
      o.detail += where(r) + "; ";
    }
  }
  o.detail += std::to_string(total) + " tilting modules matched, n <= " + std::to_string(kBijectionMaxN);
  return o;
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  Outcome o;
  const auto universe = kupisch_universe(kOracleMaxVertices, kOracleMaxEntry);
  std::size_t mismatches = 0;
  for (const auto& a : universe)
    for (const auto& m : compare_with_oracle(a)) {
      if (mismatches++ < 3) o.detail += m.algebra + " " + m.quantity + " " + m.detail + "; ";
    }
  std::size_t quivers = 0;
  for (const auto& r : gammas(kEndAlgebraMaxN)) {
    ++quivers;
    for (const auto& m : auslander_oracle_mismatches(r)) {
      if (mismatches++ < 3) o.detail += where(r) + " " + m + "; ";
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.pass = mismatches == 0 && secs < kOracleBudgetSeconds;
  std::ostringstream os;
  os << universe.size() << " algebras + " << quivers << " Auslander quivers, " << mismatches
     << " mismatches, " << std::fixed << std::setprecision(1) << secs << "s (budget "
     << kOracleBudgetSeconds << "s)";
  o.detail += os.str();
  return o;
}

Outcome gorenstein_profiles() {
  Outcome o;
  for (const auto& r : gammas(kProfileMaxN)) {
    const auto p = gorenstein_profile(r.gamma);
    if (!(p.gldim <= ExtendedNat(2)) || !p.i0_projective || !p.i1_projective) {
      o.pass = false;
      o.detail += where(r) + "; ";
    }
  }
  for (int n = 1; n <= kProfileMaxN; ++n) {
    const auto p = gorenstein_profile(make_rsz_nakayama(n, Orientation::cyclic));
    if (!p.is_1_gorenstein || !p.gldim.is_infinite()) {
      o.pass = false;
      o.detail += "cyclic base n=" + std::to_string(n) + "; ";
    }
  }
  o.detail += "n <= " + std::to_string(kProfileMaxN);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"tilting counts 2^(n-1) linear / 2^n cyclic", counts},
      {"worked-example tilting families", golden_families},
      {"dual-numbers base case", base_case},
      {"summands projective or socle of projective-injective", summand_shapes},
      {"projective exchange by simple cokernel", projective_mutations},
      {"minimal tilting module is I0 + cosyzygy", minimal_modules},
      {"semisimple support tau-tilting count 2^n", semisimple_counts},
      {"tilting to support tau-tilting bijection", bijections},
      {"closed forms and Auslander quivers match the oracle", oracle_equivalence},
      {"Gorenstein profiles", gorenstein_profiles},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << " -- "
              << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
