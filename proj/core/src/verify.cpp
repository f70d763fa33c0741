#include "nakayama/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "nakayama/homology.hpp"
#include "nakayama/io.hpp"
#include "nakayama/oracle/end_algebra.hpp"
#include "nakayama/oracle/representation.hpp"
#include "nakayama/tau_tilting.hpp"
#include "nakayama/tilting.hpp"

namespace nakayama {

std::vector<Algebra> kupisch_universe(int max_vertices, int max_entry) {
  std::vector<Algebra> out;
  for (Orientation kind : {Orientation::linear, Orientation::cyclic})
    for (int n = 1; n <= max_vertices; ++n) {
      std::vector<int> c(static_cast<std::size_t>(n), 1);
      std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == c.size()) {
          try {
            out.push_back(validate_kupisch(kind, c));
          } catch (const Error&) {
          }
          return;
        }
        for (int x = 1; x <= max_entry; ++x) {
          c[i] = x;
          fill(i + 1);
        }
      };
      fill(0);
    }
  return out;
}

std::vector<OracleMismatch> compare_with_oracle(const Algebra& a) {
  std::vector<OracleMismatch> out;
  const auto name = to_string(a);
  const auto mods = indecomposables(a);
  for (const auto& m : mods) {
    if (tau(a, m) != oracle::tau_via_dtr(a, m))
      out.push_back({name, "tau", to_string(m) + ": " + to_string(tau(a, m)) + " vs " +
                                      to_string(oracle::tau_via_dtr(a, m))});
    if (syzygy(a, m) != oracle::syzygy_via_kernel(a, m))
      out.push_back({name, "syzygy", to_string(m)});
    for (const auto& n : mods) {
      const auto h = hom_dim(a, m, n);
      const auto ho = oracle::hom_space_dim(a, m, n);
      if (h < 0 || static_cast<std::size_t>(h) != ho)
        out.push_back({name, "hom", to_string(m) + "," + to_string(n) + ": " + std::to_string(h) +
                                        " vs " + std::to_string(ho)});
      const auto e = ext1_dim(a, m, n);
      const auto eo = oracle::ext1_space_dim(a, m, n);
      if (e < 0 || static_cast<std::size_t>(e) != eo)
        out.push_back({name, "ext1", to_string(m) + "," + to_string(n) + ": " + std::to_string(e) +
                                         " vs " + std::to_string(eo)});
    }
  }
  return out;
}

std::vector<std::string> auslander_oracle_mismatches(const AuslanderResult& res) {
  std::vector<std::string> out;
  const Algebra& g = res.gamma;
  const auto table = oracle::end_algebra(res.base, res.dictionary);
  const auto quiver = oracle::quiver_of(table);
  const auto n = static_cast<std::size_t>(g.size());
  if (quiver.vertices != n) out.push_back("vertex count differs");
  if (quiver.dimension != static_cast<std::size_t>(g.dimension()))
    out.push_back("dimension " + std::to_string(quiver.dimension) + " vs " + std::to_string(g.dimension()));
  if (!out.empty()) return out;

  // Γ-arrow v -> v-1 corresponds to an irreducible map M_{v-1} -> M_v.
  std::vector<std::vector<std::size_t>> expected(n, std::vector<std::size_t>(n, 0));
  for (Vertex v = 1; v <= g.size(); ++v)
    if (g.kupisch(v) >= 2) {
      const Vertex w = g.wrap(v - 1);
      ++expected[static_cast<std::size_t>(w - 1)][static_cast<std::size_t>(v - 1)];
    }
  if (expected != quiver.arrows) out.push_back("arrow counts differ");

  // Length-two paths v -> v-1 -> v-2 vanish in Γ exactly when c[v] <= 2.
  for (Vertex v = 1; v <= g.size(); ++v) {
    if (g.kupisch(v) < 2) continue;
    const Vertex mid = g.wrap(v - 1);
    if (g.kupisch(mid) < 2) continue;
    const Vertex end = g.wrap(v - 2);
    const auto i_end = static_cast<std::size_t>(end - 1), i_mid = static_cast<std::size_t>(mid - 1),
               i_v = static_cast<std::size_t>(v - 1);
    const auto first = oracle::irreducible_maps(table, i_end, i_mid);
    const auto second = oracle::irreducible_maps(table, i_mid, i_v);
    if (first.size() != 1 || second.size() != 1) {
      out.push_back("missing irreducible map around vertex " + std::to_string(v));
      continue;
    }
    const auto product = table.compose(i_end, i_mid, i_v, second.front(), first.front());
    const bool zero = std::all_of(product.begin(), product.end(),
                                  [](const oracle::Rational& x) { return oracle::is_zero(x); });
    if (zero != (g.kupisch(v) <= 2))
      out.push_back("relation pattern differs on the path starting at " + std::to_string(v));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Case {
  int n;
  Orientation kind;
  AuslanderResult res;
};

std::string case_name(int n, Orientation kind) {
  return std::string(to_string(kind)) + "/n=" + std::to_string(n);
}

class Report {
 public:
  void add(std::string name, bool pass, std::string detail = {}) {
    items_.push_back({std::move(name), pass, std::move(detail)});
  }
  std::vector<Assertion> take() { return std::move(items_); }

 private:
  std::vector<Assertion> items_;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size() && i < 5; ++i) out += (i ? "; " : "") + parts[i];
  if (parts.size() > 5) out += "; ...";
  return out;
}

void construction_checks(Report& r, const std::vector<Case>& cases) {
  for (const auto& c : cases) {
    const Algebra& g = c.res.gamma;
    const auto profile = gorenstein_profile(g);
    std::ostringstream os;
    os << to_string(g) << ", gldim " << to_string(profile.gldim);
    r.add("gamma-is-auslander/" + case_name(c.n, c.kind), profile.is_auslander, os.str());

    const auto q = quotient_algebra(g, c.res.projinj);
    const int expected_simples = c.kind == Orientation::cyclic ? c.n : c.n - 1;
    const bool dictionary_ok = [&] {
      for (Vertex v = 1; v <= g.size(); ++v)
        if (c.res.projinj.count(v) != static_cast<std::size_t>(is_injective(c.res.base, c.res.dictionary[static_cast<std::size_t>(v - 1)])))
          return false;
      return true;
    }();
    r.add("projinj-quotient-semisimple/" + case_name(c.n, c.kind),
          q.is_semisimple() && q.simple_count() == expected_simples && dictionary_ok,
          std::to_string(q.simple_count()) + " simples after killing " +
              std::to_string(c.res.projinj.size()) + " projective-injective vertices");
  }
}

void tilting_checks(Report& r, const std::vector<Case>& cases) {
  for (const auto& c : cases) {
    const Algebra& g = c.res.gamma;
    const auto tilts = enumerate_tilting(g);
    std::vector<std::string> shape, mutation;
    for (const auto& t : tilts) {
      for (const auto& bad : summand_shape_violations(g, t.modules))
        shape.push_back(to_string(bad) + " in " + to_string(t.modules));
      for (const auto& p : t.modules) {
        if (!g.is_projective(p) || is_injective(g, p)) continue;
        const auto seq = proj_mutation_sequence(g, t, p);
        if (!seq.cokernel_simple() || !seq.consistent())
          mutation.push_back("mutation of " + to_string(t.modules) + " at " + to_string(p));
      }
    }
    r.add("summand-shape/" + case_name(c.n, c.kind), shape.empty(), join(shape));
    r.add("projective-mutation/" + case_name(c.n, c.kind), mutation.empty(), join(mutation));

    std::string detail;
    bool ok = true;
    try {
      detail = to_string(minimal_tilting(g).modules);
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    r.add("minimal-tilting/" + case_name(c.n, c.kind), ok, detail);
  }
}

void sttilt_checks(Report& r) {
  for (int n = 1; n <= 10; ++n) {
    const auto pairs = enumerate_sttilt(semisimple_algebra(n));
    const bool has_zero = std::any_of(pairs.begin(), pairs.end(),
                                      [](const SupportPair& p) { return p.modules.empty(); });
    r.add("semisimple-sttilt-count/n=" + std::to_string(n),
          pairs.size() == (std::size_t{1} << n) && has_zero,
          std::to_string(pairs.size()) + " pairs");
  }
}

void bijection_checks(Report& r, const std::vector<Case>& cases) {
  for (const auto& c : cases) {
    const auto rep = verify_bijection(c.res);
    r.add("tilting-sttilt-bijection/" + case_name(c.n, c.kind), rep.ok(),
          std::to_string(rep.tilting_count) + " <-> " + std::to_string(rep.sttilt_count) +
              (rep.mismatches.empty() ? "" : "; " + join(rep.mismatches)));
  }
}

void count_checks(Report& r, int max_n) {
  for (Orientation kind : {Orientation::linear, Orientation::cyclic})
    for (int n = 1; n <= max_n; ++n) {
      const auto rep = verify_counts(n, kind);
      r.add("tilting-count/" + case_name(n, kind), rep.ok(),
            std::to_string(rep.count) + " (expected " + std::to_string(rep.expected) + ")" +
                (rep.failures.empty() ? "" : "; " + join(rep.failures)));
    }
}

void base_case_check(Report& r) {
  const auto res = auslander_algebra(make_rsz_nakayama(1, Orientation::cyclic));
  const auto count = enumerate_tilting(res.gamma).size();
  r.add("dual-numbers-base-case", res.gamma == validate_kupisch(Orientation::cyclic, {3, 2}) && count == 2,
        to_string(res.gamma) + " has " + std::to_string(count) + " tilting modules");
}

void oracle_checks(Report& r, int max_n) {
  for (Orientation kind : {Orientation::linear, Orientation::cyclic})
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
      const auto res = auslander_algebra(make_rsz_nakayama(n, kind));
      const auto bad = auslander_oracle_mismatches(res);
      r.add("gamma-vs-end-algebra/" + case_name(n, kind), bad.empty(), join(bad));
    }
  std::size_t algebras = 0;
  std::vector<std::string> bad;
  for (const auto& a : kupisch_universe(6, 4)) {
    ++algebras;
    for (const auto& m : compare_with_oracle(a)) bad.push_back(m.algebra + " " + m.quantity + " " + m.detail);
  }
  r.add("closed-forms-vs-oracle", bad.empty(),
        std::to_string(algebras) + " algebras" + (bad.empty() ? "" : "; " + join(bad)));
}

}  // namespace

std::vector<Assertion> verify_paper(const VerifyOptions& options) {
  if (options.max_n < 1 || options.max_n > kMaxVerifyN)
    throw Error(ErrorCode::out_of_range, "max-n must lie in 1.." + std::to_string(kMaxVerifyN));
  std::vector<Case> cases;
  for (Orientation kind : {Orientation::linear, Orientation::cyclic})
    for (int n = 1; n <= options.max_n; ++n)
      cases.push_back({n, kind, auslander_algebra(make_rsz_nakayama(n, kind))});

  Report r;
  construction_checks(r, cases);
  tilting_checks(r, cases);
  sttilt_checks(r);
  bijection_checks(r, cases);
  count_checks(r, options.max_n);
  base_case_check(r);
  if (options.with_oracle) oracle_checks(r, options.max_n);
  return r.take();
}

nlohmann::json to_json(const std::vector<Assertion>& report) {
  auto out = nlohmann::json::array();
  for (const auto& a : report) out.push_back({{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
  return out;
}

}  // namespace nakayama
