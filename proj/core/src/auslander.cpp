#include "nakayama/auslander.hpp"

#include <algorithm>
#include <map>

#include "nakayama/homology.hpp"

namespace nakayama {

VertexSet projective_injective_vertices(const Algebra& a) {
  VertexSet out;
  for (Vertex v = 1; v <= a.size(); ++v)
    if (is_injective(a, a.projective(v))) out.insert(v);
  return out;
}

AuslanderResult auslander_algebra(const Algebra& lambda) {
  if (!lambda.radical_square_zero())
    throw Error(ErrorCode::unsupported_input,
                to_string(lambda) + " is not radical square zero");
  const int n = lambda.size();
  std::vector<int> c;
  std::vector<IndecModule> dict;

  if (!lambda.is_cyclic()) {
    // Γ on 2n-1 vertices; vertex 2k-1 is S(k), vertex 2k is P(k+1).
    for (int j = 1; j <= 2 * n - 1; ++j) {
      if (j == 1)
        c.push_back(1);
      else if (j == 2)
        c.push_back(2);
      else
        c.push_back(j % 2 == 1 ? 2 : 3);
      if (j % 2 == 1)
        dict.push_back(lambda.simple((j + 1) / 2));
      else
        dict.push_back(lambda.projective(j / 2 + 1));
    }
  } else {
    // Γ on 2n vertices; vertex 2k-1 is P(k), vertex 2k is S(k).
    for (int j = 1; j <= 2 * n; ++j) {
      c.push_back(j % 2 == 1 ? 3 : 2);
      dict.push_back(j % 2 == 1 ? lambda.projective((j + 1) / 2) : lambda.simple(j / 2));
    }
  }
  Algebra gamma = validate_kupisch(lambda.kind(), std::move(c));
  VertexSet projinj = projective_injective_vertices(gamma);
  return {lambda, std::move(gamma), std::move(dict), std::move(projinj)};
}

SupportPair to_support_pair(const AuslanderResult& res, const TiltingRecord& t) {
  const Algebra& g = res.gamma;
  const auto cert = check_tilting(g, t.modules);
  if (!cert.tilting())
    throw Error(ErrorCode::not_tilting, to_string(t.modules) + " is not tilting: " + cert.describe());

  std::vector<IndecModule> image;
  for (const auto& m : t.modules) {
    int k = 0;
    for (Vertex v : g.layers(m)) {
      if (res.projinj.count(v)) break;
      ++k;
    }
    if (k > 0) image.push_back({m.top, k});
  }
  SupportPair pair{ModuleSet(std::move(image)), res.projinj};
  VertexSet used;
  for (const auto& m : pair.modules)
    for (Vertex v : g.layers(m)) used.insert(v);
  for (Vertex v = 1; v <= g.size(); ++v)
    if (!res.projinj.count(v) && !used.count(v)) pair.killed.insert(v);
  return pair;
}

BijectionReport verify_bijection(const AuslanderResult& res) {
  const auto profile = gorenstein_profile(res.gamma);
  if (!profile.is_auslander || !profile.is_1_gorenstein)
    throw Error(ErrorCode::not_applicable, to_string(res.gamma) + " is not an Auslander algebra");

  BijectionReport report;
  const auto tilts = enumerate_tilting(res.gamma);
  const auto pairs = enumerate_sttilt(quotient_algebra(res.gamma, res.projinj));
  report.tilting_count = tilts.size();
  report.sttilt_count = pairs.size();

  std::map<SupportPair, ModuleSet> preimage;
  report.injective = true;
  for (const auto& t : tilts) {
    auto image = to_support_pair(res, t);
    report.matching.emplace_back(t.modules, image);
    if (!std::binary_search(pairs.begin(), pairs.end(), image))
      report.mismatches.push_back(to_string(t.modules) + " maps outside the support tau-tilting set");
    auto [it, fresh] = preimage.emplace(image, t.modules);
    if (!fresh) {
      report.injective = false;
      report.mismatches.push_back(to_string(t.modules) + " and " + to_string(it->second) +
                                  " have the same image");
    }
  }
  report.surjective = true;
  for (const auto& p : pairs)
    if (!preimage.count(p)) {
      report.surjective = false;
      report.mismatches.push_back("pair (" + to_string(p.modules) + ") has no preimage");
    }
  return report;
}

CountReport verify_counts(int n, Orientation kind) {
  if (n < 1 || n > kMaxVerifyN)
    throw Error(ErrorCode::out_of_range,
                "n must lie in 1.." + std::to_string(kMaxVerifyN) + ", got " + std::to_string(n));
  CountReport report;
  report.n = n;
  report.kind = kind;
  report.expected = kind == Orientation::cyclic ? (std::size_t{1} << n) : (std::size_t{1} << (n - 1));

  const auto res = auslander_algebra(make_rsz_nakayama(n, kind));
  const auto tilts = enumerate_tilting(res.gamma);
  report.count = tilts.size();
  if (report.count != report.expected)
    report.failures.push_back("found " + std::to_string(report.count) + " tilting modules, expected " +
                              std::to_string(report.expected));

  report.shapes_ok = true;
  for (const auto& t : tilts) {
    const auto bad = summand_shape_violations(res.gamma, t.modules);
    if (!bad.empty()) {
      report.shapes_ok = false;
      report.failures.push_back("summand " + to_string(bad.front()) + " of " + to_string(t.modules) +
                                " is neither projective nor a projective-injective socle");
    }
  }
  try {
    minimal_tilting(res.gamma);
    report.minimal_ok = true;
  } catch (const Error& e) {
    report.failures.push_back(e.what());
  }
  return report;
}

}  // namespace nakayama
