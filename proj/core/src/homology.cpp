#include "nakayama/homology.hpp"

#include <algorithm>
#include <set>

namespace nakayama {

std::string to_string(const ExtendedNat& x) {
  return x.is_infinite() ? "inf" : std::to_string(x.value());
}

int hom_dim(const Algebra& a, const IndecModule& m, const IndecModule& n) {
  a.require_valid(m);
  a.require_valid(n);
  int count = 0;
  for (int k = 1; k <= std::min(m.len, n.len); ++k)
    if (m.top == a.wrap(n.top - n.len + k)) ++count;
  return count;
}

MaybeModule syzygy(const Algebra& a, const IndecModule& m) {
  if (a.is_projective(m)) return std::nullopt;
  return IndecModule{a.wrap(m.top - m.len), a.kupisch(m.top) - m.len};
}

MaybeModule cosyzygy(const Algebra& a, const IndecModule& m) {
  a.require_valid(m);
  const IndecModule env = injective_env_vertex(a, a.socle(m));
  if (env == m) return std::nullopt;
  // m is the length-m.len submodule of env; the cokernel keeps the top layers.
  return quotient_top(a, env, env.len - m.len);
}

namespace {

template <class Step>
ExtendedNat chain_length(const Algebra& a, const IndecModule& m, Step step) {
  a.require_valid(m);
  std::set<IndecModule> seen;
  MaybeModule cur = m;
  unsigned steps = 0;
  while (cur) {
    if (!seen.insert(*cur).second) return ExtendedNat::infinity();
    cur = step(a, *cur);
    if (cur) ++steps;
  }
  return steps;
}

}  // namespace

ExtendedNat proj_dim(const Algebra& a, const IndecModule& m) { return chain_length(a, m, syzygy); }

ExtendedNat inj_dim(const Algebra& a, const IndecModule& m) { return chain_length(a, m, cosyzygy); }

MaybeModule tau(const Algebra& a, const IndecModule& m) {
  if (a.is_projective(m)) return std::nullopt;
  return IndecModule{a.wrap(m.top - 1), m.len};
}

MaybeModule tau_inv(const Algebra& a, const IndecModule& m) {
  if (is_injective(a, m)) return std::nullopt;
  return IndecModule{a.wrap(m.top + 1), m.len};
}

int ext1_dim(const Algebra& a, const IndecModule& m, const IndecModule& n) {
  const auto omega = syzygy(a, m);
  if (!omega) return 0;
  return hom_dim(a, *omega, n) - hom_dim(a, a.projective(m.top), n) + hom_dim(a, m, n);
}

int ext_dim(const Algebra& a, int degree, const IndecModule& m, const IndecModule& n) {
  if (degree < 1)
    throw Error(ErrorCode::out_of_range, "Ext degree must be >= 1, got " + std::to_string(degree));
  MaybeModule cur = m;
  for (int i = 1; i < degree && cur; ++i) cur = syzygy(a, *cur);
  return cur ? ext1_dim(a, *cur, n) : 0;
}

int ext1_dim(const Algebra& a, const ModuleSet& m, const ModuleSet& n) {
  int total = 0;
  for (const auto& x : m)
    for (const auto& y : n) total += ext1_dim(a, x, y);
  return total;
}

ModuleSet cosyzygy_of_regular(const Algebra& a) {
  std::vector<IndecModule> out;
  for (Vertex v = 1; v <= a.size(); ++v)
    if (auto c = cosyzygy(a, a.projective(v))) out.push_back(*c);
  return ModuleSet(std::move(out));
}

GorensteinProfile gorenstein_profile(const Algebra& a) {
  GorensteinProfile p;
  p.gldim = 0u;
  for (Vertex v = 1; v <= a.size(); ++v) p.gldim = std::max(p.gldim, proj_dim(a, a.simple(v)));

  std::vector<IndecModule> i0, i1;
  for (Vertex v = 1; v <= a.size(); ++v) {
    const auto proj = a.projective(v);
    i0.push_back(injective_env_vertex(a, a.socle(proj)));
    if (auto c = cosyzygy(a, proj)) i1.push_back(injective_env_vertex(a, a.socle(*c)));
  }
  p.i0 = ModuleSet(std::move(i0));
  p.i1 = ModuleSet(std::move(i1));
  const auto all_projective = [&](const ModuleSet& ms) {
    return std::all_of(ms.begin(), ms.end(), [&](const IndecModule& m) { return a.is_projective(m); });
  };
  p.i0_projective = all_projective(p.i0);
  p.i1_projective = all_projective(p.i1);
  p.is_1_gorenstein = p.i0_projective;
  p.is_auslander = p.gldim <= ExtendedNat(2) && p.i0_projective && p.i1_projective;
  return p;
}

}  // namespace nakayama
