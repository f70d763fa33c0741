#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/auslander.hpp"

namespace nakayama::testing {

inline Algebra gamma_of(int n, Orientation kind) {
  return auslander_algebra(make_rsz_nakayama(n, kind)).gamma;
}
inline Algebra gamma_lin3() { return gamma_of(3, Orientation::linear); }
inline Algebra gamma_cyc3() { return gamma_of(3, Orientation::cyclic); }
inline Algebra dual_numbers_gamma() { return validate_kupisch(Orientation::cyclic, {3, 2}); }

/// Whitespace-separated module literals, e.g. "P(5) P(4) S(4)".
inline ModuleSet modules(const Algebra& a, const std::string& text) {
  std::istringstream in(text);
  std::vector<IndecModule> out;
  for (std::string word; in >> word;) out.push_back(parse_module(a, word));
  return ModuleSet(std::move(out));
}

inline IndecModule M(Vertex top, int len) { return {top, len}; }

}  // namespace nakayama::testing
