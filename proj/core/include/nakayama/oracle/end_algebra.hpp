#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/oracle/representation.hpp"

namespace nakayama::oracle {

/// Endomorphism algebra of a direct sum of pairwise non-isomorphic
/// indecomposables, with composition structure constants.
struct EndTable {
  struct BasisElement {
    std::size_t source;
    std::size_t target;
    std::size_t label;  ///< position inside Hom(objects[source], objects[target])
  };

  Quiver quiver;
  std::vector<IndecModule> objects;
  std::vector<Representation> reps;
  std::vector<BasisElement> basis;
  std::vector<Morphism> maps;  ///< aligned with basis
  /// (source, target) -> global indices of the Hom basis.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> hom_index;
  /// (g, f) -> coefficients of g∘f over hom_index[(source f, target g)].
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> mult;

  std::size_t dimension() const noexcept { return basis.size(); }
  std::size_t hom_dim(std::size_t source, std::size_t target) const;
  /// Composes two coefficient vectors (over Hom(x,y) and Hom(y,z)).
  std::vector<Rational> compose(std::size_t x, std::size_t y, std::size_t z,
                                const std::vector<Rational>& g,
                                const std::vector<Rational>& f) const;
  bool associative() const;
};

EndTable end_algebra(const Algebra& a, const ModuleSet& modules);
/// Same, keeping the caller's object order.
EndTable end_algebra(const Algebra& a, const std::vector<IndecModule>& objects);

struct QuiverData {
  std::size_t vertices = 0;
  /// arrows[u][v]: number of irreducible maps objects[u] -> objects[v],
  /// dim rad(u,v) / rad^2(u,v).
  std::vector<std::vector<std::size_t>> arrows;
  std::size_t dimension = 0;
};

/// Basis (coefficient vectors) of rad(u, v).
std::vector<std::vector<Rational>> radical_basis(const EndTable& t, std::size_t u, std::size_t v);
/// Vectors of rad(u, v) spanning a complement of rad^2(u, v).
std::vector<std::vector<Rational>> irreducible_maps(const EndTable& t, std::size_t u, std::size_t v);

QuiverData quiver_of(const EndTable& t);

}  // namespace nakayama::oracle
