#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/oracle/linalg.hpp"

// Brute-force backend: modules as quiver representations over Q, with every
// homological quantity computed by exact linear algebra. Nothing here calls
// the closed forms in homology.hpp.
namespace nakayama::oracle {

struct Arrow {
  Vertex source;
  Vertex target;
};

struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;

  Quiver opposite() const;
};

/// Arrows k -> k-1 (index k-2) for 2 <= k <= N, then 1 -> N when cyclic.
Quiver quiver_of(const Algebra& a);

/// maps[k] is a dims[target] x dims[source] matrix for arrow k.
struct Representation {
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;

  std::size_t dim(Vertex v) const { return dims[static_cast<std::size_t>(v - 1)]; }
  std::size_t total_dim() const;
};

/// components[v-1] is a dims_target(v) x dims_source(v) matrix.
struct Morphism {
  std::vector<Matrix> components;

  const Matrix& at(Vertex v) const { return components[static_cast<std::size_t>(v - 1)]; }
};

Morphism compose(const Morphism& g, const Morphism& f);
bool is_morphism(const Quiver& q, const Representation& v, const Representation& w,
                 const Morphism& f);

/// Chain realization of M(top,len): one basis vector per layer and identity
/// maps between consecutive layers.
Representation to_representation(const Algebra& a, const IndecModule& m);

/// Every path of length c[i] starting at i acts as zero.
bool satisfies_relations(const Algebra& a, const Representation& r);

/// Basis of the space of intertwiners v -> w.
std::vector<Morphism> hom_space(const Quiver& q, const Representation& v,
                                const Representation& w);

/// A representation together with its structure map: the inclusion for
/// kernels, the projection for cokernels.
struct Embedded {
  Representation rep;
  Morphism map;
};

Embedded kernel(const Quiver& q, const Representation& v, const Representation& w,
                const Morphism& f);
Embedded cokernel(const Quiver& q, const Representation& v, const Representation& w,
                  const Morphism& f);

/// dim of r / rad r at each vertex.
std::vector<std::size_t> top_dims(const Quiver& q, const Representation& r);

/// Basis vectors of r_v complementing the image of the arrows into v.
Matrix top_vectors(const Quiver& q, const Representation& r, Vertex v);

/// The morphism P(v) -> w sending the trivial path to `element` (a column
/// vector in w_v).
Morphism from_projective(const Algebra& a, Vertex v, const Representation& w,
                         const Matrix& element);

/// Matches r with an indecomposable by top position and dimension vector.
/// Throws internal_inconsistency when r is not uniserial.
MaybeModule identify(const Algebra& a, const Representation& r);

std::size_t hom_space_dim(const Algebra& a, const IndecModule& m, const IndecModule& n);
/// Ext^1 from the projective cover: dim Hom(Ωm, n) minus the rank of the
/// restriction Hom(P, n) -> Hom(Ωm, n).
std::size_t ext1_space_dim(const Algebra& a, const IndecModule& m, const IndecModule& n);
MaybeModule syzygy_via_kernel(const Algebra& a, const IndecModule& m);
/// D Tr m from the minimal projective presentation.
MaybeModule tau_via_dtr(const Algebra& a, const IndecModule& m);
/// The evaluation map from all Hom(t_i, x) is surjective.
bool generates_via_evaluation(const Algebra& a, const ModuleSet& t, const IndecModule& x);
/// Ext^1(S, m) = 0 for every simple S.
bool is_injective_via_ext(const Algebra& a, const IndecModule& m);

}  // namespace nakayama::oracle
