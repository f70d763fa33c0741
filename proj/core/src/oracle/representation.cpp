#include "nakayama/oracle/representation.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace nakayama::oracle {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v - 1); }

// (vertex, index inside that vertex space) of each layer of M(top,len).
std::vector<std::pair<Vertex, std::size_t>> chain_positions(const Algebra& a,
                                                            const IndecModule& m,
                                                            std::vector<std::size_t>& dims) {
  dims.assign(static_cast<std::size_t>(a.size()), 0);
  std::vector<std::pair<Vertex, std::size_t>> pos;
  for (Vertex v : a.layers(m)) pos.emplace_back(v, dims[idx(v)]++);
  return pos;
}

std::optional<std::size_t> outgoing_arrow(const Algebra& a, Vertex v) {
  if (v >= 2) return static_cast<std::size_t>(v - 2);
  if (a.is_cyclic()) return static_cast<std::size_t>(a.size() - 1);
  return std::nullopt;
}

std::vector<Rational> flatten(const Morphism& f) {
  std::vector<Rational> out;
  for (const auto& m : f.components)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

Matrix stack_columns(const std::vector<std::vector<Rational>>& vectors, std::size_t length) {
  Matrix out(length, vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c)
    for (std::size_t r = 0; r < length; ++r) out(r, c) = vectors[c][r];
  return out;
}

Morphism zero_morphism(const Representation& v, const Representation& w) {
  Morphism f;
  for (std::size_t i = 0; i < v.dims.size(); ++i) f.components.emplace_back(w.dims[i], v.dims[i]);
  return f;
}

// Projective cover P(top m) -> m and its kernel.
struct Presentation {
  Representation module;
  Representation cover;
  Morphism projection;
  Embedded syzygy;
};

Presentation presentation(const Algebra& a, const IndecModule& m) {
  const Quiver q = quiver_of(a);
  Presentation p;
  p.module = to_representation(a, m);
  p.cover = to_representation(a, a.projective(m.top));
  const Matrix top = top_vectors(q, p.module, m.top);
  if (top.cols() != 1)
    throw Error(ErrorCode::internal_inconsistency, "module without a simple top");
  p.projection = from_projective(a, m.top, p.module, top);
  p.syzygy = kernel(q, p.cover, p.module, p.projection);
  return p;
}

}  // namespace

Quiver Quiver::opposite() const {
  Quiver op{vertex_count, arrows};
  for (auto& arr : op.arrows) std::swap(arr.source, arr.target);
  return op;
}

Quiver quiver_of(const Algebra& a) {
  Quiver q{a.size(), {}};
  for (Vertex k = 2; k <= a.size(); ++k) q.arrows.push_back({k, k - 1});
  if (a.is_cyclic()) q.arrows.push_back({1, a.size()});
  return q;
}

std::size_t Representation::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism out;
  for (std::size_t i = 0; i < f.components.size(); ++i)
    out.components.push_back(g.components[i] * f.components[i]);
  return out;
}

bool is_morphism(const Quiver& q, const Representation& v, const Representation& w,
                 const Morphism& f) {
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const auto [s, t] = q.arrows[k];
    if (!(w.maps[k] * f.at(s) == f.at(t) * v.maps[k])) return false;
  }
  return true;
}

Representation to_representation(const Algebra& a, const IndecModule& m) {
  a.require_valid(m);
  const Quiver q = quiver_of(a);
  Representation r;
  const auto pos = chain_positions(a, m, r.dims);
  for (const auto& arr : q.arrows) r.maps.emplace_back(r.dims[idx(arr.target)], r.dims[idx(arr.source)]);
  for (std::size_t t = 0; t + 1 < pos.size(); ++t) {
    const auto k = outgoing_arrow(a, pos[t].first);
    r.maps[*k](pos[t + 1].second, pos[t].second) = 1;
  }
  return r;
}

bool satisfies_relations(const Algebra& a, const Representation& r) {
  const Quiver q = quiver_of(a);
  for (Vertex i = 1; i <= a.size(); ++i) {
    Matrix path = Matrix::identity(r.dim(i));
    Vertex cur = i;
    bool exists = true;
    for (int step = 0; step < a.kupisch(i); ++step) {
      const auto k = outgoing_arrow(a, cur);
      if (!k) {
        exists = false;
        break;
      }
      path = r.maps[*k] * path;
      cur = q.arrows[*k].target;
    }
    if (exists && !path.is_zero()) return false;
  }
  return true;
}

std::vector<Morphism> hom_space(const Quiver& q, const Representation& v,
                                const Representation& w) {
  const std::size_t n = v.dims.size();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + w.dims[i] * v.dims[i];
  const std::size_t unknowns = offset[n];

  std::size_t equations = 0;
  for (const auto& arr : q.arrows) equations += w.dims[idx(arr.target)] * v.dims[idx(arr.source)];

  // W_a F_s - F_t V_a = 0 for every arrow a: s -> t.
  Matrix system(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const std::size_t s = idx(q.arrows[k].source), t = idx(q.arrows[k].target);
    const Matrix& wa = w.maps[k];
    const Matrix& va = v.maps[k];
    for (std::size_t p = 0; p < w.dims[t]; ++p)
      for (std::size_t c = 0; c < v.dims[s]; ++c, ++row) {
        for (std::size_t r = 0; r < w.dims[s]; ++r)
          system(row, offset[s] + r * v.dims[s] + c) += wa(p, r);
        for (std::size_t r = 0; r < v.dims[t]; ++r)
          system(row, offset[t] + p * v.dims[t] + r) -= va(r, c);
      }
  }

  const Matrix basis = nullspace(system);
  std::vector<Morphism> out;
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    Morphism f;
    for (std::size_t i = 0; i < n; ++i) {
      Matrix m(w.dims[i], v.dims[i]);
      for (std::size_t r = 0; r < w.dims[i]; ++r)
        for (std::size_t c = 0; c < v.dims[i]; ++c) m(r, c) = basis(offset[i] + r * v.dims[i] + c, b);
      f.components.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

Embedded kernel(const Quiver& q, const Representation& v, const Representation& w,
                const Morphism& f) {
  (void)w;
  Embedded k;
  for (const auto& comp : f.components) {
    k.map.components.push_back(nullspace(comp));
    k.rep.dims.push_back(k.map.components.back().cols());
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const std::size_t s = idx(q.arrows[a].source), t = idx(q.arrows[a].target);
    const auto x = solve(k.map.components[t], v.maps[a] * k.map.components[s]);
    if (!x) throw Error(ErrorCode::internal_inconsistency, "kernel is not a subrepresentation");
    k.rep.maps.push_back(*x);
  }
  return k;
}

Embedded cokernel(const Quiver& q, const Representation& v, const Representation& w,
                  const Morphism& f) {
  (void)v;
  Embedded c;
  std::vector<Matrix> lifts;  // complement vectors, a section of the projection
  for (std::size_t i = 0; i < w.dims.size(); ++i) {
    const Matrix image = column_basis(f.components[i]);
    const Matrix comp = complement_basis(image);
    const Matrix full = image.hconcat(comp);
    // Coordinates along the complement part of [image | comp].
    const auto inv = solve(full, Matrix::identity(w.dims[i]));
    Matrix proj(comp.cols(), w.dims[i]);
    for (std::size_t r = 0; r < comp.cols(); ++r)
      for (std::size_t col = 0; col < w.dims[i]; ++col) proj(r, col) = (*inv)(image.cols() + r, col);
    c.map.components.push_back(std::move(proj));
    c.rep.dims.push_back(comp.cols());
    lifts.push_back(comp);
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const std::size_t s = idx(q.arrows[a].source), t = idx(q.arrows[a].target);
    c.rep.maps.push_back(c.map.components[t] * w.maps[a] * lifts[s]);
  }
  return c;
}

Matrix top_vectors(const Quiver& q, const Representation& r, Vertex v) {
  Matrix rad(r.dim(v), 0);
  for (std::size_t k = 0; k < q.arrows.size(); ++k)
    if (q.arrows[k].target == v) rad = rad.hconcat(r.maps[k]);
  return complement_basis(column_basis(rad));
}

std::vector<std::size_t> top_dims(const Quiver& q, const Representation& r) {
  std::vector<std::size_t> out;
  for (Vertex v = 1; v <= q.vertex_count; ++v) out.push_back(top_vectors(q, r, v).cols());
  return out;
}

Morphism from_projective(const Algebra& a, Vertex v, const Representation& w,
                         const Matrix& element) {
  const IndecModule p = a.projective(v);
  std::vector<std::size_t> pdims;
  const auto pos = chain_positions(a, p, pdims);
  Morphism f;
  for (std::size_t i = 0; i < pdims.size(); ++i) f.components.emplace_back(w.dims[i], pdims[i]);
  Matrix image = element;
  for (std::size_t t = 0; t < pos.size(); ++t) {
    const auto [vertex, local] = pos[t];
    Matrix& comp = f.components[idx(vertex)];
    for (std::size_t r = 0; r < image.rows(); ++r) comp(r, local) = image(r, 0);
    if (t + 1 < pos.size()) image = w.maps[*outgoing_arrow(a, vertex)] * image;
  }
  return f;
}

MaybeModule identify(const Algebra& a, const Representation& r) {
  if (r.total_dim() == 0) return std::nullopt;
  const auto tops = top_dims(quiver_of(a), r);
  const auto total_top = std::accumulate(tops.begin(), tops.end(), std::size_t{0});
  if (total_top != 1)
    throw Error(ErrorCode::internal_inconsistency, "representation is not uniserial");
  const Vertex top = static_cast<Vertex>(std::find(tops.begin(), tops.end(), 1u) - tops.begin()) + 1;
  const IndecModule m{top, static_cast<int>(r.total_dim())};
  if (!a.is_valid(m) || to_representation(a, m).dims != r.dims)
    throw Error(ErrorCode::internal_inconsistency,
                "representation with top " + std::to_string(top) + " matches no indecomposable");
  return m;
}

std::size_t hom_space_dim(const Algebra& a, const IndecModule& m, const IndecModule& n) {
  return hom_space(quiver_of(a), to_representation(a, m), to_representation(a, n)).size();
}

std::size_t ext1_space_dim(const Algebra& a, const IndecModule& m, const IndecModule& n) {
  const Quiver q = quiver_of(a);
  const auto pres = presentation(a, m);
  if (pres.syzygy.rep.total_dim() == 0) return 0;
  const auto target = to_representation(a, n);
  const auto hom_k = hom_space(q, pres.syzygy.rep, target);
  if (hom_k.empty()) return 0;
  std::vector<std::vector<Rational>> restricted;
  for (const auto& phi : hom_space(q, pres.cover, target))
    restricted.push_back(flatten(compose(phi, pres.syzygy.map)));
  const std::size_t length = flatten(hom_k.front()).size();
  return hom_k.size() - rank(stack_columns(restricted, length));
}

MaybeModule syzygy_via_kernel(const Algebra& a, const IndecModule& m) {
  return identify(a, presentation(a, m).syzygy.rep);
}

MaybeModule tau_via_dtr(const Algebra& a, const IndecModule& m) {
  const Quiver q = quiver_of(a);
  const auto pres = presentation(a, m);
  const auto& syz = pres.syzygy;
  if (syz.rep.total_dim() == 0) return std::nullopt;

  // Minimal presentation P(s) -> P(b) -> m: the generator of P(s) goes to
  // a top vector of the syzygy, read in the path basis of P(b).
  const Vertex b = m.top;
  const auto tops = top_dims(q, syz.rep);
  if (std::accumulate(tops.begin(), tops.end(), std::size_t{0}) != 1)
    throw Error(ErrorCode::internal_inconsistency, "syzygy without a simple top");
  const Vertex s = static_cast<Vertex>(std::find(tops.begin(), tops.end(), 1u) - tops.begin()) + 1;
  const Matrix generator = syz.map.at(s) * top_vectors(q, syz.rep, s);

  // Coefficients of the generator image on the paths b -> s of length t.
  std::vector<std::pair<int, Rational>> path_coeffs;
  {
    std::size_t local = 0;
    for (int t = 0; t < a.kupisch(b); ++t)
      if (a.wrap(b - t) == s) {
        if (!is_zero(generator(local, 0))) path_coeffs.emplace_back(t, generator(local, 0));
        ++local;
      }
  }

  // Right projectives e_x A as representations of the opposite quiver:
  // basis = paths (j, len) ending at x, placed at their start vertex j.
  struct RightProjective {
    Representation rep;
    std::vector<std::pair<Vertex, int>> paths;
    std::vector<std::size_t> local;
  };
  const Quiver op = q.opposite();
  const auto right_projective = [&](Vertex x) {
    RightProjective rp;
    rp.rep.dims.assign(static_cast<std::size_t>(a.size()), 0);
    for (Vertex j = 1; j <= a.size(); ++j)
      for (int len = 0; len < a.kupisch(j); ++len)
        if (a.wrap(j - len) == x) {
          rp.paths.emplace_back(j, len);
          rp.local.push_back(rp.rep.dims[idx(j)]++);
        }
    for (const auto& arr : op.arrows)
      rp.rep.maps.emplace_back(rp.rep.dims[idx(arr.target)], rp.rep.dims[idx(arr.source)]);
    // Opposite arrow u-1 -> u prepends the arrow u -> u-1.
    for (std::size_t p = 0; p < rp.paths.size(); ++p) {
      const auto [j, len] = rp.paths[p];
      for (std::size_t k = 0; k < op.arrows.size(); ++k) {
        if (op.arrows[k].source != j) continue;
        const Vertex u = op.arrows[k].target;
        if (len + 1 >= a.kupisch(u)) continue;
        for (std::size_t p2 = 0; p2 < rp.paths.size(); ++p2)
          if (rp.paths[p2] == std::make_pair(u, len + 1))
            rp.rep.maps[k](rp.local[p2], rp.local[p]) = 1;
      }
    }
    return rp;
  };
  const auto rb = right_projective(b);
  const auto rs = right_projective(s);

  // Hom(f, A): e_b A -> e_s A, postcomposition with the presentation map.
  Morphism dual_map = zero_morphism(rb.rep, rs.rep);
  for (std::size_t p = 0; p < rb.paths.size(); ++p) {
    const auto [j, len] = rb.paths[p];
    for (const auto& [t, coeff] : path_coeffs) {
      if (len + t >= a.kupisch(j)) continue;
      for (std::size_t p2 = 0; p2 < rs.paths.size(); ++p2)
        if (rs.paths[p2] == std::make_pair(j, len + t))
          dual_map.components[idx(j)](rs.local[p2], rb.local[p]) += coeff;
    }
  }
  if (!is_morphism(op, rb.rep, rs.rep, dual_map))
    throw Error(ErrorCode::internal_inconsistency, "transpose map is not a morphism");

  const auto tr = cokernel(op, rb.rep, rs.rep, dual_map).rep;
  Representation dtr;
  dtr.dims = tr.dims;
  for (const auto& mat : tr.maps) dtr.maps.push_back(mat.transpose());
  if (!satisfies_relations(a, dtr))
    throw Error(ErrorCode::internal_inconsistency, "D Tr violates the relations");
  return identify(a, dtr);
}

bool generates_via_evaluation(const Algebra& a, const ModuleSet& t, const IndecModule& x) {
  const Quiver q = quiver_of(a);
  const auto target = to_representation(a, x);
  std::vector<Matrix> images;
  for (Vertex v = 1; v <= a.size(); ++v) images.emplace_back(target.dim(v), 0);
  for (const auto& summand : t)
    for (const auto& f : hom_space(q, to_representation(a, summand), target))
      for (Vertex v = 1; v <= a.size(); ++v) images[idx(v)] = images[idx(v)].hconcat(f.at(v));
  for (Vertex v = 1; v <= a.size(); ++v)
    if (rank(images[idx(v)]) != target.dim(v)) return false;
  return true;
}

bool is_injective_via_ext(const Algebra& a, const IndecModule& m) {
  for (Vertex v = 1; v <= a.size(); ++v)
    if (ext1_space_dim(a, a.simple(v), m) != 0) return false;
  return true;
}

}  // namespace nakayama::oracle
