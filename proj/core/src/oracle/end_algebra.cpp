#include "nakayama/oracle/end_algebra.hpp"

#include <set>

namespace nakayama::oracle {

namespace {

std::vector<Rational> flatten(const Morphism& f) {
  std::vector<Rational> out;
  for (const auto& m : f.components)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

Matrix as_columns(const std::vector<std::vector<Rational>>& vs, std::size_t length) {
  Matrix m(length, vs.size());
  for (std::size_t c = 0; c < vs.size(); ++c)
    for (std::size_t r = 0; r < length; ++r) m(r, c) = vs[c][r];
  return m;
}

std::vector<std::vector<Rational>> columns(const Matrix& m) {
  std::vector<std::vector<Rational>> out(m.cols(), std::vector<Rational>(m.rows()));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) out[c][r] = m(r, c);
  return out;
}

// Span of the composites rad(z, v) ∘ rad(u, z) over all objects z.
Matrix radical_square(const EndTable& t, std::size_t u, std::size_t v) {
  const std::size_t dim = t.hom_dim(u, v);
  std::vector<std::vector<Rational>> products;
  for (std::size_t z = 0; z < t.objects.size(); ++z) {
    const auto first = radical_basis(t, u, z);
    const auto second = radical_basis(t, z, v);
    for (const auto& g : second)
      for (const auto& f : first) products.push_back(t.compose(u, z, v, g, f));
  }
  return column_basis(as_columns(products, dim));
}

}  // namespace

std::size_t EndTable::hom_dim(std::size_t source, std::size_t target) const {
  const auto it = hom_index.find({source, target});
  return it == hom_index.end() ? 0 : it->second.size();
}

std::vector<Rational> EndTable::compose(std::size_t x, std::size_t y, std::size_t z,
                                        const std::vector<Rational>& g,
                                        const std::vector<Rational>& f) const {
  std::vector<Rational> out(hom_dim(x, z));
  if (out.empty()) return out;
  const auto& fs = hom_index.at({x, y});
  const auto& gs = hom_index.at({y, z});
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (is_zero(g[i])) continue;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (is_zero(f[j])) continue;
      const auto& c = mult.at({gs[i], fs[j]});
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += g[i] * f[j] * c[k];
    }
  }
  return out;
}

bool EndTable::associative() const {
  for (std::size_t f = 0; f < basis.size(); ++f)
    for (std::size_t g = 0; g < basis.size(); ++g) {
      if (basis[g].source != basis[f].target) continue;
      for (std::size_t h = 0; h < basis.size(); ++h) {
        if (basis[h].source != basis[g].target) continue;
        const std::size_t x = basis[f].source, y = basis[f].target, z = basis[g].target,
                          w = basis[h].target;
        const auto unit = [&](std::size_t global, std::size_t s, std::size_t t) {
          std::vector<Rational> e(hom_dim(s, t));
          e[basis[global].label] = 1;
          return e;
        };
        const auto hg = compose(y, z, w, unit(h, z, w), unit(g, y, z));
        const auto gf = compose(x, y, z, unit(g, y, z), unit(f, x, y));
        if (compose(x, y, w, hg, unit(f, x, y)) != compose(x, z, w, unit(h, z, w), gf)) return false;
      }
    }
  return true;
}

EndTable end_algebra(const Algebra& a, const ModuleSet& modules) {
  return end_algebra(a, std::vector<IndecModule>(modules.begin(), modules.end()));
}

EndTable end_algebra(const Algebra& a, const std::vector<IndecModule>& objects) {
  if (std::set<IndecModule>(objects.begin(), objects.end()).size() != objects.size())
    throw Error(ErrorCode::duplicate_module, "end_algebra needs pairwise non-isomorphic modules");
  const Quiver q = quiver_of(a);
  EndTable t;
  t.quiver = q;
  t.objects = objects;
  for (const auto& m : objects) t.reps.push_back(to_representation(a, m));

  for (std::size_t s = 0; s < objects.size(); ++s)
    for (std::size_t r = 0; r < objects.size(); ++r) {
      auto maps = hom_space(q, t.reps[s], t.reps[r]);
      for (std::size_t l = 0; l < maps.size(); ++l) {
        t.hom_index[{s, r}].push_back(t.basis.size());
        t.basis.push_back({s, r, l});
        t.maps.push_back(std::move(maps[l]));
      }
    }

  for (std::size_t f = 0; f < t.basis.size(); ++f)
    for (std::size_t g = 0; g < t.basis.size(); ++g) {
      if (t.basis[g].source != t.basis[f].target) continue;
      const std::size_t x = t.basis[f].source, z = t.basis[g].target;
      const auto product = flatten(compose(t.maps[g], t.maps[f]));
      const auto it = t.hom_index.find({x, z});
      if (it == t.hom_index.end()) {
        t.mult[{g, f}] = {};
        continue;
      }
      std::vector<std::vector<Rational>> basis_vectors;
      for (auto b : it->second) basis_vectors.push_back(flatten(t.maps[b]));
      Matrix rhs(product.size(), 1);
      for (std::size_t i = 0; i < product.size(); ++i) rhs(i, 0) = product[i];
      const auto coeffs = solve(as_columns(basis_vectors, product.size()), rhs);
      if (!coeffs) throw Error(ErrorCode::internal_inconsistency, "composite outside the Hom space");
      t.mult[{g, f}] = columns(*coeffs).front();
    }
  return t;
}

std::vector<std::vector<Rational>> radical_basis(const EndTable& t, std::size_t u, std::size_t v) {
  const std::size_t dim = t.hom_dim(u, v);
  std::vector<std::vector<Rational>> out;
  if (dim == 0) return out;
  if (u != v) {
    for (std::size_t i = 0; i < dim; ++i) {
      out.emplace_back(dim);
      out.back()[i] = 1;
    }
    return out;
  }
  // Non-invertible endomorphisms: those acting as zero on the simple top.
  const Representation& rep = t.reps[u];
  const Vertex top = t.objects[u].top;
  Matrix rad(rep.dim(top), 0);
  for (std::size_t k = 0; k < t.quiver.arrows.size(); ++k)
    if (t.quiver.arrows[k].target == top) rad = rad.hconcat(rep.maps[k]);
  const Matrix rad_basis = column_basis(rad);
  const Matrix top_vector = top_vectors(t.quiver, rep, top);
  const Matrix frame = rad_basis.hconcat(top_vector);
  const auto& ends = t.hom_index.at({u, u});
  Matrix functional(1, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto coords = solve(frame, t.maps[ends[i]].at(top) * top_vector);
    functional(0, i) = (*coords)(frame.cols() - 1, 0);
  }
  return columns(nullspace(functional));
}

std::vector<std::vector<Rational>> irreducible_maps(const EndTable& t, std::size_t u, std::size_t v) {
  const std::size_t dim = t.hom_dim(u, v);
  std::vector<std::vector<Rational>> out;
  if (dim == 0) return out;
  const Matrix rad2 = radical_square(t, u, v);
  Matrix span = rad2;
  for (const auto& r : radical_basis(t, u, v)) {
    Matrix col(dim, 1);
    for (std::size_t i = 0; i < dim; ++i) col(i, 0) = r[i];
    const Matrix extended = span.hconcat(col);
    if (rank(extended) > rank(span)) {
      out.push_back(r);
      span = extended;
    }
  }
  return out;
}

QuiverData quiver_of(const EndTable& t) {
  QuiverData d;
  d.vertices = t.objects.size();
  d.dimension = t.dimension();
  d.arrows.assign(d.vertices, std::vector<std::size_t>(d.vertices, 0));
  for (std::size_t u = 0; u < d.vertices; ++u)
    for (std::size_t v = 0; v < d.vertices; ++v) {
      if (t.hom_dim(u, v) == 0) continue;
      d.arrows[u][v] = radical_basis(t, u, v).size() - rank(radical_square(t, u, v));
    }
  return d;
}

}  // namespace nakayama::oracle
