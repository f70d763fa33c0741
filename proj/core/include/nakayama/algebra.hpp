#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nakayama/error.hpp"

namespace nakayama {

enum class Orientation { linear, cyclic };

std::string_view to_string(Orientation kind);
Orientation parse_orientation(std::string_view text);

using Vertex = int;
using VertexSet = std::set<Vertex>;

/// Uniserial module with top S(top) and composition length len. The
/// composition layers, read from top to socle, are S(top), S(top-1), ...
struct IndecModule {
  Vertex top = 1;
  int len = 1;

  friend auto operator<=>(const IndecModule&, const IndecModule&) = default;
};

/// The zero module is represented by std::nullopt.
using MaybeModule = std::optional<IndecModule>;

std::string to_string(const IndecModule& m);
std::string to_string(const MaybeModule& m);

/// Basic module: a duplicate-free list of indecomposables kept in canonical
/// order (top ascending, then length ascending).
class ModuleSet {
 public:
  using const_iterator = std::vector<IndecModule>::const_iterator;

  ModuleSet() = default;
  ModuleSet(std::initializer_list<IndecModule> items);
  explicit ModuleSet(std::vector<IndecModule> items);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  const IndecModule& operator[](std::size_t i) const { return items_[i]; }
  std::span<const IndecModule> items() const noexcept { return items_; }

  bool contains(const IndecModule& m) const;
  ModuleSet with(const IndecModule& m) const;
  ModuleSet without(const IndecModule& m) const;

  /// Number of common summands.
  std::size_t overlap(const ModuleSet& other) const;

  friend bool operator==(const ModuleSet&, const ModuleSet&) = default;
  friend auto operator<=>(const ModuleSet& a, const ModuleSet& b) {
    return a.items_ <=> b.items_;
  }

 private:
  std::vector<IndecModule> items_;
};

std::string to_string(const ModuleSet& ms);

/// Connected Nakayama algebra given by its orientation and Kupisch series.
///
/// Vertices are 1..N. The quiver has arrows k -> k-1 for 2 <= k <= N, plus
/// 1 -> N when cyclic. kupisch(i) is the length of the indecomposable
/// projective P(i). Values are only produced by validate_kupisch and
/// make_rsz_nakayama, so every Algebra satisfies the Kupisch conditions.
class Algebra {
 public:
  Orientation kind() const noexcept { return kind_; }
  bool is_cyclic() const noexcept { return kind_ == Orientation::cyclic; }
  int size() const noexcept { return static_cast<int>(kupisch_.size()); }
  std::span<const int> kupisch() const noexcept { return kupisch_; }
  int kupisch(Vertex v) const;

  bool is_vertex(Vertex v) const noexcept { return v >= 1 && v <= size(); }
  /// Reduces v into 1..N for cyclic algebras; identity for linear ones.
  Vertex wrap(Vertex v) const noexcept;

  bool is_valid(const IndecModule& m) const noexcept;
  void require_valid(const IndecModule& m) const;
  void require_valid(const ModuleSet& ms) const;

  IndecModule projective(Vertex v) const;
  IndecModule simple(Vertex v) const;
  bool is_projective(const IndecModule& m) const;

  Vertex socle(const IndecModule& m) const;
  /// Composition factors from top to socle.
  std::vector<Vertex> layers(const IndecModule& m) const;

  /// Sum of the Kupisch series: the number of indecomposables and the
  /// dimension of the algebra.
  int dimension() const noexcept;
  int loewy_length() const noexcept;
  bool radical_square_zero() const noexcept;
  bool self_injective() const noexcept;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  friend Algebra validate_kupisch(Orientation, std::vector<int>);
  Algebra(Orientation kind, std::vector<int> kupisch)
      : kind_(kind), kupisch_(std::move(kupisch)) {}

  Orientation kind_;
  std::vector<int> kupisch_;
};

std::string to_string(const Algebra& a);

/// The single entry point for constructing Nakayama algebras. Throws
/// Error(invalid_kupisch) naming the failing index.
Algebra validate_kupisch(Orientation kind, std::vector<int> kupisch);

/// Radical-square-zero Nakayama algebra with n simples: (1,2,...,2) when
/// linear, (2,...,2) when cyclic.
Algebra make_rsz_nakayama(int n, Orientation kind);

/// All M(i,l) with 1 <= l <= c[i], in canonical order.
ModuleSet indecomposables(const Algebra& a);

/// Unique submodule of m of length k; nullopt for k = 0.
MaybeModule submodule(const Algebra& a, const IndecModule& m, int k);
/// Unique quotient of m of length k; nullopt for k = 0.
MaybeModule quotient_top(const Algebra& a, const IndecModule& m, int k);

/// Indecomposable injective I(j), the largest module with socle S(j).
IndecModule injective_env_vertex(const Algebra& a, Vertex j);
bool is_injective(const Algebra& a, const IndecModule& m);

/// A / (e) for e the sum of the idempotents at `killed`: a product of
/// connected Nakayama algebras. component_vertices[c][k-1] is the parent
/// vertex of vertex k of component c.
struct QuotientAlgebra {
  Orientation parent_kind = Orientation::linear;
  int parent_size = 0;
  std::vector<Algebra> components;
  std::vector<std::vector<Vertex>> component_vertices;
  VertexSet killed;

  VertexSet surviving() const;
  int simple_count() const noexcept { return parent_size - static_cast<int>(killed.size()); }
  bool is_semisimple() const;

  IndecModule to_parent(std::size_t component, const IndecModule& m) const;
  /// Component and local module for a parent module all of whose
  /// composition factors survive; nullopt otherwise.
  std::optional<std::pair<std::size_t, IndecModule>> from_parent(
      const IndecModule& m) const;
};

QuotientAlgebra quotient_algebra(const Algebra& a, const VertexSet& killed);
/// Further quotient of an existing quotient; killed sets accumulate.
QuotientAlgebra quotient_algebra(const QuotientAlgebra& q, const VertexSet& more_killed);

/// Product of n copies of the field, presented as a quotient with nothing
/// killed and parent vertices 1..n.
QuotientAlgebra semisimple_algebra(int n);

/// Parses "M(top,len)", "P(i)" or "S(i)".
IndecModule parse_module(const Algebra& a, std::string_view text);

}  // namespace nakayama
