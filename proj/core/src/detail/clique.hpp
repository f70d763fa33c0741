#pragma once

#include <cstddef>
#include <vector>

namespace nakayama::detail {

/// Symmetric compatibility relation on vertices 0..n-1.
class CompatibilityGraph {
 public:
  explicit CompatibilityGraph(std::size_t n) : n_(n), adj_(n * n, false) {}

  std::size_t size() const noexcept { return n_; }
  void connect(std::size_t i, std::size_t j) {
    adj_[i * n_ + j] = true;
    adj_[j * n_ + i] = true;
  }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<bool> adj_;
};

/// Calls visit(clique) for every k-element clique, cliques listed as
/// increasing index vectors in lexicographic order. Branches are cut as soon
/// as the clique plus its remaining common neighbours cannot reach k.
template <class Visit>
void for_each_k_clique(const CompatibilityGraph& g, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> clique;
  clique.reserve(k);

  auto extend = [&](auto&& self, const std::vector<std::size_t>& candidates) -> void {
    if (clique.size() == k) {
      visit(static_cast<const std::vector<std::size_t>&>(clique));
      return;
    }
    for (std::size_t pos = 0; pos < candidates.size(); ++pos) {
      if (clique.size() + (candidates.size() - pos) < k) return;
      const std::size_t v = candidates[pos];
      std::vector<std::size_t> next;
      for (std::size_t q = pos + 1; q < candidates.size(); ++q)
        if (g.adjacent(v, candidates[q])) next.push_back(candidates[q]);
      if (clique.size() + 1 + next.size() < k) continue;
      clique.push_back(v);
      self(self, next);
      clique.pop_back();
    }
  };

  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  extend(extend, all);
}

}  // namespace nakayama::detail
