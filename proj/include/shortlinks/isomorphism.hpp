#ifndef SHORTLINKS_ISOMORPHISM_HPP
#define SHORTLINKS_ISOMORPHISM_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "shortlinks/common.hpp"
#include "shortlinks/simplicial_complex.hpp"

namespace shortlinks {

namespace detail {

/// A complex reindexed to vertices 0..V-1 with facets and skeleton rows as
/// bitmasks. Limited to 64 vertices.
class IndexedComplex {
 public:
  explicit IndexedComplex(const SimplicialComplex& k_complex) : ids_(k_complex.vertices()) {
    if (ids_.size() > 64) throw GuardExceeded("isomorphism search supports at most 64 vertices");
    const std::size_t n = ids_.size();
    adjacency_.assign(n, 0);
    facet_degree_.assign(n, 0);
    for (const auto& f : k_complex.facets()) {
      std::uint64_t mask = 0;
      for (auto v : f.vertices()) mask |= bit(index(v));
      facets_.push_back(mask);
      for (auto v : f.vertices()) {
        auto i = index(v);
        ++facet_degree_[i];
        adjacency_[i] |= mask & ~bit(i);
      }
    }
    std::sort(facets_.begin(), facets_.end());
  }

  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  std::size_t size() const { return ids_.size(); }
  const std::vector<VertexId>& ids() const { return ids_; }
  const std::vector<std::uint64_t>& facets() const { return facets_; }
  std::uint64_t adjacency(std::size_t i) const { return adjacency_[i]; }
  int degree(std::size_t i) const { return std::popcount(adjacency_[i]); }
  int facet_degree(std::size_t i) const { return facet_degree_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const { return (adjacency_[i] >> j) & 1U; }
  bool has_facet(std::uint64_t mask) const { return std::binary_search(facets_.begin(), facets_.end(), mask); }

  std::size_t index(VertexId v) const {
    return static_cast<std::size_t>(std::lower_bound(ids_.begin(), ids_.end(), v) - ids_.begin());
  }

  /// (skeleton degree, facet degree) per vertex, sorted.
  std::vector<std::pair<int, int>> degree_profile() const {
    std::vector<std::pair<int, int>> p;
    for (std::size_t i = 0; i < size(); ++i) p.emplace_back(degree(i), facet_degree(i));
    std::sort(p.begin(), p.end());
    return p;
  }

 private:
  std::vector<VertexId> ids_;
  std::vector<std::uint64_t> facets_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<int> facet_degree_;
};

/// Backtracking over degree-compatible bijections from `a` to `b`, pruned by
/// skeleton adjacency and by checking each facet of `a` as soon as all of its
/// vertices are mapped. Calls visit(image) for every isomorphism, where
/// image[i] is the index in `b` of vertex i of `a`; stops when visit returns
/// false.
template <class Visitor>
void for_each_isomorphism(const IndexedComplex& a, const IndexedComplex& b, Visitor&& visit) {
  const std::size_t n = a.size();
  if (n != b.size() || a.facets().size() != b.facets().size()) return;
  if (a.degree_profile() != b.degree_profile()) return;
  if (n == 0) {
    visit(std::vector<std::size_t>{});
    return;
  }

  // Search order: each next vertex has the most already-ordered neighbours.
  std::vector<std::size_t> order;
  std::uint64_t placed = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    int best_links = -1, best_degree = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed & IndexedComplex::bit(v)) continue;
      int links = std::popcount(a.adjacency(v) & placed);
      if (links > best_links || (links == best_links && a.degree(v) > best_degree)) {
        best = v;
        best_links = links;
        best_degree = a.degree(v);
      }
    }
    order.push_back(best);
    placed |= IndexedComplex::bit(best);
  }

  // Facets of `a` that become fully mapped at each level.
  std::vector<std::vector<std::uint64_t>> completing(n);
  placed = 0;
  for (std::size_t level = 0; level < n; ++level) {
    std::uint64_t before = placed;
    placed |= IndexedComplex::bit(order[level]);
    for (auto f : a.facets())
      if ((f & placed) == f && (f & before) != f) completing[level].push_back(f);
  }

  std::vector<std::size_t> image(n, n);
  std::uint64_t used = 0;
  bool stop = false;

  auto mapped_mask = [&](std::uint64_t f) {
    std::uint64_t m = 0;
    while (f) {
      auto i = static_cast<std::size_t>(std::countr_zero(f));
      m |= IndexedComplex::bit(image[i]);
      f &= f - 1;
    }
    return m;
  };

  auto rec = [&](auto&& self, std::size_t level) -> void {
    if (level == n) {
      if (!visit(image)) stop = true;
      return;
    }
    const std::size_t v = order[level];
    for (std::size_t w = 0; w < n && !stop; ++w) {
      if (used & IndexedComplex::bit(w)) continue;
      if (a.degree(v) != b.degree(w) || a.facet_degree(v) != b.facet_degree(w)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < level && ok; ++k) {
        std::size_t u = order[k];
        ok = a.adjacent(u, v) == b.adjacent(image[u], w);
      }
      if (!ok) continue;
      image[v] = w;
      used |= IndexedComplex::bit(w);
      for (auto f : completing[level])
        if (!b.has_facet(mapped_mask(f))) {
          ok = false;
          break;
        }
      if (ok) self(self, level + 1);
      used &= ~IndexedComplex::bit(w);
      image[v] = n;
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// Vertex bijection (id in the first complex -> id in the second).
using VertexMap = std::map<VertexId, VertexId>;

/// Finds a facet-preserving vertex bijection. When both complexes are closed
/// of type within {3,4}, differing characteristic-partition size profiles
/// settle non-isomorphism without search.
inline std::optional<VertexMap> are_isomorphic(const SimplicialComplex& first, const SimplicialComplex& second) {
  if (first.dimension() != second.dimension() || first.facet_count() != second.facet_count()) return std::nullopt;

  auto short_link_profile = [](const SimplicialComplex& k) -> std::optional<std::vector<int>> {
    if (!is_closed_pseudomanifold(k).closed()) return std::nullopt;
    try {
      if (!is_short_link_type(complex_type(k))) return std::nullopt;
      return detail::characteristic_partition_unchecked(k, k.facets().front()).size_profile();
    } catch (const InputError&) {
      return std::nullopt;
    }
  };
  auto p1 = short_link_profile(first);
  auto p2 = short_link_profile(second);
  if (p1 && p2 && *p1 != *p2) return std::nullopt;

  detail::IndexedComplex a(first), b(second);
  std::optional<VertexMap> found;
  detail::for_each_isomorphism(a, b, [&](const std::vector<std::size_t>& image) {
    VertexMap m;
    for (std::size_t i = 0; i < image.size(); ++i) m[a.ids()[i]] = b.ids()[image[i]];
    found = std::move(m);
    return false;
  });
  return found;
}

}  // namespace shortlinks

#endif  // SHORTLINKS_ISOMORPHISM_HPP
