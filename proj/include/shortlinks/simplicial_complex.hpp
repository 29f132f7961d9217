#ifndef SHORTLINKS_SIMPLICIAL_COMPLEX_HPP
#define SHORTLINKS_SIMPLICIAL_COMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shortlinks/common.hpp"
#include "shortlinks/graph.hpp"
#include "shortlinks/partition.hpp"

namespace shortlinks {

/// A face, identified with its sorted vertex set.
class Face {
 public:
  Face(std::initializer_list<VertexId> vertices) : Face(std::vector<VertexId>(vertices)) {}

  explicit Face(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InputError("face: must be nonempty");
    std::sort(vertices_.begin(), vertices_.end());
    if (vertices_.front() <= 0) throw InputError("face: vertex ids must be positive");
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw InputError("face: repeated vertex");
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  bool contains(VertexId v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }
  bool contains(const Face& other) const {
    return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end());
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) s += (i ? "," : "") + std::to_string(vertices_[i]);
    return s + "}";
  }

  auto operator<=>(const Face&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

/// Pure simplicial n-complex stored by its facets (sorted, deduplicated).
/// Lower-dimensional faces are enumerated on demand.
class SimplicialComplex {
 public:
  SimplicialComplex(int dimension, std::vector<Face> facets) : dim_(dimension), facets_(std::move(facets)) {
    if (dim_ < 1) throw InputError("complex: dimension must be at least 1");
    if (facets_.empty()) throw InputError("complex: no facets");
    for (const auto& f : facets_)
      if (f.dimension() != dim_)
        throw InputError("complex: facet " + f.to_string() + " does not have " + std::to_string(dim_ + 1) +
                         " vertices");
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
  }

  int dimension() const { return dim_; }
  const std::vector<Face>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  bool has_facet(const Face& f) const { return std::binary_search(facets_.begin(), facets_.end(), f); }

  std::vector<VertexId> vertices() const {
    std::set<VertexId> s;
    for (const auto& f : facets_) s.insert(f.vertices().begin(), f.vertices().end());
    return {s.begin(), s.end()};
  }

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int dim_;
  std::vector<Face> facets_;
};

namespace detail {

template <class Fn>
void for_each_subset(const std::vector<VertexId>& set, std::size_t k, Fn&& fn) {
  std::vector<VertexId> pick;
  pick.reserve(k);
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == k) {
      fn(pick);
      return;
    }
    for (std::size_t i = start; i + (k - pick.size()) <= set.size(); ++i) {
      pick.push_back(set[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

inline std::vector<VertexId> without(const std::vector<VertexId>& set, std::initializer_list<VertexId> drop) {
  std::vector<VertexId> out;
  for (auto v : set)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  return out;
}

}  // namespace detail

/// All k-dimensional faces, sorted.
inline std::vector<Face> faces_of_dim(const SimplicialComplex& k_complex, int k) {
  if (k < 0 || k > k_complex.dimension())
    throw InputError("faces_of_dim: k = " + std::to_string(k) + " outside 0.." +
                     std::to_string(k_complex.dimension()));
  std::set<std::vector<VertexId>> faces;
  for (const auto& f : k_complex.facets())
    detail::for_each_subset(f.vertices(), static_cast<std::size_t>(k + 1),
                            [&](const std::vector<VertexId>& s) { faces.insert(s); });
  std::vector<Face> out;
  out.reserve(faces.size());
  for (const auto& s : faces) out.emplace_back(s);
  return out;
}

struct ClosureReport {
  enum class Verdict { closed, boundary, bad };
  Verdict verdict = Verdict::closed;
  std::vector<Face> boundary;                         // (n-1)-faces in exactly one facet
  std::vector<std::pair<Face, std::size_t>> overfull;  // (n-1)-faces in three or more

  bool closed() const { return verdict == Verdict::closed; }
};

/// Closed iff every (n-1)-face lies in exactly two facets. Overfull faces take
/// precedence over boundary faces in the verdict.
inline ClosureReport is_closed_pseudomanifold(const SimplicialComplex& k_complex) {
  std::map<std::vector<VertexId>, std::size_t> count;
  for (const auto& f : k_complex.facets())
    for (auto v : f.vertices()) ++count[detail::without(f.vertices(), {v})];
  ClosureReport r;
  for (const auto& [ridge, c] : count) {
    if (c == 1) r.boundary.emplace_back(ridge);
    if (c >= 3) r.overfull.emplace_back(Face(ridge), c);
  }
  if (!r.overfull.empty())
    r.verdict = ClosureReport::Verdict::bad;
  else if (!r.boundary.empty())
    r.verdict = ClosureReport::Verdict::boundary;
  return r;
}

/// Link of an (n-2)-face: the edges completing it to facets, split into
/// cycles. Each cycle starts at its smallest vertex and continues toward the
/// smaller of that vertex's two neighbours.
struct LinkReport {
  std::vector<VertexId> face;  // empty only for the link of a 1-complex
  std::vector<std::vector<VertexId>> cycles;
  std::vector<std::size_t> sizes;  // sorted cycle lengths

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (auto s : sizes) e += s;
    return e;
  }
};

namespace detail {

inline LinkReport link_cycles(const SimplicialComplex& k_complex, std::span<const VertexId> face) {
  std::vector<VertexId> f(face.begin(), face.end());
  std::map<VertexId, std::vector<VertexId>> adj;
  std::size_t containing = 0;
  for (const auto& facet : k_complex.facets()) {
    const auto& fv = facet.vertices();
    if (!std::includes(fv.begin(), fv.end(), f.begin(), f.end())) continue;
    ++containing;
    std::vector<VertexId> e;
    std::set_difference(fv.begin(), fv.end(), f.begin(), f.end(), std::back_inserter(e));
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::string name = f.empty() ? std::string("{}") : Face(f).to_string();
  if (containing == 0) throw InputError("link_of_face: " + name + " is not a face of the complex");
  for (auto& [v, nb] : adj) {
    if (nb.size() != 2)
      throw InputError("link_of_face: link of " + name + " is not a union of cycles (vertex " +
                       std::to_string(v) + " has degree " + std::to_string(nb.size()) + ")");
    std::sort(nb.begin(), nb.end());
  }
  LinkReport r;
  r.face = f;
  std::set<VertexId> seen;
  for (const auto& [start, nb] : adj) {
    if (seen.count(start)) continue;
    std::vector<VertexId> cycle{start};
    seen.insert(start);
    VertexId prev = start, cur = nb[0];
    while (cur != start) {
      cycle.push_back(cur);
      seen.insert(cur);
      const auto& next = adj[cur];
      VertexId nxt = next[0] == prev ? next[1] : next[0];
      prev = cur;
      cur = nxt;
    }
    r.sizes.push_back(cycle.size());
    r.cycles.push_back(std::move(cycle));
  }
  std::sort(r.sizes.begin(), r.sizes.end());
  return r;
}

}  // namespace detail

inline LinkReport link_of_face(const SimplicialComplex& k_complex, const Face& face) {
  if (face.dimension() != k_complex.dimension() - 2)
    throw InputError("link_of_face: " + face.to_string() + " is not an (n-2)-face");
  return detail::link_cycles(k_complex, face.vertices());
}

/// Links of all (n-2)-faces. For n = 1 this is the single link of the empty
/// face, i.e. the complex itself read as a union of cycles.
inline std::vector<LinkReport> all_links(const SimplicialComplex& k_complex) {
  std::vector<LinkReport> out;
  if (k_complex.dimension() == 1) {
    out.push_back(detail::link_cycles(k_complex, {}));
    return out;
  }
  for (const auto& f : faces_of_dim(k_complex, k_complex.dimension() - 2))
    out.push_back(detail::link_cycles(k_complex, f.vertices()));
  return out;
}

/// The set L of all link cycle lengths. Requires a closed complex.
inline std::set<int> complex_type(const SimplicialComplex& k_complex) {
  if (!is_closed_pseudomanifold(k_complex).closed()) throw InputError("complex_type: complex is not closed");
  std::set<int> type;
  for (const auto& link : all_links(k_complex))
    for (auto s : link.sizes) type.insert(static_cast<int>(s));
  return type;
}

inline bool is_short_link_type(const std::set<int>& type) {
  return std::all_of(type.begin(), type.end(), [](int l) { return l == 3 || l == 4; });
}

inline std::string type_to_string(const std::set<int>& type) {
  std::string s = "{";
  bool first = true;
  for (int l : type) {
    s += (first ? "" : ",") + std::to_string(l);
    first = false;
  }
  return s + "}";
}

/// 1-skeleton. Graph vertex i carries the i-th smallest complex vertex id.
inline Graph skeleton(const SimplicialComplex& k_complex) {
  auto ids = k_complex.vertices();
  auto index = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  std::vector<Edge> edges;
  for (const auto& f : k_complex.facets()) {
    const auto& fv = f.vertices();
    for (std::size_t a = 0; a < fv.size(); ++a)
      for (std::size_t b = a + 1; b < fv.size(); ++b) edges.emplace_back(index(fv[a]), index(fv[b]));
  }
  return Graph(ids.size(), std::move(edges), ids);
}

inline std::int64_t euler_characteristic(const SimplicialComplex& k_complex) {
  std::int64_t chi = 0;
  for (int k = 0; k <= k_complex.dimension(); ++k) {
    auto count = static_cast<std::int64_t>(faces_of_dim(k_complex, k).size());
    chi += (k % 2 == 0) ? count : -count;
  }
  return chi;
}

namespace detail {

/// Characteristic partition of a facet, assuming the type check already
/// passed. The i-th smallest vertex of the facet is relabeled i.
inline Partition characteristic_partition_unchecked(const SimplicialComplex& k_complex, const Face& facet) {
  const auto& dv = facet.vertices();
  const std::size_t m = dv.size();
  std::vector<std::vector<bool>> three(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      auto ridge = without(dv, {dv[i], dv[j]});
      auto link = link_cycles(k_complex, ridge);
      if (link.cycles.size() != 1)
        throw InputError("characteristic_partition: link of " + (ridge.empty() ? "{}" : Face(ridge).to_string()) +
                         " is not a single cycle");
      three[i][j] = three[j][i] = link.sizes[0] == 3;
    }
  }
  std::vector<int> component(m, -1);
  std::vector<Partition::Part> parts;
  for (std::size_t i = 0; i < m; ++i) {
    if (component[i] >= 0) continue;
    Partition::Part part{static_cast<int>(i + 1)};
    component[i] = static_cast<int>(parts.size());
    for (std::size_t j = i + 1; j < m; ++j) {
      if (three[i][j]) {
        if (component[j] >= 0)
          throw InputError("characteristic_partition: length-3 links do not form disjoint cliques");
        component[j] = component[i];
        part.push_back(static_cast<int>(j + 1));
      }
    }
    // Length-3 links must form disjoint cliques.
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a + 1; b < part.size(); ++b)
        if (!three[part[a] - 1][part[b] - 1])
          throw InputError("characteristic_partition: length-3 links do not form disjoint cliques");
    parts.push_back(std::move(part));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && three[i][j] && component[i] != component[j])
        throw InputError("characteristic_partition: length-3 links do not form disjoint cliques");
  return Partition(std::move(parts)).canonical();
}

}  // namespace detail

/// Partition of a facet's vertices with i ~ j iff the link of the facet minus
/// {i, j} has length 3. Vertices are relabeled 1..n+1 in increasing order, so
/// for the facet {1..n+1} the labels are unchanged. Returned in canonical form.
inline Partition characteristic_partition(const SimplicialComplex& k_complex, const Face& facet) {
  if (!k_complex.has_facet(facet)) throw InputError("characteristic_partition: " + facet.to_string() + " is not a facet");
  auto type = complex_type(k_complex);
  if (!is_short_link_type(type))
    throw InputError("characteristic_partition: complex has type " + type_to_string(type) + ", not within {3,4}");
  return detail::characteristic_partition_unchecked(k_complex, facet);
}

}  // namespace shortlinks

#endif  // SHORTLINKS_SIMPLICIAL_COMPLEX_HPP
