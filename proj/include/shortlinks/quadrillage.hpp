#ifndef SHORTLINKS_QUADRILLAGE_HPP
#define SHORTLINKS_QUADRILLAGE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shortlinks/common.hpp"
#include "shortlinks/graph.hpp"

namespace shortlinks {

/// Quadrilateral given by its four vertices in cyclic order.
using QuadFace = std::array<std::size_t, 4>;

/// 2-dimensional cubical complex on vertices 0..V-1. Every edge lies in one
/// or two faces; closed means always two.
class Quadrillage {
 public:
  Quadrillage(std::size_t vertex_count, std::vector<QuadFace> faces)
      : n_(vertex_count), faces_(std::move(faces)) {
    std::map<Edge, std::vector<std::size_t>> incidence;
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      const auto& q = faces_[f];
      std::set<std::size_t> distinct(q.begin(), q.end());
      if (distinct.size() != 4) throw InputError("quadrillage: face " + std::to_string(f + 1) + " repeats a vertex");
      for (auto v : q)
        if (v >= n_) throw InputError("quadrillage: vertex out of range in face " + std::to_string(f + 1));
      for (std::size_t k = 0; k < 4; ++k) incidence[key(q[k], q[(k + 1) % 4])].push_back(f);
    }
    for (auto& [e, fs] : incidence) {
      if (fs.size() > 2)
        throw InputError("quadrillage: edge " + std::to_string(e.first + 1) + "-" + std::to_string(e.second + 1) +
                         " lies in more than two faces");
      edges_.push_back(e);
      edge_faces_.push_back(fs);
    }
  }

  std::size_t vertex_count() const { return n_; }
  const std::vector<QuadFace>& faces() const { return faces_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& faces_of_edge(std::size_t e) const { return edge_faces_[e]; }

  std::size_t edge_index(std::size_t u, std::size_t v) const {
    auto k = key(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), k);
    if (it == edges_.end() || *it != k) throw InputError("quadrillage: not an edge");
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool closed() const {
    return std::all_of(edge_faces_.begin(), edge_faces_.end(), [](const auto& fs) { return fs.size() == 2; });
  }

  /// Edge of face f opposite to edge e.
  std::size_t opposite(std::size_t e, std::size_t f) const {
    const auto& q = faces_[f];
    for (std::size_t k = 0; k < 4; ++k)
      if (key(q[k], q[(k + 1) % 4]) == edges_[e]) return edge_index(q[(k + 2) % 4], q[(k + 3) % 4]);
    throw InputError("quadrillage: edge not in face");
  }

  Graph skeleton() const { return Graph(n_, edges_); }

  /// Number of faces at each vertex.
  std::vector<std::size_t> vertex_face_counts() const {
    std::vector<std::size_t> c(n_, 0);
    for (const auto& q : faces_)
      for (auto v : q) ++c[v];
    return c;
  }

  bool operator==(const Quadrillage&) const = default;

 private:
  static Edge key(std::size_t u, std::size_t v) { return u < v ? Edge{u, v} : Edge{v, u}; }

  std::size_t n_;
  std::vector<QuadFace> faces_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> edge_faces_;
};

// Fixtures.

/// Boundary of the 3-cube; vertex i is the binary word i.
inline Quadrillage cube() {
  std::vector<QuadFace> faces;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    std::size_t a = (axis + 1) % 3, b = (axis + 2) % 3;
    for (std::size_t side = 0; side < 2; ++side) {
      std::size_t base = side << axis;
      faces.push_back({base, base | (std::size_t{1} << a), base | (std::size_t{1} << a) | (std::size_t{1} << b),
                       base | (std::size_t{1} << b)});
    }
  }
  return Quadrillage(8, std::move(faces));
}

/// p x q squares; vertex (i, j) is i * (q + 1) + j.
inline Quadrillage grid(std::size_t p, std::size_t q) {
  if (p < 1 || q < 1) throw InputError("grid: p and q must be at least 1");
  auto at = [q](std::size_t i, std::size_t j) { return i * (q + 1) + j; };
  std::vector<QuadFace> faces;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) faces.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)});
  return Quadrillage((p + 1) * (q + 1), std::move(faces));
}

/// C_p x C_q square torus; vertex (i, j) is i * q + j.
inline Quadrillage torus(std::size_t p, std::size_t q) {
  if (p < 3 || q < 3) throw InputError("torus: p and q must be at least 3");
  auto at = [p, q](std::size_t i, std::size_t j) { return (i % p) * q + (j % q); };
  std::vector<QuadFace> faces;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) faces.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)});
  return Quadrillage(p * q, std::move(faces));
}

/// Rhombic dodecahedron. Vertices 0..5 are the axis points +e0, -e0, +e1,
/// -e1, +e2, -e2 (valency 4); 6..13 are the cube corners (valency 3), corner
/// 6 + k having sign bits k. One rhombus per cuboctahedron vertex.
inline Quadrillage dual_cuboctahedron() {
  auto axis = [](std::size_t a, int sign) { return 2 * a + (sign > 0 ? 0 : 1); };
  auto corner = [](const std::array<int, 3>& s) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i)
      if (s[i] < 0) k |= std::size_t{1} << i;
    return 6 + k;
  };
  std::vector<QuadFace> faces;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) {
      std::size_t c = 3 - a - b;
      for (int sa : {1, -1})
        for (int sb : {1, -1}) {
          std::array<int, 3> up{}, down{};
          up[a] = down[a] = sa;
          up[b] = down[b] = sb;
          up[c] = 1;
          down[c] = -1;
          faces.push_back({axis(a, sa), corner(up), axis(b, sb), corner(down)});
        }
    }
  return Quadrillage(14, std::move(faces));
}

/// Chain of edges where consecutive edges are opposite sides of a shared
/// face. faces[i] joins edges[i] and edges[i + 1] (cyclically when closed).
struct Zone {
  std::vector<std::size_t> edges;  // indices into Quadrillage::edges()
  std::vector<std::size_t> faces;
  bool closed = false;

  std::size_t length() const { return edges.size(); }
};

/// Partitions the edges into maximal opposite-edge chains: circuits, or paths
/// running from boundary edge to boundary edge.
inline std::vector<Zone> zones(const Quadrillage& q) {
  const std::size_t edge_count = q.edges().size();
  std::vector<bool> seen(edge_count, false);
  std::vector<Zone> out;

  auto other_face = [&](std::size_t e, std::size_t f) -> std::optional<std::size_t> {
    const auto& fs = q.faces_of_edge(e);
    if (fs.size() < 2) return std::nullopt;
    return fs[0] == f ? fs[1] : fs[0];
  };
  // Walks from `start` leaving through `face`; stops at a boundary edge or on
  // return to `start`.
  auto walk = [&](std::size_t start, std::optional<std::size_t> face, Zone& z) {
    std::size_t cur = start;
    while (face) {
      std::size_t next = q.opposite(cur, *face);
      z.faces.push_back(*face);
      if (next == start) {
        z.closed = true;
        return;
      }
      z.edges.push_back(next);
      face = other_face(next, *face);
      cur = next;
    }
  };

  for (std::size_t e = 0; e < edge_count; ++e) {
    if (seen[e]) continue;
    const auto& fs = q.faces_of_edge(e);
    Zone forward;
    forward.edges.push_back(e);
    walk(e, fs[0], forward);
    if (!forward.closed && fs.size() == 2) {
      Zone backward;
      backward.edges.push_back(e);
      walk(e, fs[1], backward);
      Zone z;
      z.edges.assign(backward.edges.rbegin(), backward.edges.rend());
      z.edges.insert(z.edges.end(), forward.edges.begin() + 1, forward.edges.end());
      z.faces.assign(backward.faces.rbegin(), backward.faces.rend());
      z.faces.insert(z.faces.end(), forward.faces.begin(), forward.faces.end());
      forward = std::move(z);
    }
    for (auto x : forward.edges) seen[x] = true;
    out.push_back(std::move(forward));
  }
  return out;
}

/// No face is traversed twice.
inline bool zone_is_simple(const Zone& z) {
  auto f = z.faces;
  std::sort(f.begin(), f.end());
  return std::adjacent_find(f.begin(), f.end()) == f.end();
}

/// The band of a zone (all edges of its faces) is an isometric subgraph of
/// the skeleton.
inline bool zone_is_convex(const Quadrillage& q, const Zone& z) {
  if (!zone_is_simple(z)) throw InputError("zone_is_convex: zone is not simple");
  Graph g = q.skeleton();
  std::vector<std::size_t> vertices;
  std::vector<Edge> band_edges;
  for (auto f : z.faces) {
    const auto& quad = q.faces()[f];
    for (std::size_t k = 0; k < 4; ++k) {
      vertices.push_back(quad[k]);
      band_edges.emplace_back(quad[k], quad[(k + 1) % 4]);
    }
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  auto local = [&](std::size_t v) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  for (auto& [u, v] : band_edges) {
    u = local(u);
    v = local(v);
  }
  Graph band(vertices.size(), std::move(band_edges));
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (band.distance(a, b) != g.distance(vertices[a], vertices[b])) return false;
  return true;
}

/// Sphere (closed, V - E + F = 2) or disk (V - E + F = 1 with one boundary
/// circuit), connected.
inline bool is_planar_surface(const Quadrillage& q) {
  Graph g = q.skeleton();
  if (!g.connected()) return false;
  auto chi = static_cast<long>(q.vertex_count()) - static_cast<long>(q.edges().size()) +
             static_cast<long>(q.faces().size());
  if (q.closed()) return chi == 2;
  if (chi != 1) return false;
  std::vector<Edge> boundary;
  std::vector<int> degree(q.vertex_count(), 0);
  for (std::size_t e = 0; e < q.edges().size(); ++e)
    if (q.faces_of_edge(e).size() == 1) {
      boundary.push_back(q.edges()[e]);
      ++degree[q.edges()[e].first];
      ++degree[q.edges()[e].second];
    }
  std::set<std::size_t> on_boundary;
  for (std::size_t v = 0; v < degree.size(); ++v) {
    if (degree[v] != 0 && degree[v] != 2) return false;
    if (degree[v]) on_boundary.insert(v);
  }
  // Single circuit: as many boundary vertices as boundary edges, connected.
  if (boundary.size() != on_boundary.size()) return false;
  std::vector<std::size_t> ids(on_boundary.begin(), on_boundary.end());
  auto local = [&](std::size_t v) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  for (auto& [u, v] : boundary) {
    u = local(u);
    v = local(v);
  }
  return Graph(ids.size(), std::move(boundary)).connected();
}

struct ZoneCriterion {
  bool embeddable = false;
  bool precondition_holds = false;  // planar surface with bipartite skeleton
};

/// All zones simple and convex. The equivalence with hypercube embeddability
/// holds for plane bipartite graphs; outside that class the verdict is still
/// computed and precondition_holds is false.
inline ZoneCriterion embeddable_by_zones(const Quadrillage& q) {
  ZoneCriterion r;
  r.precondition_holds = is_planar_surface(q) && q.skeleton().bipartite();
  r.embeddable = true;
  for (const auto& z : zones(q))
    if (!zone_is_simple(z) || !zone_is_convex(q, z)) {
      r.embeddable = false;
      break;
    }
  return r;
}

/// Set of per-vertex face counts of a closed quadrillage.
inline std::set<int> quadrillage_type(const Quadrillage& q) {
  if (!q.closed()) throw InputError("quadrillage_type: quadrillage is not closed");
  std::set<int> t;
  for (auto c : q.vertex_face_counts()) t.insert(static_cast<int>(c));
  return t;
}

}  // namespace shortlinks

#endif  // SHORTLINKS_QUADRILLAGE_HPP
