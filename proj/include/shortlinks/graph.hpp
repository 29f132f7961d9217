#ifndef SHORTLINKS_GRAPH_HPP
#define SHORTLINKS_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shortlinks/common.hpp"

namespace shortlinks {

using Edge = std::pair<std::size_t, std::size_t>;

/// Symmetric matrix of hop distances. kUnreachable marks different components.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t size() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  int& at(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> d_;
};

/// Undirected simple graph on vertices 0..n-1 with its path metric computed
/// once at construction. Vertices may carry labels (the ids of the complex a
/// skeleton came from); unlabeled graphs use 1-based labels.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<VertexId> labels = {})
      : n_(vertex_count), adjacency_(vertex_count), labels_(std::move(labels)) {
    if (labels_.empty()) {
      labels_.resize(n_);
      for (std::size_t i = 0; i < n_; ++i) labels_[i] = static_cast<VertexId>(i + 1);
    }
    if (labels_.size() != n_) throw InputError("graph: label count differs from vertex count");
    for (auto& [u, v] : edges) {
      if (u >= n_ || v >= n_) throw InputError("graph: edge endpoint out of range");
      if (u == v) throw InputError("graph: self-loops are not allowed");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adjacent_.assign(n_ * n_, false);
    for (const auto& [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
      adjacent_[u * n_ + v] = adjacent_[v * n_ + u] = true;
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
    compute_distances();
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacent_[u * n_ + v]; }

  const DistanceMatrix& distances() const { return dist_; }
  int distance(std::size_t u, std::size_t v) const { return dist_(u, v); }
  bool connected() const { return connected_; }

  const std::vector<VertexId>& labels() const { return labels_; }
  VertexId label(std::size_t v) const { return labels_[v]; }
  std::optional<std::size_t> index_of(VertexId label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  bool bipartite() const {
    std::vector<int> side(n_, -1);
    for (std::size_t s = 0; s < n_; ++s) {
      if (side[s] >= 0) continue;
      side[s] = 0;
      std::deque<std::size_t> queue{s};
      while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto w : adjacency_[u]) {
          if (side[w] < 0) {
            side[w] = 1 - side[u];
            queue.push_back(w);
          } else if (side[w] == side[u]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  /// Throws unless the graph is connected; metric operations call this first.
  void require_connected(const char* what) const {
    if (!connected_) throw InputError(std::string(what) + ": graph must be connected");
  }

  /// Same vertex count and edge set; labels are ignored.
  bool same_edges(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  void compute_distances() {
    dist_ = DistanceMatrix(n_);
    connected_ = true;
    for (std::size_t s = 0; s < n_; ++s) {
      dist_.at(s, s) = 0;
      std::deque<std::size_t> queue{s};
      std::size_t reached = 1;
      while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto w : adjacency_[u]) {
          if (dist_(s, w) == DistanceMatrix::kUnreachable) {
            dist_.at(s, w) = dist_(s, u) + 1;
            ++reached;
            queue.push_back(w);
          }
        }
      }
      if (reached != n_) connected_ = false;
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<bool> adjacent_;
  std::vector<VertexId> labels_;
  DistanceMatrix dist_;
  bool connected_ = true;
};

// Named graph constructors. Vertices are 0..m-1 in the order described.

inline Graph complete_graph(std::size_t m) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) e.emplace_back(i, j);
  return Graph(m, std::move(e));
}

/// K_m - hK_2: the deleted matching is {0,1}, {2,3}, ..., {2h-2, 2h-1}.
inline Graph complete_minus_matching(std::size_t m, std::size_t h) {
  if (2 * h > m) throw InputError("K_m-hK_2 needs h <= m/2");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!(j == i + 1 && i % 2 == 0 && j < 2 * h)) e.emplace_back(i, j);
  return Graph(m, std::move(e));
}

/// K_m - C_h: the deleted cycle is 0,1,...,h-1. h = 3 gives K_m - K_3.
inline Graph complete_minus_cycle(std::size_t m, std::size_t h) {
  if (h < 3 || h > m) throw InputError("K_m-C_h needs 3 <= h <= m");
  auto on_cycle = [h](std::size_t i, std::size_t j) {
    return j < h && (j == i + 1 || (i == 0 && j == h - 1));
  };
  std::vector<Edge> e;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!on_cycle(i, j)) e.emplace_back(i, j);
  return Graph(m, std::move(e));
}

inline Graph cycle_graph(std::size_t m) {
  if (m < 3) throw InputError("C_m needs m >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
  return Graph(m, std::move(e));
}

/// Q_N on binary words 0..2^N-1.
inline Graph hypercube_graph(std::size_t dim) {
  if (dim > 16) throw InputError("Q_N needs N <= 16");
  std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> e;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t b = 0; b < dim; ++b)
      if (!(v & (std::size_t{1} << b))) e.emplace_back(v, v | (std::size_t{1} << b));
  return Graph(n, std::move(e));
}

/// K_{a,b}: sides 0..a-1 and a..a+b-1.
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

/// If the graph is K_m minus a matching of h edges, returns h.
inline std::optional<std::size_t> complete_minus_matching_size(const Graph& g) {
  std::size_t n = g.vertex_count();
  std::size_t missing = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t non_neighbors = n - 1 - g.degree(v);
    if (non_neighbors > 1) return std::nullopt;
    missing += non_neighbors;
  }
  return missing / 2;
}

/// "K7-K2"-style name for K_m - hK_2 graphs; "K4" when h = 0.
inline std::string complete_minus_matching_name(std::size_t m, std::size_t h) {
  std::string s = "K" + std::to_string(m);
  if (h == 1) s += "-K2";
  if (h > 1) s += "-" + std::to_string(h) + "K2";
  return s;
}

}  // namespace shortlinks

#endif  // SHORTLINKS_GRAPH_HPP
