#ifndef SHORTLINKS_METRIC_HPP
#define SHORTLINKS_METRIC_HPP

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "shortlinks/common.hpp"
#include "shortlinks/exact_simplex.hpp"
#include "shortlinks/graph.hpp"

namespace shortlinks {

using BinaryWord = std::vector<bool>;

inline std::size_t hamming(const BinaryWord& a, const BinaryWord& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

/// True iff distances along the cycle agree with the graph metric for every
/// pair of cycle positions. `cycle` lists graph vertex indices in order.
inline bool is_isometric_cycle(const Graph& g, const std::vector<std::size_t>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 3) throw InputError("is_isometric_cycle: a cycle needs at least 3 vertices");
  auto sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("is_isometric_cycle: repeated vertex");
  for (std::size_t i = 0; i < len; ++i) {
    if (cycle[i] >= g.vertex_count()) throw InputError("is_isometric_cycle: vertex out of range");
    if (!g.adjacent(cycle[i], cycle[(i + 1) % len])) throw InputError("is_isometric_cycle: not a cycle of the graph");
  }
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      auto along = static_cast<int>(std::min(j - i, len - (j - i)));
      if (g.distance(cycle[i], cycle[j]) != along) return false;
    }
  return true;
}

/// Integer weights b with sum 1, and the hypermetric form
/// sum_{i<j} b_i b_j d(i,j) evaluated on a graph.
struct GonalVector {
  std::vector<int> b;
  std::int64_t value = 0;
};

inline std::int64_t hypermetric_value(const Graph& g, const std::vector<int>& b) {
  std::int64_t v = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i]) continue;
    for (std::size_t j = i + 1; j < b.size(); ++j)
      v += static_cast<std::int64_t>(b[i]) * b[j] * g.distance(i, j);
  }
  return v;
}

/// Every b with sum 1 and sum |b_i| <= 2*bound+1 whose hypermetric form is
/// positive. Bound 2 covers the 5-gonal inequalities, bound 3 adds the 7-gonal.
inline std::vector<GonalVector> kgonal_violations(const Graph& g, int bound) {
  if (bound < 2) throw InputError("kgonal_violations: bound must be at least 2");
  g.require_connected("kgonal_violations");
  const std::size_t n = g.vertex_count();
  const int budget = 2 * bound + 1;
  std::vector<GonalVector> out;
  std::vector<int> b(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left, int sum) -> void {
    if (std::abs(1 - sum) > left) return;
    if (i == n) {
      if (sum != 1) return;
      auto value = hypermetric_value(g, b);
      if (value > 0) out.push_back({b, value});
      return;
    }
    for (int x = -left; x <= left; ++x) {
      b[i] = x;
      self(self, i + 1, left - std::abs(x), sum + x);
    }
    b[i] = 0;
  };
  rec(rec, 0, budget, 0);
  return out;
}

/// Scale-1 hypercube embedding: one binary coordinate per class of edges.
struct PartialCubeLabeling {
  std::size_t dimension = 0;
  std::vector<BinaryWord> addresses;
};

/// Recognizes isometric subgraphs of hypercubes. A bipartite graph splits
/// along each edge uv into the vertices closer to u and those closer to v;
/// edges giving the same split form one class and one coordinate. The graph
/// is a partial cube iff the resulting labeling is isometric.
inline std::optional<PartialCubeLabeling> partial_cube(const Graph& g) {
  g.require_connected("partial_cube");
  if (!g.bipartite()) return std::nullopt;
  const std::size_t n = g.vertex_count();
  std::map<BinaryWord, std::size_t> classes;
  std::vector<BinaryWord> splits;
  for (const auto& [u, v] : g.edges()) {
    BinaryWord side(n);
    for (std::size_t w = 0; w < n; ++w) side[w] = g.distance(w, v) < g.distance(w, u);
    if (side[0]) side.flip();
    if (classes.emplace(side, splits.size()).second) splits.push_back(std::move(side));
  }
  PartialCubeLabeling lab;
  lab.dimension = splits.size();
  lab.addresses.assign(n, BinaryWord(lab.dimension));
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t k = 0; k < lab.dimension; ++k) lab.addresses[w][k] = splits[k][w];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (hamming(lab.addresses[a], lab.addresses[b]) != static_cast<std::size_t>(g.distance(a, b)))
        return std::nullopt;
  return lab;
}

inline constexpr std::size_t kCutConeVertexGuard = 13;

/// A cut delta_S separates the vertices in S from the rest. S never
/// contains vertex 0, so each split appears once.
struct Cut {
  std::uint64_t members = 0;  // bit i set iff vertex i is in S
  Rational weight;

  bool separates(std::size_t i, std::size_t j) const { return ((members >> i) & 1U) != ((members >> j) & 1U); }
};

/// Nonnegative combination of cut metrics equal to `metric`.
struct CutDecomposition {
  DistanceMatrix metric;
  std::vector<Cut> cuts;

  std::size_t vertex_count() const { return metric.size(); }

  /// Exact check that the weighted cuts reproduce the metric.
  bool reproduces_metric() const {
    for (const auto& c : cuts)
      if (c.weight < 0 || (c.members & 1U)) return false;
    for (std::size_t i = 0; i < vertex_count(); ++i)
      for (std::size_t j = i + 1; j < vertex_count(); ++j) {
        Rational sum = 0;
        for (const auto& c : cuts)
          if (c.separates(i, j)) sum += c.weight;
        if (sum != metric(i, j)) return false;
      }
    return true;
  }
};

/// Inequality sum_{i<j} y_ij x_ij <= 0 valid on every cut metric and violated
/// by the graph metric: a certificate that the graph is not L1-embeddable.
struct CutConeSeparator {
  std::vector<Edge> pairs;
  std::vector<Rational> weights;
};

/// Exactly one of the two fields is set.
struct CutConeVerdict {
  std::optional<CutDecomposition> decomposition;
  std::optional<CutConeSeparator> separator;
};

/// Decides exactly whether the path metric lies in the cut cone (is
/// L1-embeddable): d = sum_S w_S delta_S with w >= 0, over all splits S of the
/// vertices not containing vertex 0. Feasible instances return the weights;
/// infeasible ones return the dual certificate.
inline CutConeVerdict cut_cone_membership(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kCutConeVertexGuard)
    throw GuardExceeded("cut_cone_decompose: more than " + std::to_string(kCutConeVertexGuard) + " vertices");
  g.require_connected("cut_cone_decompose");
  CutConeVerdict verdict;
  CutDecomposition dec;
  dec.metric = g.distances();
  if (n < 2) {
    verdict.decomposition = std::move(dec);
    return verdict;
  }

  std::vector<std::uint64_t> subsets;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << (n - 1)); ++s) subsets.push_back(s << 1);
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Rational> row(subsets.size());
      for (std::size_t c = 0; c < subsets.size(); ++c)
        row[c] = (((subsets[c] >> i) & 1U) != ((subsets[c] >> j) & 1U)) ? 1 : 0;
      rows.push_back(std::move(row));
      rhs.emplace_back(g.distance(i, j));
      pairs.emplace_back(i, j);
    }
  Phase1Simplex lp(rows, rhs);
  auto x = lp.solve();
  if (!x) {
    verdict.separator = CutConeSeparator{std::move(pairs), lp.farkas_certificate()};
    return verdict;
  }
  for (std::size_t c = 0; c < subsets.size(); ++c)
    if ((*x)[c] != 0) dec.cuts.push_back({subsets[c], (*x)[c]});
  if (!dec.reproduces_metric()) throw std::logic_error("cut_cone_decompose: certificate does not reproduce the metric");
  verdict.decomposition = std::move(dec);
  return verdict;
}

/// The decomposition, or nullopt when the metric is not in the cut cone.
inline std::optional<CutDecomposition> cut_cone_decompose(const Graph& g) {
  return cut_cone_membership(g).decomposition;
}

/// Binary addresses with Hamming distance scale * d for every pair.
struct ScaledEmbedding {
  std::int64_t scale = 1;
  std::size_t dimension = 0;
  std::vector<BinaryWord> addresses;
};

/// Clears denominators: scale = lcm of the weight denominators, and each cut
/// contributes scale * weight identical coordinates. The result is audited.
inline ScaledEmbedding embedding_from_cuts(const CutDecomposition& dec) {
  if (!dec.reproduces_metric()) throw InputError("embedding_from_cuts: decomposition does not reproduce its metric");
  BigInt scale = 1;
  for (const auto& c : dec.cuts) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(c.weight));
  if (scale > BigInt(1'000'000)) throw GuardExceeded("embedding_from_cuts: scale above 10^6");
  ScaledEmbedding emb;
  emb.scale = scale.convert_to<std::int64_t>();
  const std::size_t n = dec.vertex_count();
  emb.addresses.assign(n, {});
  for (const auto& c : dec.cuts) {
    Rational copies_q = c.weight * scale;
    auto copies = boost::multiprecision::numerator(copies_q).convert_to<std::int64_t>();
    if (copies > 1'000'000) throw GuardExceeded("embedding_from_cuts: too many coordinates");
    for (std::int64_t k = 0; k < copies; ++k)
      for (std::size_t v = 0; v < n; ++v) emb.addresses[v].push_back((c.members >> v) & 1U);
  }
  emb.dimension = n ? emb.addresses[0].size() : 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (static_cast<std::int64_t>(hamming(emb.addresses[i], emb.addresses[j])) != emb.scale * dec.metric(i, j))
        throw std::logic_error("embedding_from_cuts: audit failed");
  return emb;
}

inline constexpr std::size_t kScaledEmbeddingVertexGuard = 8;
inline constexpr std::size_t kScaledEmbeddingDimensionGuard = 12;

/// Backtracking search for addresses in {0,1}^dim with Hamming distance
/// scale * d for all pairs. Vertices are placed in decreasing-degree order;
/// the first sits at the origin and the second at the lowest-bits word of
/// the right weight (coordinate permutations make this no loss).
inline std::optional<std::vector<BinaryWord>> find_scaled_embedding(const Graph& g, int scale, std::size_t dim) {
  const std::size_t n = g.vertex_count();
  if (n > kScaledEmbeddingVertexGuard || dim > kScaledEmbeddingDimensionGuard)
    throw GuardExceeded("find_scaled_embedding: needs at most 8 vertices and dimension at most 12");
  if (scale < 1) throw InputError("find_scaled_embedding: scale must be positive");
  g.require_connected("find_scaled_embedding");
  if (n == 0) return std::vector<BinaryWord>{};

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return g.degree(a) > g.degree(b); });

  using Word = std::uint32_t;
  std::vector<Word> word(n, 0);
  const Word limit = Word{1} << dim;
  auto target = [&](std::size_t a, std::size_t b) { return scale * g.distance(a, b); };

  auto rec = [&](auto&& self, std::size_t level) -> bool {
    if (level == n) return true;
    const std::size_t v = order[level];
    auto fits = [&](Word w) {
      for (std::size_t k = 0; k < level; ++k)
        if (std::popcount(w ^ word[order[k]]) != target(v, order[k])) return false;
      return true;
    };
    if (level == 1) {
      int t = target(v, order[0]);
      if (t > static_cast<int>(dim)) return false;
      word[v] = (Word{1} << t) - 1;
      return self(self, 2);
    }
    for (Word w = 0; w < limit; ++w) {
      if (!fits(w)) continue;
      word[v] = w;
      if (self(self, level + 1)) return true;
    }
    return false;
  };
  word[order[0]] = 0;
  if (!rec(rec, 1)) return std::nullopt;

  std::vector<BinaryWord> out(n, BinaryWord(dim));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t k = 0; k < dim; ++k) out[v][k] = (word[v] >> k) & 1U;
  return out;
}

/// a_m = C(m-2, m/2-1) for even m, 2 C(m-2, (m-3)/2) for odd m.
inline std::uint64_t a_m(int m) {
  if (m < 3) throw InputError("a_m: m must be at least 3");
  if (m % 2 == 0) return detail::binomial(m - 2, m / 2 - 1);
  return 2 * detail::binomial(m - 2, (m - 3) / 2);
}

}  // namespace shortlinks

#endif  // SHORTLINKS_METRIC_HPP
