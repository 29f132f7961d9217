// Brute-force reference implementations used only by the tests. None of them
// shares code paths with the library routine it checks.
#ifndef SHORTLINKS_TESTS_ORACLES_HPP
#define SHORTLINKS_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shortlinks/shortlinks.hpp"

namespace shortlinks::testing {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(SHORTLINKS_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline SimplicialComplex thirteen_facet_complex() {
  std::vector<Face> f;
  for (const char* s : {"1267", "2346", "1246", "2367", "1456", "1357", "3467", "1237", "1234", "4567", "3457",
                        "1345", "5167"}) {
    std::vector<VertexId> v;
    for (const char* c = s; *c; ++c) v.push_back(*c - '0');
    f.emplace_back(v);
  }
  return SimplicialComplex(3, f);
}

inline SimplicialComplex octahedron() {
  return SimplicialComplex(2, {{1, 2, 3}, {1, 2, 6}, {1, 5, 3}, {1, 5, 6}, {4, 2, 3}, {4, 2, 6}, {4, 5, 3}, {4, 5, 6}});
}

/// Boundary of the n-simplex on 1..n+2.
inline SimplicialComplex simplex_boundary(int n) {
  std::vector<Face> f;
  for (int skip = 1; skip <= n + 2; ++skip) {
    std::vector<VertexId> v;
    for (int i = 1; i <= n + 2; ++i)
      if (i != skip) v.push_back(i);
    f.emplace_back(v);
  }
  return SimplicialComplex(n, f);
}

/// |Aut| by trying every vertex permutation.
inline std::uint64_t naive_automorphism_count(const SimplicialComplex& k) {
  auto ids = k.vertices();
  std::set<std::vector<VertexId>> facets;
  for (const auto& f : k.facets()) facets.insert(f.vertices());
  auto image = ids;
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& f : facets) {
      std::vector<VertexId> g;
      for (auto v : f) g.push_back(image[std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()]);
      std::sort(g.begin(), g.end());
      if (!facets.count(g)) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(image.begin(), image.end()));
  return count;
}

/// Whether some assignment of words in {0,1}^N, N <= max_dim, realizes
/// Hamming distance = scale * d. Plain depth-first search, vertex 0 at the
/// origin, no other symmetry breaking.
inline bool exhaustive_address_search(const Graph& g, int scale, int max_dim) {
  const std::size_t n = g.vertex_count();
  for (int dim = 0; dim <= max_dim; ++dim) {
    std::vector<std::uint32_t> word(n, 0);
    auto rec = [&](auto&& self, std::size_t v) -> bool {
      if (v == n) return true;
      for (std::uint32_t w = 0; w < (1U << dim); ++w) {
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u) ok = std::popcount(w ^ word[u]) == scale * g.distance(u, v);
        if (!ok) continue;
        word[v] = w;
        if (self(self, v + 1)) return true;
      }
      return false;
    };
    if (n == 0 || rec(rec, 1)) return true;
  }
  return false;
}

/// One representative per isomorphism class of connected graphs on n
/// vertices, by minimizing the edge bitmask over all relabelings.
inline std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<Edge> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<std::vector<std::size_t>> slot_index(n, std::vector<std::size_t>(n));
  for (std::size_t s = 0; s < slots.size(); ++s)
    slot_index[slots[s].first][slots[s].second] = slot_index[slots[s].second][slots[s].first] = s;
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint32_t> canon;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
    std::uint32_t best = mask;
    for (const auto& q : perms) {
      std::uint32_t m = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1U) m |= 1U << slot_index[q[slots[s].first]][q[slots[s].second]];
      best = std::min(best, m);
    }
    if (!canon.insert(best).second) continue;
    std::vector<Edge> e;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1U) e.push_back(slots[s]);
    Graph g(n, e);
    if (g.connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace shortlinks::testing

#endif  // SHORTLINKS_TESTS_ORACLES_HPP
