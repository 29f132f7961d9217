#ifndef SHORTLINKS_KP_HPP
#define SHORTLINKS_KP_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "shortlinks/common.hpp"
#include "shortlinks/partition.hpp"
#include "shortlinks/simplicial_complex.hpp"

namespace shortlinks {

/// K(P): start from the n-hyperoctahedron on {1..n+1, 1'..(n+1)'}, send i' to
/// the vertex of the part containing i, and drop every image facet with a
/// repeated vertex. The vertex of part j (1-based, stored order) is n+1+j.
inline SimplicialComplex build_kp(const Partition& partition) {
  const int m = partition.ground_size();
  if (m < 2) throw InputError("build_kp: partition must cover at least {1,2}");
  if (m > 24) throw GuardExceeded("build_kp: at most 24 elements (2^m candidate facets)");
  std::vector<VertexId> primed(static_cast<std::size_t>(m) + 1);
  for (int i = 1; i <= m; ++i) primed[i] = m + 1 + static_cast<VertexId>(partition.part_of(i));

  std::vector<Face> facets;
  const std::uint32_t total = std::uint32_t{1} << m;
  std::vector<VertexId> y(static_cast<std::size_t>(m));
  for (std::uint32_t choice = 0; choice < total; ++choice) {
    std::vector<bool> part_used(partition.part_count(), false);
    bool degenerate = false;
    for (int i = 1; i <= m && !degenerate; ++i) {
      if (choice & (std::uint32_t{1} << (i - 1))) {
        auto j = static_cast<std::size_t>(primed[i] - m - 1);
        degenerate = part_used[j];
        part_used[j] = true;
        y[i - 1] = primed[i];
      } else {
        y[i - 1] = i;
      }
    }
    if (!degenerate) facets.emplace_back(y);
  }
  return SimplicialComplex(m - 1, std::move(facets));
}

/// Closed-form invariants of K(P).
struct KpSummary {
  std::uint64_t facet_count = 0;
  std::size_t skeleton_m = 0;  // skeleton is K_m - hK_2
  std::size_t skeleton_h = 0;
  std::uint64_t aut_order = 0;
  std::uint64_t cox_order = 0;
  std::size_t vertex_orbit_count = 0;

  bool operator==(const KpSummary&) const = default;
};

inline KpSummary kp_summary(const Partition& partition) {
  KpSummary s;
  s.facet_count = 1;
  s.cox_order = 1;
  for (const auto& part : partition.parts()) {
    int ni = static_cast<int>(part.size());
    s.facet_count *= static_cast<std::uint64_t>(ni + 1);
    s.cox_order *= detail::factorial(ni + 1);
  }
  s.aut_order = s.cox_order;
  for (const auto& [size, mult] : partition.size_multiplicities()) s.aut_order *= detail::factorial(mult);
  s.skeleton_m = static_cast<std::size_t>(partition.ground_size()) + partition.part_count();
  s.skeleton_h = partition.singleton_count();
  // Aut permutes the simplices of each size class of the product of simplices
  // transitively, and never mixes classes.
  s.vertex_orbit_count = partition.size_multiplicities().size();
  return s;
}

/// Dual of the product of simplices Delta_1 x ... x Delta_t, dim Delta_j = |P_j|.
/// Vertices of Delta_j get consecutive ids; the facet dual to the product
/// vertex (v_1..v_t) is every simplex vertex except the chosen v_j.
inline SimplicialComplex product_dual(const Partition& partition) {
  const auto& parts = partition.parts();
  std::vector<VertexId> offset;
  VertexId next = 1;
  for (const auto& p : parts) {
    offset.push_back(next);
    next += static_cast<VertexId>(p.size() + 1);
  }
  std::vector<std::size_t> choice(parts.size(), 0);
  std::vector<Face> facets;
  while (true) {
    std::vector<VertexId> f;
    for (std::size_t j = 0; j < parts.size(); ++j)
      for (std::size_t w = 0; w <= parts[j].size(); ++w)
        if (w != choice[j]) f.push_back(offset[j] + static_cast<VertexId>(w));
    facets.emplace_back(std::move(f));
    std::size_t j = 0;
    while (j < parts.size() && ++choice[j] > parts[j].size()) choice[j++] = 0;
    if (j == parts.size()) break;
  }
  return SimplicialComplex(partition.dimension(), std::move(facets));
}

/// The partition P with K isomorphic to K(P). Every facet is checked to
/// carry the same characteristic-partition size profile.
inline Partition classify(const SimplicialComplex& k_complex) {
  auto type = complex_type(k_complex);
  if (!is_short_link_type(type))
    throw InputError("classify: complex has type " + type_to_string(type) + ", not within {3,4}");
  auto first = detail::characteristic_partition_unchecked(k_complex, k_complex.facets().front());
  auto profile = first.size_profile();
  for (const auto& facet : k_complex.facets())
    if (detail::characteristic_partition_unchecked(k_complex, facet).size_profile() != profile)
      throw InputError("classify: facet " + facet.to_string() + " has a different characteristic partition");
  return first;
}

}  // namespace shortlinks

#endif  // SHORTLINKS_KP_HPP
