#ifndef SHORTLINKS_SYMMETRY_HPP
#define SHORTLINKS_SYMMETRY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "shortlinks/common.hpp"
#include "shortlinks/isomorphism.hpp"
#include "shortlinks/partition.hpp"
#include "shortlinks/simplicial_complex.hpp"

namespace shortlinks {

inline constexpr std::size_t kAutomorphismVertexGuard = 12;
inline constexpr std::uint64_t kCoxeterOrderGuard = 10'000'000;

/// Bijection of a finite vertex set onto itself.
class Permutation {
 public:
  Permutation(std::vector<VertexId> domain, std::vector<VertexId> images)
      : domain_(std::move(domain)), images_(std::move(images)) {
    if (domain_.size() != images_.size()) throw InputError("permutation: domain and image sizes differ");
    std::vector<std::size_t> idx(domain_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return domain_[a] < domain_[b]; });
    std::vector<VertexId> d, im;
    for (auto i : idx) {
      d.push_back(domain_[i]);
      im.push_back(images_[i]);
    }
    domain_ = std::move(d);
    images_ = std::move(im);
    auto sorted_images = images_;
    std::sort(sorted_images.begin(), sorted_images.end());
    if (std::adjacent_find(domain_.begin(), domain_.end()) != domain_.end() || sorted_images != domain_)
      throw InputError("permutation: not a bijection of its domain");
  }

  static Permutation identity(std::vector<VertexId> domain) {
    auto images = domain;
    return Permutation(std::move(domain), std::move(images));
  }

  VertexId operator()(VertexId v) const {
    auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
    if (it == domain_.end() || *it != v) throw InputError("permutation: vertex outside domain");
    return images_[static_cast<std::size_t>(it - domain_.begin())];
  }

  Face apply(const Face& f) const {
    std::vector<VertexId> out;
    for (auto v : f.vertices()) out.push_back((*this)(v));
    return Face(std::move(out));
  }

  const std::vector<VertexId>& domain() const { return domain_; }
  const std::vector<VertexId>& images() const { return images_; }
  bool is_identity() const { return domain_ == images_; }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<VertexId> domain_;
  std::vector<VertexId> images_;
};

namespace detail {

inline void check_automorphism_guard(const SimplicialComplex& k_complex) {
  if (k_complex.vertices().size() > kAutomorphismVertexGuard)
    throw GuardExceeded("automorphisms: more than " + std::to_string(kAutomorphismVertexGuard) + " vertices");
}

}  // namespace detail

/// Every vertex permutation mapping the facet set onto itself, sorted.
inline std::vector<Permutation> automorphisms(const SimplicialComplex& k_complex) {
  detail::check_automorphism_guard(k_complex);
  detail::IndexedComplex ic(k_complex);
  std::vector<Permutation> out;
  detail::for_each_isomorphism(ic, ic, [&](const std::vector<std::size_t>& image) {
    std::vector<VertexId> images;
    for (auto i : image) images.push_back(ic.ids()[i]);
    out.emplace_back(ic.ids(), std::move(images));
    return true;
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.images() < b.images(); });
  return out;
}

/// |Aut(K)| by the same search, without materializing the group.
inline std::uint64_t count_automorphisms(const SimplicialComplex& k_complex) {
  detail::check_automorphism_guard(k_complex);
  detail::IndexedComplex ic(k_complex);
  std::uint64_t count = 0;
  detail::for_each_isomorphism(ic, ic, [&](const std::vector<std::size_t>&) {
    ++count;
    return true;
  });
  return count;
}

/// Orbits of the group generated by `perms` acting on `domain`. The domain
/// must be invariant. Orbits are sorted internally and by first element.
inline std::vector<std::vector<Face>> orbits(const std::vector<Permutation>& perms, const std::vector<Face>& domain) {
  std::map<Face, std::size_t> index;
  for (std::size_t i = 0; i < domain.size(); ++i) index.emplace(domain[i], i);
  std::vector<std::size_t> parent(domain.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Closing under generators: each generator edge joins a face and its image.
  for (const auto& g : perms) {
    for (std::size_t i = 0; i < domain.size(); ++i) {
      auto it = index.find(g.apply(domain[i]));
      if (it == index.end()) throw InputError("orbits: domain is not invariant under the permutations");
      parent[find(i)] = find(it->second);
    }
  }
  std::map<std::size_t, std::vector<Face>> groups;
  for (std::size_t i = 0; i < domain.size(); ++i) groups[find(i)].push_back(domain[i]);
  std::vector<std::vector<Face>> out;
  for (auto& [root, faces] : groups) {
    std::sort(faces.begin(), faces.end());
    out.push_back(std::move(faces));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Vertices as singleton faces, for orbits().
inline std::vector<Face> vertex_faces(const SimplicialComplex& k_complex) {
  std::vector<Face> out;
  for (auto v : k_complex.vertices()) out.push_back(Face{v});
  return out;
}

/// Coxeter matrix on generators g_1..g_{n+1}: m_ii = 1, m_ij = 3 when i and j
/// share a part and 2 otherwise.
struct CoxeterPresentation {
  std::vector<int> generators;
  std::vector<std::vector<int>> matrix;
};

inline CoxeterPresentation coxeter_presentation(const Partition& partition) {
  const int m = partition.ground_size();
  CoxeterPresentation c;
  c.matrix.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 2));
  for (int i = 1; i <= m; ++i) {
    c.generators.push_back(i);
    for (int j = 1; j <= m; ++j)
      c.matrix[i - 1][j - 1] = i == j ? 1 : (partition.part_of(i) == partition.part_of(j) ? 3 : 2);
  }
  return c;
}

/// Permutation of points 0..k-1 (k <= 16), one nibble per point.
using PackedPermutation = std::uint64_t;

namespace detail {

inline PackedPermutation pack(const std::vector<std::uint8_t>& images) {
  PackedPermutation p = 0;
  for (std::size_t i = 0; i < images.size(); ++i) p |= PackedPermutation{images[i]} << (4 * i);
  return p;
}

inline unsigned packed_at(PackedPermutation p, std::size_t i) { return static_cast<unsigned>((p >> (4 * i)) & 0xF); }

// x -> first(second(x))
inline PackedPermutation packed_compose(PackedPermutation first, PackedPermutation second, std::size_t points) {
  PackedPermutation r = 0;
  for (std::size_t i = 0; i < points; ++i) r |= PackedPermutation{packed_at(first, packed_at(second, i))} << (4 * i);
  return r;
}

/// Open-addressing set of packed permutations.
class PackedSet {
 public:
  static constexpr PackedPermutation kEmpty = ~PackedPermutation{0};

  PackedSet() : slots_(1024, kEmpty) {}

  bool insert(PackedPermutation p) {
    if (2 * (size_ + 1) > slots_.size()) grow();
    if (place(slots_, p)) {
      ++size_;
      return true;
    }
    return false;
  }
  std::size_t size() const { return size_; }

 private:
  static std::size_t slot(PackedPermutation p, std::size_t mask) {
    p ^= p >> 33;
    p *= 0xff51afd7ed558ccdULL;
    p ^= p >> 33;
    return static_cast<std::size_t>(p) & mask;
  }
  static bool place(std::vector<PackedPermutation>& slots, PackedPermutation p) {
    std::size_t mask = slots.size() - 1;
    for (std::size_t s = slot(p, mask);; s = (s + 1) & mask) {
      if (slots[s] == p) return false;
      if (slots[s] == kEmpty) {
        slots[s] = p;
        return true;
      }
    }
  }
  void grow() {
    std::vector<PackedPermutation> bigger(slots_.size() * 2, kEmpty);
    for (auto p : slots_)
      if (p != kEmpty) place(bigger, p);
    slots_ = std::move(bigger);
  }

  std::vector<PackedPermutation> slots_;
  std::size_t size_ = 0;
};

}  // namespace detail

/// The permutation realization of Cox(K(P)): g_i for i in P_j is the
/// transposition (i, aux_j) on the points {1..m} plus one auxiliary point per
/// part. Points are 0-based here: element i is point i-1, aux_j is m+j-1.
struct CoxeterRealization {
  std::size_t points = 0;
  std::vector<PackedPermutation> generators;
};

inline CoxeterRealization coxeter_realization(const Partition& partition) {
  const auto m = static_cast<std::size_t>(partition.ground_size());
  CoxeterRealization r;
  r.points = m + partition.part_count();
  if (r.points > 16) throw GuardExceeded("coxeter realization: at most 16 points");
  for (int i = 1; i <= static_cast<int>(m); ++i) {
    std::vector<std::uint8_t> images(r.points);
    std::iota(images.begin(), images.end(), std::uint8_t{0});
    auto aux = m + partition.part_of(i);
    std::swap(images[static_cast<std::size_t>(i - 1)], images[aux]);
    r.generators.push_back(detail::pack(images));
  }
  return r;
}

/// Breadth-first closure of the generated group, visiting every element once.
template <class Visitor>
std::uint64_t for_each_group_element(const CoxeterRealization& r, std::uint64_t guard, Visitor&& visit) {
  std::vector<std::uint8_t> id(r.points);
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  detail::PackedSet seen;
  std::vector<PackedPermutation> frontier{detail::pack(id)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<PackedPermutation> next;
    for (auto g : frontier) {
      visit(g);
      for (auto s : r.generators) {
        auto h = detail::packed_compose(g, s, r.points);
        if (seen.insert(h)) {
          if (seen.size() > guard) throw GuardExceeded("group closure exceeded " + std::to_string(guard) + " elements");
          next.push_back(h);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

/// Order of the realized Coxeter group, by closure.
inline std::uint64_t coxeter_order_bruteforce(const Partition& partition) {
  std::uint64_t formula = 1;
  for (const auto& p : partition.parts()) formula *= detail::factorial(static_cast<int>(p.size()) + 1);
  if (formula > kCoxeterOrderGuard)
    throw GuardExceeded("coxeter_order_bruteforce: expected order " + std::to_string(formula) + " exceeds guard");
  return for_each_group_element(coxeter_realization(partition), kCoxeterOrderGuard, [](PackedPermutation) {});
}

/// Order of a packed permutation (lcm of its cycle lengths).
inline std::uint64_t element_order(PackedPermutation p, std::size_t points) {
  std::uint64_t order = 1;
  std::vector<bool> seen(points, false);
  for (std::size_t i = 0; i < points; ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = detail::packed_at(p, j)) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

}  // namespace shortlinks

#endif  // SHORTLINKS_SYMMETRY_HPP
