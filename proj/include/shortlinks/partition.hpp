#ifndef SHORTLINKS_PARTITION_HPP
#define SHORTLINKS_PARTITION_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "shortlinks/common.hpp"

namespace shortlinks {

/// Ordered partition (P_1, ..., P_t) of {1, ..., m}. The complex K(P) built
/// from it has dimension n = m - 1.
class Partition {
 public:
  using Part = std::vector<int>;

  Partition() = default;

  explicit Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    std::vector<int> all;
    for (auto& p : parts_) {
      if (p.empty()) throw InputError("partition: empty part");
      std::sort(p.begin(), p.end());
      all.insert(all.end(), p.begin(), p.end());
    }
    std::sort(all.begin(), all.end());
    if (all.empty()) throw InputError("partition: no elements");
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i] != static_cast<int>(i + 1))
        throw InputError("partition: parts must be disjoint and cover 1..m");
  }

  /// Parses "1,2|3,4,5". Whitespace around tokens is ignored.
  static Partition parse(std::string_view text) {
    std::vector<Part> parts(1);
    std::string token;
    auto flush = [&] {
      auto b = token.find_first_not_of(" \t");
      if (b == std::string::npos) {
        token.clear();
        return false;
      }
      auto e = token.find_last_not_of(" \t");
      std::string t = token.substr(b, e - b + 1);
      token.clear();
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(t, &used);
      } catch (const std::exception&) {
        throw InputError("partition: bad element '" + t + "'");
      }
      if (used != t.size() || value <= 0) throw InputError("partition: bad element '" + t + "'");
      parts.back().push_back(value);
      return true;
    };
    for (char c : text) {
      if (c == ',') {
        if (!flush()) throw InputError("partition: empty element in '" + std::string(text) + "'");
      } else if (c == '|') {
        if (!flush()) throw InputError("partition: empty element in '" + std::string(text) + "'");
        parts.emplace_back();
      } else {
        token.push_back(c);
      }
    }
    if (!flush()) throw InputError("partition: empty element in '" + std::string(text) + "'");
    return Partition(std::move(parts));
  }

  /// Inverse of parse for the stored part order.
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (j) os << '|';
      for (std::size_t k = 0; k < parts_[j].size(); ++k) os << (k ? "," : "") << parts_[j][k];
    }
    return os.str();
  }

  /// Same partition with parts ordered by (size, smallest element).
  Partition canonical() const {
    Partition c = *this;
    std::sort(c.parts_.begin(), c.parts_.end(), [](const Part& a, const Part& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.front() < b.front();
    });
    return c;
  }

  const std::vector<Part>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }
  int ground_size() const {
    int m = 0;
    for (const auto& p : parts_) m += static_cast<int>(p.size());
    return m;
  }
  int dimension() const { return ground_size() - 1; }
  std::size_t singleton_count() const {
    return static_cast<std::size_t>(
        std::count_if(parts_.begin(), parts_.end(), [](const Part& p) { return p.size() == 1; }));
  }

  /// Part sizes in ascending order; two partitions are equivalent under a
  /// permutation of 1..m iff these agree.
  std::vector<int> size_profile() const {
    std::vector<int> s;
    for (const auto& p : parts_) s.push_back(static_cast<int>(p.size()));
    std::sort(s.begin(), s.end());
    return s;
  }

  /// m_u: number of parts of each size u.
  std::map<int, int> size_multiplicities() const {
    std::map<int, int> m;
    for (const auto& p : parts_) ++m[static_cast<int>(p.size())];
    return m;
  }

  /// 0-based index of the part containing element i.
  std::size_t part_of(int element) const {
    for (std::size_t j = 0; j < parts_.size(); ++j)
      if (std::binary_search(parts_[j].begin(), parts_[j].end(), element)) return j;
    throw InputError("partition: element " + std::to_string(element) + " not covered");
  }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<Part> parts_;
};

/// One representative per partition of {1..m} up to permutation: parts in
/// ascending size filled with consecutive elements, ordered by part count and
/// then lexicographically by size list. Count is the partition number p(m).
inline std::vector<Partition> enumerate_partitions(int m) {
  if (m < 1) throw InputError("enumerate_partitions: m must be positive");
  std::vector<std::vector<int>> size_lists;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      size_lists.push_back(current);
      return;
    }
    for (int s = min_part; s <= remaining; ++s) {
      current.push_back(s);
      self(self, remaining - s, s);
      current.pop_back();
    }
  };
  rec(rec, m, 1);
  std::stable_sort(size_lists.begin(), size_lists.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  std::vector<Partition> out;
  for (const auto& sizes : size_lists) {
    std::vector<Partition::Part> parts;
    int next = 1;
    for (int s : sizes) {
      Partition::Part p;
      for (int k = 0; k < s; ++k) p.push_back(next++);
      parts.push_back(std::move(p));
    }
    out.emplace_back(std::move(parts));
  }
  return out;
}

}  // namespace shortlinks

#endif  // SHORTLINKS_PARTITION_HPP
