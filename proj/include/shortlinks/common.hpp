#ifndef SHORTLINKS_COMMON_HPP
#define SHORTLINKS_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shortlinks {

/// Vertex label of a complex. Positive; need not be contiguous.
using VertexId = int;

/// Malformed input or a violated precondition. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force routine was asked to work on an instance above its size
/// guard. The CLI maps it to exit code 3.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace detail {

inline std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace detail
}  // namespace shortlinks

#endif  // SHORTLINKS_COMMON_HPP
