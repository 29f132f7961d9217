#ifndef SHORTLINKS_EXACT_SIMPLEX_HPP
#define SHORTLINKS_EXACT_SIMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shortlinks/common.hpp"

namespace shortlinks {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

struct IntegerOverflow {};

/// Integer operations for the tableau: checked 64-bit, or unbounded.
template <class Int>
struct TableauOps;

template <>
struct TableauOps<std::int64_t> {
  using Wide = __int128;
  static std::int64_t narrow(Wide w) {
    if (w > std::numeric_limits<std::int64_t>::max() || w < std::numeric_limits<std::int64_t>::min())
      throw IntegerOverflow{};
    return static_cast<std::int64_t>(w);
  }
  // (a * p - b * q) / d, exact.
  static std::int64_t update(std::int64_t a, std::int64_t p, std::int64_t b, std::int64_t q, std::int64_t d) {
    return narrow((Wide{a} * p - Wide{b} * q) / d);
  }
  // sign of a * q - b * p
  static int compare_ratio(std::int64_t a, std::int64_t p, std::int64_t b, std::int64_t q) {
    Wide l = Wide{a} * q, r = Wide{b} * p;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  static std::int64_t from(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      throw IntegerOverflow{};
    return v.convert_to<std::int64_t>();
  }
  static BigInt to_big(std::int64_t v) { return BigInt(v); }
};

template <>
struct TableauOps<BigInt> {
  static BigInt update(const BigInt& a, const BigInt& p, const BigInt& b, const BigInt& q, const BigInt& d) {
    return (a * p - b * q) / d;
  }
  static int compare_ratio(const BigInt& a, const BigInt& p, const BigInt& b, const BigInt& q) {
    BigInt l = a * q, r = b * p;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  static BigInt from(const BigInt& v) { return v; }
  static BigInt to_big(const BigInt& v) { return v; }
};

struct Phase1Outcome {
  std::optional<std::vector<Rational>> solution;
  std::vector<Rational> duals;  // y with y^T A <= 0, y^T b > 0 when infeasible
  std::size_t pivots = 0;
};

/// Integer-preserving tableau: the true tableau is T / denom, where denom is
/// the last pivot element, and every update divides exactly. Rows have
/// nonnegative right-hand sides; column n + i is the artificial of row i.
template <class Int>
Phase1Outcome integer_phase1(const std::vector<std::vector<BigInt>>& rows, const std::vector<BigInt>& rhs) {
  using Ops = TableauOps<Int>;
  const std::size_t m = rows.size();
  const std::size_t n = m ? rows.front().size() : 0;
  const std::size_t width = n + m + 1;
  const std::size_t rhs_col = width - 1;
  std::vector<Int> t(m * width, Int(0));
  std::vector<Int> cost(width, Int(0));
  std::vector<std::size_t> basis(m);
  Int denom(1);
  auto at = [&](std::size_t i, std::size_t j) -> Int& { return t[i * width + j]; };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = Ops::from(rows[i][j]);
    at(i, n + i) = Int(1);
    at(i, rhs_col) = Ops::from(rhs[i]);
    basis[i] = n + i;
    // Phase-1 objective: sum of artificials, priced out against the basis.
    for (std::size_t j = 0; j < n; ++j) cost[j] = Ops::update(cost[j], Int(1), at(i, j), Int(1), Int(1));
    cost[rhs_col] = Ops::update(cost[rhs_col], Int(1), at(i, rhs_col), Int(1), Int(1));
  }

  Phase1Outcome out;
  while (true) {
    // Bland: lowest-index column with negative reduced cost.
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs_col; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    // Minimum ratio, ties to the lowest basic index.
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (at(i, enter) <= 0) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      int c = Ops::compare_ratio(at(i, rhs_col), at(i, enter), at(leave, rhs_col), at(leave, enter));
      if (c < 0 || (c == 0 && basis[i] < basis[leave])) leave = i;
    }
    // Phase 1 is bounded below by zero, so some row always qualifies.
    if (leave == m) throw std::logic_error("simplex: unbounded phase-1 objective");

    const Int p = at(leave, enter);
    auto eliminate = [&](auto&& row_at) {
      const Int q = row_at(enter);
      for (std::size_t j = 0; j < width; ++j) {
        Int& a = row_at(j);
        if (q == 0 && a == 0) continue;
        a = Ops::update(a, p, at(leave, j), q, denom);
      }
    };
    for (std::size_t i = 0; i < m; ++i)
      if (i != leave) eliminate([&](std::size_t j) -> Int& { return at(i, j); });
    eliminate([&](std::size_t j) -> Int& { return cost[j]; });
    denom = p;
    basis[leave] = enter;
    ++out.pivots;
  }

  const BigInt d = Ops::to_big(denom);
  if (cost[rhs_col] != 0) {
    // Artificial reduced cost is 1 - y_i.
    out.duals.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.duals[i] = Rational(1) - Rational(Ops::to_big(cost[n + i]), d);
    return out;
  }
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = Rational(Ops::to_big(at(i, rhs_col)), d);
  out.solution = std::move(x);
  return out;
}

}  // namespace detail

/// Feasibility of { x >= 0 : A x = b } over the rationals by the phase-1
/// simplex method with one artificial per row and Bland's rule for both the
/// entering and the leaving variable. Arithmetic is exact: each row is scaled
/// to integers and the tableau is kept fraction-free, in 64-bit words while
/// the entries fit and in unbounded integers otherwise.
class Phase1Simplex {
 public:
  /// `rows` holds A row by row; every row has the same length.
  Phase1Simplex(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& rhs) {
    if (rhs.size() != rows.size()) throw InputError("simplex: rhs size differs from row count");
    const std::size_t n = rows.empty() ? 0 : rows.front().size();
    rows_.resize(rows.size());
    rhs_.resize(rows.size());
    scale_.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != n) throw InputError("simplex: ragged constraint matrix");
      BigInt s = boost::multiprecision::denominator(rhs[i]);
      for (const auto& a : rows[i]) s = boost::multiprecision::lcm(s, boost::multiprecision::denominator(a));
      if (rhs[i] < 0) s = -s;  // keep the right-hand side nonnegative
      scale_[i] = s;
      rows_[i].reserve(n);
      for (const auto& a : rows[i]) rows_[i].push_back(boost::multiprecision::numerator(Rational(a * s)));
      rhs_[i] = boost::multiprecision::numerator(Rational(rhs[i] * s));
    }
  }

  /// A nonnegative solution, or nullopt when the system is infeasible.
  std::optional<std::vector<Rational>> solve() {
    try {
      outcome_ = detail::integer_phase1<std::int64_t>(rows_, rhs_);
    } catch (const detail::IntegerOverflow&) {
      outcome_ = detail::integer_phase1<BigInt>(rows_, rhs_);
      unbounded_ = true;
    }
    solved_ = true;
    return outcome_.solution;
  }

  /// After solve() reported infeasibility: y with y^T A <= 0 componentwise
  /// and y^T b > 0.
  std::vector<Rational> farkas_certificate() const {
    if (!solved_ || outcome_.solution) throw std::logic_error("simplex: no infeasibility certificate available");
    std::vector<Rational> y(outcome_.duals.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = outcome_.duals[i] * Rational(scale_[i]);
    return y;
  }

  std::size_t pivot_count() const { return outcome_.pivots; }
  /// Whether the 64-bit tableau overflowed and the solve was redone.
  bool used_unbounded_integers() const { return unbounded_; }

 private:
  std::vector<std::vector<BigInt>> rows_;
  std::vector<BigInt> rhs_;
  std::vector<BigInt> scale_;
  detail::Phase1Outcome outcome_;
  bool solved_ = false;
  bool unbounded_ = false;
};

}  // namespace shortlinks

#endif  // SHORTLINKS_EXACT_SIMPLEX_HPP
