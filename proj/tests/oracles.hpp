// Test-only oracles, kept independent of the library's solver paths:
// the four-square oracle walks a two-square witness table, and the
// sixteen-part oracle is a plain feasibility DP. Nothing here shares code
// with the constructions under test.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

/// Sum-of-two-squares witness table for 0..limit.
class TwoSquareTable {
 public:
  explicit TwoSquareTable(std::uint64_t limit) : limit_(limit), witness_(limit + 1, kNone) {
    for (std::uint64_t a = 0; a * a <= limit; ++a)
      for (std::uint64_t b = a; a * a + b * b <= limit; ++b)
        if (witness_[a * a + b * b] == kNone) witness_[a * a + b * b] = a;
  }

  std::optional<std::array<std::uint64_t, 2>> split(std::uint64_t n) const {
    if (n > limit_ || witness_[n] == kNone) return std::nullopt;
    const std::uint64_t a = witness_[n];
    std::uint64_t b = 0;
    while (b * b < n - a * a) ++b;
    return std::array<std::uint64_t, 2>{a, b};
  }

 private:
  static constexpr std::uint64_t kNone = ~0ULL;
  std::uint64_t limit_;
  std::vector<std::uint64_t> witness_;
};

/// Exhaustive four-square decomposition for small n via the table.
inline std::optional<std::array<std::uint64_t, 4>> four_square(std::uint64_t n,
                                                               const TwoSquareTable& table) {
  for (std::uint64_t a = 0; a * a <= n; ++a)
    for (std::uint64_t b = a; a * a + b * b <= n; ++b)
      if (auto cd = table.split(n - a * a - b * b))
        return std::array<std::uint64_t, 4>{a, b, (*cd)[0], (*cd)[1]};
  return std::nullopt;
}

/// Feasibility DP: can `slots` positive integers have sum `m` and sum of
/// squares `q`? Unordered, so plain recursion over the largest-first value
/// is not needed; memo on (slots, m, q).
class SixteenPartOracle {
 public:
  SixteenPartOracle(int slots, int max_sum, int max_sumsq)
      : slots_(slots), max_sum_(max_sum), max_sumsq_(max_sumsq),
        memo_((slots + 1) * (max_sum + 1) * (max_sumsq + 1), Tri::unknown) {}

  bool feasible(int slots, int m, int q) {
    if (m < 0 || q < 0) return false;
    if (slots == 0) return m == 0 && q == 0;
    if (m < slots || q < m) return false;
    if (m > max_sum_ || q > max_sumsq_) return false;
    Tri& slot = memo_[index(slots, m, q)];
    if (slot != Tri::unknown) return slot == Tri::yes;
    bool ok = false;
    for (int v = 1; !ok && v * v <= q; ++v) ok = feasible(slots - 1, m - v, q - v * v);
    slot = ok ? Tri::yes : Tri::no;
    return ok;
  }

 private:
  enum class Tri : unsigned char { unknown, yes, no };
  std::size_t index(int s, int m, int q) const {
    return (static_cast<std::size_t>(s) * (max_sum_ + 1) + m) * (max_sumsq_ + 1) + q;
  }
  int slots_, max_sum_, max_sumsq_;
  std::vector<Tri> memo_;
};

}  // namespace oracle
