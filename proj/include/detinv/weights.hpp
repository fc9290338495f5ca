#pragma once

#include "detinv/partition.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace detinv {

/// Closed interval of internal degrees. Every Ext / D_s character query is restricted to one.
struct DegreeWindow {
  int lo = 0;
  int hi = 0;

  DegreeWindow() = default;
  DegreeWindow(int low, int high) : lo(low), hi(high) {
    if (lo > hi) throw std::invalid_argument("empty degree window [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
  bool contains(int d) const { return lo <= d && d <= hi; }

  friend bool operator==(const DegreeWindow&, const DegreeWindow&) = default;
};

/// Per-position bounds on a weight (lambda_1 >= ... >= lambda_N). nullopt means unbounded.
struct WeightBounds {
  std::vector<std::optional<int>> lower;
  std::vector<std::optional<int>> upper;

  explicit WeightBounds(std::size_t len) : lower(len), upper(len) {}

  std::size_t length() const { return lower.size(); }

  void at_least(std::size_t pos, int v) { lower[pos] = lower[pos] ? std::max(*lower[pos], v) : v; }
  void at_most(std::size_t pos, int v) { upper[pos] = upper[pos] ? std::min(*upper[pos], v) : v; }
  void fix(std::size_t pos, int v) {
    at_least(pos, v);
    at_most(pos, v);
  }
};

namespace detail {

inline void propagate_dominance(WeightBounds& b) {
  const std::size_t len = b.length();
  for (std::size_t k = len; k-- > 1;)
    if (b.lower[k]) b.at_least(k - 1, *b.lower[k]);
  for (std::size_t k = 1; k < len; ++k)
    if (b.upper[k - 1]) b.at_most(k, *b.upper[k - 1]);
}

/// Uses the degree window to close open ends: an entry is bounded below once all the others are
/// bounded above, and vice versa.
inline void propagate_window(WeightBounds& b, const DegreeWindow& w) {
  const std::size_t len = b.length();
  for (std::size_t k = 0; k < len; ++k) {
    long long sum_upper = 0;
    long long sum_lower = 0;
    bool others_upper = true;
    bool others_lower = true;
    for (std::size_t i = 0; i < len; ++i) {
      if (i == k) continue;
      if (b.upper[i]) sum_upper += *b.upper[i]; else others_upper = false;
      if (b.lower[i]) sum_lower += *b.lower[i]; else others_lower = false;
    }
    if (others_upper) b.at_least(k, static_cast<int>(w.lo - sum_upper));
    if (others_lower) b.at_most(k, static_cast<int>(w.hi - sum_lower));
  }
}

}  // namespace detail

/// Calls fn(DominantWeight) for every dominant weight within `bounds` whose degree lies in `w`.
/// Throws if the bounds and window do not cut out a finite set.
template <typename Fn>
void for_each_dominant_weight(WeightBounds bounds, const DegreeWindow& w, Fn&& fn) {
  const std::size_t len = bounds.length();
  if (len == 0) {
    if (w.contains(0)) fn(DominantWeight{});
    return;
  }
  for (int round = 0; round < 3; ++round) {
    detail::propagate_dominance(bounds);
    detail::propagate_window(bounds, w);
  }
  detail::propagate_dominance(bounds);
  for (std::size_t k = 0; k < len; ++k) {
    if (!bounds.lower[k] || !bounds.upper[k])
      throw std::invalid_argument("weight enumeration is unbounded at position " + std::to_string(k + 1) +
                                  "; supply a tighter window or entry bound");
    if (*bounds.lower[k] > *bounds.upper[k]) return;
  }

  std::vector<long long> rest_min(len + 1, 0);
  for (std::size_t k = len; k-- > 0;) rest_min[k] = rest_min[k + 1] + *bounds.lower[k];

  std::vector<int> cur(len, 0);
  auto rec = [&](auto& self, std::size_t k, long long partial) -> void {
    if (k == len) {
      if (w.contains(static_cast<int>(partial))) fn(DominantWeight(cur));
      return;
    }
    const int lo = *bounds.lower[k];
    const int hi = k == 0 ? *bounds.upper[k] : std::min(*bounds.upper[k], cur[k - 1]);
    for (int v = lo; v <= hi; ++v) {
      if (partial + v + rest_min[k + 1] > w.hi) break;
      long long rest_max = 0;
      for (std::size_t i = k + 1; i < len; ++i) rest_max += std::min(*bounds.upper[i], v);
      if (partial + v + rest_max < w.lo) continue;
      cur[k] = v;
      self(self, k + 1, partial + v);
    }
  };
  rec(rec, 0, 0);
}

/// lambda(s) = (lambda_1..lambda_s, (s-n)^{m-n}, lambda_{s+1}+(m-n), ..., lambda_n+(m-n)) in Z^m.
inline DominantWeight lambda_of_s(const DominantWeight& lambda, int s, int m) {
  const int n = static_cast<int>(lambda.length());
  if (s < 0 || s > n || m < n) throw std::invalid_argument("lambda(s): bad s or m");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < s; ++i) out.push_back(lambda[static_cast<std::size_t>(i)]);
  for (int i = 0; i < m - n; ++i) out.push_back(s - n);
  for (int i = s; i < n; ++i) out.push_back(lambda[static_cast<std::size_t>(i)] + (m - n));
  return DominantWeight(std::move(out));
}

}  // namespace detinv
