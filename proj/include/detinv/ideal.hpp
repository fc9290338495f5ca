#pragma once

#include "detinv/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace detinv {

/// Size of the generic matrix: S = C[X_ij], 1 <= i <= m, 1 <= j <= n, with m >= n >= 1.
struct MatrixContext {
  int m = 1;
  int n = 1;

  MatrixContext() = default;
  MatrixContext(int rows, int cols) : m(rows), n(cols) {
    if (n < 1 || m < n)
      throw std::invalid_argument("matrix context needs m >= n >= 1, got m=" + std::to_string(m) +
                                  " n=" + std::to_string(n));
  }

  friend bool operator==(const MatrixContext&, const MatrixContext&) = default;
};

/// GL-invariant ideal I_X, stored as the canonical antichain X of partitions with at most n parts.
/// gens = {(0)} is the unit ideal, gens = {} the zero ideal.
class InvariantIdeal {
 public:
  const MatrixContext& context() const { return ctx_; }
  const std::vector<Partition>& gens() const { return gens_; }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }
  bool is_zero() const { return gens_.empty(); }

  friend bool operator==(const InvariantIdeal&, const InvariantIdeal&) = default;

  /// Keeps only the minimal elements of xs.
  static InvariantIdeal from(const MatrixContext& ctx, std::vector<Partition> xs) {
    for (const auto& x : xs)
      if (x.length() > static_cast<std::size_t>(ctx.n))
        throw std::invalid_argument("partition " + x.str() + " has more than n=" + std::to_string(ctx.n) + " parts");
    return InvariantIdeal(ctx, minimalize(std::move(xs)));
  }

 private:
  InvariantIdeal(MatrixContext ctx, std::vector<Partition> gens) : ctx_(ctx), gens_(std::move(gens)) {}

  MatrixContext ctx_;
  std::vector<Partition> gens_;
};

/// I_X for an arbitrary finite X in P_n; only the minimal elements of X are kept.
inline InvariantIdeal make_ideal(const MatrixContext& ctx, std::vector<Partition> xs) {
  return InvariantIdeal::from(ctx, std::move(xs));
}

inline InvariantIdeal unit_ideal(const MatrixContext& ctx) { return make_ideal(ctx, {Partition{}}); }
inline InvariantIdeal zero_ideal(const MatrixContext& ctx) { return make_ideal(ctx, {}); }

/// True iff A contains B, i.e. every generator of B contains (as a diagram) some generator of A.
inline bool ideal_leq(const InvariantIdeal& a, const InvariantIdeal& b) {
  if (a.context() != b.context()) throw std::invalid_argument("ideals live in different matrix contexts");
  return std::all_of(b.gens().begin(), b.gens().end(), [&](const Partition& y) {
    return std::any_of(a.gens().begin(), a.gens().end(), [&](const Partition& x) { return leq(x, y); });
  });
}

namespace detail {
inline void check_minor_size(const MatrixContext& ctx, int p, int lo = 1) {
  if (p < lo || p > ctx.n)
    throw std::invalid_argument("minor size p=" + std::to_string(p) + " outside [" + std::to_string(lo) + "," +
                                std::to_string(ctx.n) + "]");
}
inline void check_power(int d) {
  if (d < 1) throw std::invalid_argument("power d must be positive, got " + std::to_string(d));
}
}  // namespace detail

/// I_p^d: X_p^d = {x in P_n : |x| = p*d, x_1 <= d}.
inline InvariantIdeal power_of_minors(const MatrixContext& ctx, int p, int d) {
  detail::check_minor_size(ctx, p);
  detail::check_power(d);
  std::vector<Partition> xs;
  for_each_partition_of_size(p * d, ctx.n, d, [&](Partition x) { xs.push_back(std::move(x)); });
  return make_ideal(ctx, std::move(xs));
}

/// I_p^(d): X_p^(d) = {x in P_n : x_1 = ... = x_p, x_p + ... + x_n = d}.
inline InvariantIdeal symbolic_power(const MatrixContext& ctx, int p, int d) {
  detail::check_minor_size(ctx, p);
  detail::check_power(d);
  std::vector<Partition> xs;
  const int tail_rows = ctx.n - p;
  for (int a = 1; a <= d; ++a) {
    for_each_partition_of_size(d - a, tail_rows, a, [&](const Partition& tail) {
      std::vector<int> parts(static_cast<std::size_t>(p), a);
      parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
      xs.emplace_back(std::move(parts));
    });
  }
  return make_ideal(ctx, std::move(xs));
}

/// (I_p^d)^sat: {x in P_n : d >= x_1 = x_2, x_2 + ... + x_n = (p-1)*d}.
inline InvariantIdeal saturated_power(const MatrixContext& ctx, int p, int d) {
  detail::check_minor_size(ctx, p);
  detail::check_power(d);
  const int target = (p - 1) * d;
  std::vector<Partition> xs;
  if (target == 0) return unit_ideal(ctx);
  for (int a = 1; a <= d; ++a) {
    for_each_partition_of_size(target - a, ctx.n - 2, a, [&](const Partition& tail) {
      std::vector<int> parts{a, a};
      parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
      xs.emplace_back(std::move(parts));
    });
  }
  return make_ideal(ctx, std::move(xs));
}

/// The partitions of X^{:p} before minimalization: each x is cut down to its columns of height > p.
inline std::vector<Partition> saturation_partitions(const std::vector<Partition>& xs, int p) {
  std::vector<Partition> out;
  out.reserve(xs.size());
  for (const auto& x : xs) {
    const Partition xc = conjugate(x);
    for (int c = 0; c <= x.first(); ++c) {
      const bool above = c == 0 || xc[static_cast<std::size_t>(c - 1)] > p;
      const bool below = xc[static_cast<std::size_t>(c)] <= p;
      if (above && below) {
        out.push_back(truncate_columns(x, c));
        break;
      }
    }
  }
  return out;
}

/// A : I_p^infinity. p = 0 saturates by the unit ideal and returns A.
inline InvariantIdeal saturate(const InvariantIdeal& a, int p) {
  detail::check_minor_size(a.context(), p, 0);
  return make_ideal(a.context(), saturation_partitions(a.gens(), p));
}

/// Minimal elements of succ(z,l) = {x in P_n : x >= z and x_i > z_i for some i > l}.
/// Found by scanning every x >= z in P_n with |x| <= |z| + n.
inline std::vector<Partition> succ_min(const MatrixContext& ctx, const Partition& z, int l) {
  if (z.length() > static_cast<std::size_t>(ctx.n))
    throw std::invalid_argument("succ_min: " + z.str() + " is not in P_n");
  if (l < 0 || l >= ctx.n) throw std::invalid_argument("succ_min: l=" + std::to_string(l) + " out of range");

  const auto n = static_cast<std::size_t>(ctx.n);
  const int budget = ctx.n;
  std::vector<Partition> found;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto& self, std::size_t row, int extra, bool grew_late) -> void {
    if (row == n) {
      if (grew_late) found.emplace_back(cur);
      return;
    }
    const int hi = row == 0 ? z[0] + budget : cur[row - 1];
    for (int v = z[row]; v <= hi && (v - z[row]) <= budget - extra; ++v) {
      cur[row] = v;
      self(self, row + 1, extra + v - z[row], grew_late || (row >= static_cast<std::size_t>(l) && v > z[row]));
    }
    cur[row] = 0;
  };
  rec(rec, 0, 0, false);
  return minimalize(std::move(found));
}

/// Degree of det_x, i.e. |x|.
inline int generator_degree(const Partition& x) { return x.size(); }

}  // namespace detinv
