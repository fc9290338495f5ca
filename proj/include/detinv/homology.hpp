#pragma once

#include "detinv/ideal.hpp"
#include "detinv/parallel.hpp"
#include "detinv/partition.hpp"
#include "detinv/schur.hpp"
#include "detinv/weights.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace detinv {

/// Raised when a pair produced by the Z-set construction violates z_1 = ... = z_{l+1}.
class HypothesisViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Index (z, l) of the subquotient J_{z,l} = I_z / I_{succ(z,l)}, whose annihilator is I_{l+1}.
struct ZPair {
  Partition z;
  int l = 0;

  ZPair() = default;
  ZPair(Partition zz, int ll) : z(std::move(zz)), l(ll) {
    if (l < 0) throw std::invalid_argument("ZPair: negative l");
    for (int i = 1; i <= l; ++i)
      if (z[static_cast<std::size_t>(i)] != z[0])
        throw HypothesisViolation("ZPair (" + z.str() + "," + std::to_string(l) + ") violates z_1 = ... = z_{l+1}");
  }

  std::string str() const { return "(" + z.str() + "," + std::to_string(l) + ")"; }

  friend bool operator==(const ZPair&, const ZPair&) = default;
  friend auto operator<=>(const ZPair& a, const ZPair& b) {
    if (auto c = a.l <=> b.l; c != 0) return c;
    return a.z <=> b.z;
  }
};

/// Canonical listing order: l descending, then z descending.
inline void sort_zpairs(std::vector<ZPair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), std::greater<>{});
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

namespace detail {

inline void check_zpair(const MatrixContext& ctx, const ZPair& zp) {
  if (zp.l >= ctx.n) throw std::invalid_argument("ZPair " + zp.str() + ": l must be < n");
  if (zp.z.length() > static_cast<std::size_t>(ctx.n))
    throw std::invalid_argument("ZPair " + zp.str() + ": z is not in P_n");
}

/// Partitions in P_n with first part exactly c.
template <typename Fn>
void for_each_with_first_part(int n, int c, Fn&& fn) {
  if (c == 0) {
    fn(Partition{});
    return;
  }
  for (int k = 0; k <= (n - 1) * c; ++k) {
    for_each_partition_of_size(k, n - 1, c, [&](const Partition& tail) {
      std::vector<int> parts{c};
      parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
      fn(Partition(std::move(parts)));
    });
  }
}

}  // namespace detail

/// Z(X) for an arbitrary finite X in P_n. (z,l) belongs to Z(X) when, with c = z_1,
///  (1) some x in X has x(c) <= z and x'_{c+1} <= l+1, and
///  (2) every x in X satisfying (1) has x'_{c+1} = l+1.
/// Only c < max x_1 can satisfy (2), which bounds the search.
inline std::vector<ZPair> zset_of(const MatrixContext& ctx, const std::vector<Partition>& xs) {
  int max_first = 0;
  for (const auto& x : xs) max_first = std::max(max_first, x.first());
  std::vector<Partition> conj;
  conj.reserve(xs.size());
  for (const auto& x : xs) conj.push_back(conjugate(x));

  std::vector<ZPair> out;
  for (int c = 0; c < max_first; ++c) {
    detail::for_each_with_first_part(ctx.n, c, [&](const Partition& z) {
      for (int l = 0; l < ctx.n; ++l) {
        bool exists = false;
        bool all_equal = true;
        for (std::size_t k = 0; k < xs.size(); ++k) {
          const int height = conj[k][static_cast<std::size_t>(c)];
          if (!leq(truncate_columns(xs[k], c), z) || height > l + 1) continue;
          exists = true;
          if (height != l + 1) all_equal = false;
        }
        if (!exists || !all_equal) continue;
        try {
          out.emplace_back(z, l);
        } catch (const HypothesisViolation& e) {
          std::ostringstream dump;
          dump << e.what() << "; X = {";
          for (std::size_t k = 0; k < xs.size(); ++k) dump << (k ? ", " : "") << xs[k];
          dump << "}, c = " << c;
          throw HypothesisViolation(dump.str());
        }
      }
    });
  }
  sort_zpairs(out);
  return out;
}

inline std::vector<ZPair> zset(const InvariantIdeal& a) { return zset_of(a.context(), a.gens()); }

/// Z(X_p^d) in closed form: 0 <= l <= p-1, z_1 = ... = z_{l+1} <= d-1 and
/// |z| + (d - z_1) l + 1 <= p d <= |z| + (d - z_1)(l + 1).
inline std::vector<ZPair> zset_power_closed(const MatrixContext& ctx, int p, int d) {
  detail::check_minor_size(ctx, p);
  detail::check_power(d);
  std::vector<ZPair> out;
  for (const auto& z : enumerate_in_box(ctx.n, d - 1)) {
    const int z1 = z.first();
    for (int l = 0; l <= p - 1; ++l) {
      bool flat = true;
      for (int i = 1; i <= l; ++i) flat = flat && z[static_cast<std::size_t>(i)] == z1;
      if (!flat) continue;
      const int size = z.size();
      if (size + (d - z1) * l + 1 <= p * d && p * d <= size + (d - z1) * (l + 1)) out.emplace_back(z, l);
    }
  }
  sort_zpairs(out);
  return out;
}

/// M(I) as the index set of the modules J_{z,l}.
inline std::vector<ZPair> modules_of(const InvariantIdeal& a) { return zset(a); }

/// Z(X^{:p}) = {(z,l) in Z(X) : l >= p}.
inline std::vector<ZPair> saturation_filter(const std::vector<ZPair>& pairs, int p) {
  std::vector<ZPair> out;
  std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out), [&](const ZPair& zp) { return zp.l >= p; });
  return out;
}

/// One summand S_{lam(s)}C^m (x) S_lam C^n of Ext^j(J_{z,l}, S).
struct ExtComponent {
  int s = 0;
  std::vector<int> t;
  int j = 0;
  DominantWeight lam;
  DominantWeight lam_s;
  int degree = 0;
};

namespace detail {

/// Calls fn(s, t) for every 0 <= s <= t_1 <= ... <= t_{n-l} <= l.
template <typename Fn>
void for_each_st(int n, int l, Fn&& fn) {
  const auto len = static_cast<std::size_t>(n - l);
  std::vector<int> t(len, 0);
  for (int s = 0; s <= l; ++s) {
    auto rec = [&](auto& self, std::size_t i, int lo) -> void {
      if (i == len) {
        fn(s, static_cast<const std::vector<int>&>(t));
        return;
      }
      for (int v = lo; v <= l; ++v) {
        t[i] = v;
        self(self, i + 1, v);
      }
    };
    rec(rec, 0, s);
  }
}

inline int ext_index(const MatrixContext& ctx, int l, int s, const std::vector<int>& t) {
  int sum_t = 0;
  for (int v : t) sum_t += v;
  return ctx.m * ctx.n - l * l - s * (ctx.m - ctx.n) - 2 * sum_t;
}

/// Constraints cutting out W(z,l;t,s). Returns nullopt when two fixed entries collide.
/// lambda_n is pinned to l - z_{l+1} - m (equal to l - z_l - m whenever l >= 1).
inline std::optional<WeightBounds> ext_weight_bounds(const MatrixContext& ctx, const ZPair& zp, int s,
                                                     const std::vector<int>& t) {
  const int n = ctx.n;
  const int m = ctx.m;
  const int l = zp.l;
  WeightBounds b(static_cast<std::size_t>(n));
  std::vector<std::optional<int>> fixed(static_cast<std::size_t>(n));
  auto pin = [&](int pos1, int value) {
    auto& slot = fixed[static_cast<std::size_t>(pos1 - 1)];
    if (slot && *slot != value) return false;
    slot = value;
    return true;
  };
  if (!pin(n, l - zp.z[static_cast<std::size_t>(l)] - m)) return std::nullopt;
  for (int i = 1; i <= n - l; ++i) {
    const int ti = t[static_cast<std::size_t>(i - 1)];
    if (!pin(ti + i, ti - zp.z[static_cast<std::size_t>(n - i)] - m)) return std::nullopt;
  }
  for (int k = 1; k <= n; ++k) {
    const auto pos = static_cast<std::size_t>(k - 1);
    if (fixed[pos]) b.fix(pos, *fixed[pos]);
    if (k <= s) b.at_least(pos, s - n);
    if (k >= s + 1) b.at_most(pos, s - m);
  }
  return b;
}

}  // namespace detail

/// Every summand of Ext^*(J_{z,l}, S) with internal degree in `w`, over all (s, t).
inline std::vector<ExtComponent> ext_components(const MatrixContext& ctx, const ZPair& zp, const DegreeWindow& w) {
  detail::check_zpair(ctx, zp);
  std::vector<ExtComponent> out;
  detail::for_each_st(ctx.n, zp.l, [&](int s, const std::vector<int>& t) {
    auto bounds = detail::ext_weight_bounds(ctx, zp, s, t);
    if (!bounds) return;
    const int j = detail::ext_index(ctx, zp.l, s, t);
    for_each_dominant_weight(*bounds, w, [&](const DominantWeight& lam) {
      out.push_back(ExtComponent{s, t, j, lam, lambda_of_s(lam, s, ctx.m), lam.degree()});
    });
  });
  return out;
}

/// Windowed GL-character of Ext^*(J_{z,l}, S), indexed by j.
inline EquivariantCharacter ext_jzl(const MatrixContext& ctx, const ZPair& zp, const DegreeWindow& w) {
  EquivariantCharacter out;
  for (const auto& c : ext_components(ctx, zp, w)) out.add(c.j, IrredTerm{c.lam_s, c.lam, c.degree, 1});
  return out;
}

namespace detail {
inline EquivariantCharacter ext_sum(const MatrixContext& ctx, const std::vector<ZPair>& pairs, const DegreeWindow& w) {
  auto parts = parallel_map(pairs, [&](const ZPair& zp) { return ext_jzl(ctx, zp, w); });
  EquivariantCharacter out;
  for (const auto& part : parts) out.merge(part);
  return out;
}
}  // namespace detail

/// Windowed character of Ext^*(S/I, S) as the direct sum over M(I).
inline EquivariantCharacter ext_quotient(const InvariantIdeal& a, const DegreeWindow& w) {
  if (a.is_zero()) throw std::invalid_argument("ext_quotient: S/0 = S is not supported; pass a nonzero ideal");
  return detail::ext_sum(a.context(), zset(a), w);
}

struct ExtMapAnalysis {
  EquivariantCharacter kernel;
  EquivariantCharacter image;
  EquivariantCharacter cokernel;
};

/// Kernel, image and cokernel of Ext^*(S/A, S) -> Ext^*(S/B, S) for A containing B.
inline ExtMapAnalysis ext_map_analysis(const InvariantIdeal& a, const InvariantIdeal& b, const DegreeWindow& w) {
  if (!ideal_leq(a, b)) throw std::invalid_argument("ext_map_analysis: the first ideal does not contain the second");
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("ext_map_analysis: zero ideal");
  const auto za = zset(a);
  const auto zb = zset(b);
  std::vector<ZPair> ker, img, cok;
  auto contains = [](const std::vector<ZPair>& v, const ZPair& p) { return std::find(v.begin(), v.end(), p) != v.end(); };
  for (const auto& p : za) (contains(zb, p) ? img : ker).push_back(p);
  for (const auto& p : zb)
    if (!contains(za, p)) cok.push_back(p);
  const auto& ctx = a.context();
  return ExtMapAnalysis{detail::ext_sum(ctx, ker, w), detail::ext_sum(ctx, img, w), detail::ext_sum(ctx, cok, w)};
}

namespace detail {

/// Least |lambda| over W(z,l;t,s), or nullopt if empty. Each entry takes its least admissible
/// value, scanning from lambda_n upwards.
inline std::optional<int> min_weight_degree(const MatrixContext& ctx, const ZPair& zp, int s, const std::vector<int>& t) {
  auto bounds = ext_weight_bounds(ctx, zp, s, t);
  if (!bounds) return std::nullopt;
  const std::size_t n = bounds->length();
  std::optional<int> below;
  int total = 0;
  for (std::size_t k = n; k-- > 0;) {
    std::optional<int> lo = bounds->lower[k];
    if (below) lo = lo ? std::max(*lo, *below) : *below;
    // lambda_n is always pinned, so lo is set from here on.
    const int v = *lo;
    if (bounds->upper[k] && v > *bounds->upper[k]) return std::nullopt;
    total += v;
    below = v;
  }
  return total;
}

}  // namespace detail

/// Cohomological degrees j at which Ext^j(J_{z,l}, S) is nonzero.
inline std::vector<int> ext_indices(const MatrixContext& ctx, const ZPair& zp) {
  detail::check_zpair(ctx, zp);
  std::vector<int> out;
  detail::for_each_st(ctx.n, zp.l, [&](int s, const std::vector<int>& t) {
    if (detail::min_weight_degree(ctx, zp, s, t)) out.push_back(detail::ext_index(ctx, zp.l, s, t));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Least internal degree of a nonzero component of Ext^j(J_{z,l}, S); nullopt if Ext^j = 0.
inline std::optional<int> ext_min_degree(const MatrixContext& ctx, const ZPair& zp, int j) {
  detail::check_zpair(ctx, zp);
  std::optional<int> best;
  detail::for_each_st(ctx.n, zp.l, [&](int s, const std::vector<int>& t) {
    if (detail::ext_index(ctx, zp.l, s, t) != j) return;
    if (auto d = detail::min_weight_degree(ctx, zp, s, t)) best = best ? std::min(*best, *d) : *d;
  });
  return best;
}

/// reg(S/I) = max_j (-mindeg Ext^j(S/I, S) - j), maximized over the modules of M(I).
inline int quotient_regularity(const InvariantIdeal& a) {
  if (a.is_zero() || a.is_unit()) throw std::invalid_argument("regularity needs a proper nonzero ideal");
  const auto& ctx = a.context();
  std::optional<int> best;
  for (const auto& zp : zset(a)) {
    for (int j : ext_indices(ctx, zp)) {
      const int value = -*ext_min_degree(ctx, zp, j) - j;
      best = best ? std::max(*best, value) : value;
    }
  }
  if (!best) throw std::logic_error("regularity: no nonvanishing Ext module for a proper ideal");
  return *best;
}

/// Castelnuovo-Mumford regularity of the ideal, reg(I) = reg(S/I) + 1.
inline int regularity(const InvariantIdeal& a) { return quotient_regularity(a) + 1; }

}  // namespace detinv
