#pragma once

#include "detinv/ideal.hpp"
#include "detinv/numeric.hpp"
#include "detinv/qpolynomial.hpp"
#include "detinv/schur.hpp"
#include "detinv/weights.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace detinv {

/// Composition-factor multiplicities of H^j_{I_p}(S): rows[j][s] = multiplicity of D_s.
struct LCTable {
  MatrixContext ctx;
  int p = 1;
  std::map<int, std::map<int, BigInt>> rows;

  BigInt multiplicity(int j, int s) const {
    auto r = rows.find(j);
    if (r == rows.end()) return 0;
    auto c = r->second.find(s);
    return c == r->second.end() ? BigInt(0) : c->second;
  }
};

/// Expands sum_{s<p} D_s q^{(n-p+1)^2 + (n-s)(m-n)} [n-s-1 choose p-1-s]_{q^2}.
inline LCTable lc_table(const MatrixContext& ctx, int p) {
  detail::check_minor_size(ctx, p);
  LCTable out{ctx, p, {}};
  const int n = ctx.n;
  const int m = ctx.m;
  for (int s = 0; s < p; ++s) {
    const int shift = (n - p + 1) * (n - p + 1) + (n - s) * (m - n);
    const QPolynomial series = qbinomial(n - s - 1, p - 1 - s).in_power(2).shifted(shift);
    for (const auto& [j, mult] : series.coefficients()) out.rows[j][s] += mult;
  }
  return out;
}

/// Least and greatest j with H^j_{I_p}(S) != 0.
inline std::pair<int, int> lc_support(const MatrixContext& ctx, int p) {
  const auto table = lc_table(ctx, p);
  return {table.rows.begin()->first, table.rows.rbegin()->first};
}

/// Windowed character of D_s: dominant lambda in Z^n with lambda_s >= s-n and lambda_{s+1} <= s-m,
/// each giving S_{lambda(s)}C^m (x) S_lambda C^n in degree |lambda|.
///
/// D_0 is bounded above (by -mn) and D_n below (by 0), so a window alone is enough for those.
/// For 0 < s < n a single degree already carries infinitely many weights, and `entry_bound`
/// (|lambda_i| <= bound) is required.
inline EquivariantCharacter ds_character(const MatrixContext& ctx, int s, const DegreeWindow& w,
                                         std::optional<int> entry_bound = std::nullopt) {
  const int n = ctx.n;
  const int m = ctx.m;
  if (s < 0 || s > n) throw std::invalid_argument("ds_character: s=" + std::to_string(s) + " out of range");
  if (s > 0 && s < n && !entry_bound)
    throw std::invalid_argument("ds_character: D_" + std::to_string(s) +
                                " has infinite-dimensional graded pieces; an entry bound is required");
  if (entry_bound && *entry_bound < 0) throw std::invalid_argument("ds_character: negative entry bound");
  WeightBounds b(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const auto pos = static_cast<std::size_t>(k - 1);
    if (k <= s) b.at_least(pos, s - n);
    if (k >= s + 1) b.at_most(pos, s - m);
    if (entry_bound) {
      b.at_least(pos, -*entry_bound);
      b.at_most(pos, *entry_bound);
    }
  }
  EquivariantCharacter out;
  for_each_dominant_weight(b, w, [&](const DominantWeight& lam) {
    out.add(0, IrredTerm{lambda_of_s(lam, s, m), lam, lam.degree(), 1});
  });
  return out;
}

/// Largest degree occurring in D_s when it is bounded above (s = 0: -mn); nullopt otherwise.
inline std::optional<int> ds_top_degree(const MatrixContext& ctx, int s) {
  if (s == 0) return -ctx.m * ctx.n;
  return std::nullopt;
}

}  // namespace detinv
