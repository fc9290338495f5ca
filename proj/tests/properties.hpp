#pragma once

#include "oracles.hpp"

#include "detinv/detinv.hpp"

#include <cstdint>
#include <algorithm>
#include <functional>
#include <ostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace props {

using namespace detinv;
using Rng = std::mt19937_64;

/// nullopt on success, otherwise a description of the counterexample.
using Property = std::function<std::optional<std::string>(Rng&)>;

struct Report {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  std::uint64_t seed = 0;
};

inline Report check(const std::string& name, const Property& prop, int cases, std::uint64_t seed) {
  Report r{name, cases, 0, {}, seed};
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    std::optional<std::string> bad;
    try {
      bad = prop(rng);
    } catch (const std::exception& e) {
      bad = std::string("exception: ") + e.what();
    }
    if (bad) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(i) + ": " + *bad;
    }
  }
  return r;
}

inline std::string show(const std::vector<Partition>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].str();
  return out + "}";
}

inline std::vector<Partition> random_family(Rng& rng, int n, int max_part, int max_count) {
  std::vector<Partition> xs;
  const int count = oracle::uniform(rng, 1, max_count);
  for (int i = 0; i < count; ++i) xs.push_back(oracle::random_partition(rng, n, max_part));
  return xs;
}

// Partitions.

inline std::optional<std::string> conjugate_involution(Rng& rng) {
  const auto x = oracle::random_partition(rng, 8, 9);
  const auto c = conjugate(x);
  if (!(conjugate(c) == x)) return "x'' != x for x=" + x.str();
  if (c.size() != x.size()) return "|x'| != |x| for x=" + x.str();
  if (static_cast<int>(c.length()) != x.first()) return "len(x') != x_1 for x=" + x.str();
  return std::nullopt;
}

inline std::optional<std::string> antichain_idempotence(Rng& rng) {
  const auto xs = random_family(rng, 4, 4, 6);
  const auto once = minimalize(xs);
  if (minimalize(once) != once) return "minimalize not idempotent on " + show(xs);
  if (!is_antichain(once)) return "result not an antichain for " + show(xs);
  auto sorted = once;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != oracle::minimal(xs)) return "differs from brute-force minimal elements for " + show(xs);
  if (!oracle::contains(once, xs) || !oracle::contains(xs, once)) return "ideal changed for " + show(xs);
  return std::nullopt;
}

inline std::optional<std::string> attach_identities(Rng& rng) {
  const int r = oracle::uniform(rng, 1, 5);
  const int s = oracle::uniform(rng, 1, 5);
  const auto a = oracle::random_partition(rng, r, 4);
  const auto b = oracle::random_partition(rng, 4, s);
  const auto lam = attach(r, s, a, b);
  std::ostringstream id;
  id << "r=" << r << " s=" << s << " a=" << a.str() << " b=" << b.str();
  if (lam.size() != r * s + a.size() + b.size()) return "size identity fails for " + id.str();
  if (!(conjugate(lam) == attach(s, r, conjugate(b), conjugate(a)))) return "conjugate identity fails for " + id.str();
  for (int i = 0; i < r; ++i)
    if (lam[static_cast<std::size_t>(i)] != s + a[static_cast<std::size_t>(i)]) return "row layout wrong for " + id.str();
  return std::nullopt;
}

// Gauss polynomials.

inline std::optional<std::string> qbinomial_checks(Rng& rng) {
  const int a = oracle::uniform(rng, 0, 14);
  const int b = oracle::uniform(rng, 0, a);
  const auto p = qbinomial(a, b);
  const std::string id = "a=" + std::to_string(a) + " b=" + std::to_string(b);
  if (p.evaluate(1) != binomial(a, b)) return "q=1 specialization fails for " + id;
  const int deg = b * (a - b);
  if (p.degree() != deg) return "degree != b(a-b) for " + id;
  for (int e = 0; e <= deg; ++e)
    if (p.coefficient(e) != p.coefficient(deg - e)) return "not palindromic for " + id;
  if (!(p == qbinomial(a, a - b))) return "[a,b] != [a,a-b] for " + id;
  const auto ref = oracle::qbinom_pascal(a, b);
  for (int e = 0; e <= deg; ++e)
    if (p.coefficient(e) != ref[static_cast<std::size_t>(e)]) return "differs from Pascal recursion for " + id;
  return std::nullopt;
}

// Schur dimensions.

inline std::optional<std::string> schur_invariance(Rng& rng) {
  const int N = oracle::uniform(rng, 1, 5);
  const auto w = oracle::random_weight(rng, N, -4, 4);
  const int k = oracle::uniform(rng, -5, 5);
  auto shifted = w;
  for (auto& v : shifted) v += k;
  const DominantWeight lam(w);
  const std::string id = lam.str() + " N=" + std::to_string(N);
  const BigInt d = dim_schur(lam, N);
  if (dim_schur(DominantWeight(shifted), N) != d) return "shift by det^k changes dim for " + id;
  if (dim_schur(dual_weight(lam), N) != d) return "dual weight changes dim for " + id;
  if (d != oracle::schur_dim(w)) return "differs from Gelfand-Tsetlin count for " + id;
  return std::nullopt;
}

inline std::optional<std::string> schur_ssyt_box(Rng& rng) {
  const auto x = oracle::random_partition(rng, 3, 3);
  const int N = oracle::uniform(rng, 1, 5);
  const std::string id = x.str() + " N=" + std::to_string(N);
  const BigInt d = dim_schur(x, N);
  if (d != ssyt_count(x, N)) return "Weyl formula != SSYT count for " + id;
  if (d != oracle::schur_dim(x, N)) return "Weyl formula != Gelfand-Tsetlin count for " + id;
  return std::nullopt;
}

// Z-sets.

inline std::optional<std::string> zset_monotone(Rng& rng) {
  const int n = oracle::uniform(rng, 1, 4);
  const int m = n + oracle::uniform(rng, 0, 2);
  const int p = oracle::uniform(rng, 1, n);
  const int d = oracle::uniform(rng, 2, 5);
  const MatrixContext ctx(m, n);
  const auto prev = zset(symbolic_power(ctx, p, d - 1));
  const auto cur = zset(symbolic_power(ctx, p, d));
  for (const auto& zp : prev)
    if (std::find(cur.begin(), cur.end(), zp) == cur.end())
      return "Z(X_p^(d-1)) not inside Z(X_p^(d)): " + zp.str() + " n=" + std::to_string(n) + " p=" + std::to_string(p) +
             " d=" + std::to_string(d);
  return std::nullopt;
}

// Ext.

/// A pair A containing B with small generators.
inline std::pair<InvariantIdeal, InvariantIdeal> random_nested(Rng& rng, const MatrixContext& ctx) {
  auto bs = random_family(rng, ctx.n, 3, 3);
  for (auto& x : bs)
    if (x.is_zero()) x = Partition{1};
  const auto b = make_ideal(ctx, bs);
  std::vector<Partition> as = b.gens();
  switch (oracle::uniform(rng, 0, 2)) {
    case 0:
      return {saturate(b, oracle::uniform(rng, 0, ctx.n)), b};
    case 1:
      for (auto& x : as) x = truncate_columns(x, std::max(1, x.first() - 1));
      return {make_ideal(ctx, as), b};
    default:
      as.push_back(oracle::random_partition(rng, ctx.n, 2));
      if (as.back().is_zero()) as.back() = Partition{2};
      return {make_ideal(ctx, as), b};
  }
}

inline std::optional<std::string> ext_map_additivity(Rng& rng) {
  const int n = oracle::uniform(rng, 1, 3);
  const MatrixContext ctx(n + oracle::uniform(rng, 0, 1), n);
  auto [a, b] = random_nested(rng, ctx);
  while (a.is_unit()) std::tie(a, b) = random_nested(rng, ctx);
  const int lo = -oracle::uniform(rng, 4, 12);
  const DegreeWindow w(lo, lo + oracle::uniform(rng, 0, 5));
  const auto r = ext_map_analysis(a, b, w);
  const std::string id = "A=" + show(a.gens()) + " B=" + show(b.gens()) + " m=" + std::to_string(ctx.m) +
                         " n=" + std::to_string(n);
  auto ker_img = r.kernel;
  ker_img.merge(r.image);
  if (!(ker_img == ext_quotient(a, w))) return "kernel + image != Ext(S/A) for " + id;
  auto img_cok = r.image;
  img_cok.merge(r.cokernel);
  if (!(img_cok == ext_quotient(b, w))) return "image + cokernel != Ext(S/B) for " + id;
  return std::nullopt;
}

inline ZPair random_zpair(Rng& rng, const MatrixContext& ctx) {
  const int l = oracle::uniform(rng, 0, ctx.n - 1);
  const int head = oracle::uniform(rng, 0, 3);
  std::vector<int> z(static_cast<std::size_t>(l + 1), head);
  for (int i = l + 1; i < ctx.n; ++i) z.push_back(oracle::uniform(rng, 0, z.back()));
  return ZPair(Partition(z), l);
}

inline std::optional<std::string> ext_min_degree_agrees(Rng& rng) {
  const int n = oracle::uniform(rng, 1, 3);
  const MatrixContext ctx(n + oracle::uniform(rng, 0, 2), n);
  const auto zp = random_zpair(rng, ctx);
  const auto js = ext_indices(ctx, zp);
  const std::string id = zp.str() + " m=" + std::to_string(ctx.m) + " n=" + std::to_string(n);
  // A window that reaches well below any possible summand: every entry is at least -(z_1 + m + n).
  const int floor = -n * (zp.z.first() + ctx.m + n) - 2;
  const int probe_j = js.empty() || oracle::uniform(rng, 0, 3) == 0 ? oracle::uniform(rng, 0, ctx.m * ctx.n)
                                                                     : js[static_cast<std::size_t>(oracle::uniform(rng, 0, int(js.size()) - 1))];
  const auto mind = ext_min_degree(ctx, zp, probe_j);
  const int top = mind ? *mind : floor + 20;
  const auto c = ext_jzl(ctx, zp, DegreeWindow(floor, top));
  std::optional<int> seen;
  for (const auto& t : c.terms(probe_j)) seen = seen ? std::min(*seen, t.degree) : t.degree;
  if (seen != mind)
    return "j=" + std::to_string(probe_j) + " min degree " + (mind ? std::to_string(*mind) : "none") + " but window shows " +
           (seen ? std::to_string(*seen) : "none") + " for " + id;
  const bool listed = std::find(js.begin(), js.end(), probe_j) != js.end();
  if (listed != mind.has_value()) return "ext_indices disagrees with ext_min_degree at j=" + std::to_string(probe_j) + " for " + id;
  return std::nullopt;
}

struct Named {
  const char* name;
  Property prop;
  friend void PrintTo(const Named& n, std::ostream* os) { *os << n.name; }
};

inline std::vector<Named> all() {
  return {
      {"conjugate involution", conjugate_involution},
      {"antichain idempotence", antichain_idempotence},
      {"attach size/conjugate identities", attach_identities},
      {"qbinomial q=1, symmetry, Pascal", qbinomial_checks},
      {"dim_schur shift/duality invariance", schur_invariance},
      {"dim_schur vs SSYT in 3x3 box", schur_ssyt_box},
      {"Z-set monotonicity of symbolic powers", zset_monotone},
      {"ext_map_analysis additivity", ext_map_additivity},
      {"ext_min_degree vs windowed enumeration", ext_min_degree_agrees},
  };
}

inline constexpr int kCases = 1000;
inline constexpr std::uint64_t kSeed = 0x5eed2026ULL;

}  // namespace props
