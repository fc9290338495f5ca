#pragma once

#include "detinv/ideal.hpp"
#include "detinv/numeric.hpp"
#include "detinv/partition.hpp"
#include "detinv/qpolynomial.hpp"
#include "detinv/schur.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace detinv {

/// Equivariant Betti polynomial: the character indexed by homological degree i is Tor_i(I, C).
struct BettiPolynomial {
  EquivariantCharacter terms;

  EquivariantCharacter at(int i) const { return terms.at_index(i); }
  std::vector<int> indices() const { return terms.indices(); }

  friend bool operator==(const BettiPolynomial&, const BettiPolynomial&) = default;
};

/// h_{r x s}(q) = sum over a in the min(r,s) x (n-r) box and b in the (m-r) x min(r,s) box of
/// S_{lambda(r,s;a,b)}C^m (x) S_{lambda(r,s;b',a')}C^n q^{|a|+|b|}, in degree rs + |a| + |b|.
/// The index of each term is its power of q.
inline EquivariantCharacter h_rect(const MatrixContext& ctx, int r, int s) {
  if (r < 1 || r > ctx.n) throw std::invalid_argument("h_rect: r=" + std::to_string(r) + " outside [1,n]");
  if (s < 1) throw std::invalid_argument("h_rect: s must be positive");
  const int k = std::min(r, s);
  const auto m = static_cast<std::size_t>(ctx.m);
  const auto n = static_cast<std::size_t>(ctx.n);
  EquivariantCharacter out;
  for (const auto& a : enumerate_in_box(k, ctx.n - r)) {
    for (const auto& b : enumerate_in_box(ctx.m - r, k)) {
      const Partition left = attach(r, s, a, b);
      const Partition right = attach(r, s, conjugate(b), conjugate(a));
      const int q_exp = a.size() + b.size();
      out.add(q_exp, IrredTerm{DominantWeight::from_partition(left, m), DominantWeight::from_partition(right, n),
                               r * s + q_exp, 1});
    }
  }
  return out;
}

/// B_{I_{a x b}}(q) = sum_{t=0}^{n-a} h_{(a+t)x(b+t)}(q) q^{t^2+2t} [t+min(a,b)-1 choose t]_{q^2}.
inline BettiPolynomial betti_polynomial(const MatrixContext& ctx, int a, int b) {
  if (a < 1 || a > ctx.n) throw std::invalid_argument("betti_polynomial: a=" + std::to_string(a) + " outside [1,n]");
  if (b < 1) throw std::invalid_argument("betti_polynomial: b must be positive");
  BettiPolynomial out;
  for (int t = 0; t <= ctx.n - a; ++t) {
    const EquivariantCharacter h = h_rect(ctx, a + t, b + t);
    const QPolynomial weights = qbinomial(t + std::min(a, b) - 1, t).in_power(2);
    for (const auto& [e, mult] : weights.coefficients()) out.terms.merge(h, t * t + 2 * t + e, mult);
  }
  return out;
}

/// beta_{i,d} = dim Tor_i(I, C)_d.
struct BettiTable {
  std::map<std::pair<int, int>, BigInt> entries;

  BigInt beta(int i, int degree) const {
    auto it = entries.find({i, degree});
    return it == entries.end() ? BigInt(0) : it->second;
  }

  int max_index() const {
    int out = -1;
    for (const auto& [key, v] : entries) out = std::max(out, key.first);
    return out;
  }

  std::vector<BigInt> totals() const {
    std::vector<BigInt> out(static_cast<std::size_t>(max_index() + 1), 0);
    for (const auto& [key, v] : entries) out[static_cast<std::size_t>(key.first)] += v;
    return out;
  }

  /// "i,degree,beta" lines, sorted by (i, degree).
  std::string csv() const {
    std::ostringstream os;
    os << "i,degree,beta\n";
    for (const auto& [key, v] : entries) os << key.first << ',' << key.second << ',' << v << '\n';
    return os.str();
  }

  /// Macaulay2-style layout: beta_{i,i+j} in row j, column i, with "." for zero.
  std::string pretty() const {
    if (entries.empty()) return "(empty)\n";
    int row_lo = std::numeric_limits<int>::max();
    int row_hi = std::numeric_limits<int>::min();
    for (const auto& [key, v] : entries) {
      row_lo = std::min(row_lo, key.second - key.first);
      row_hi = std::max(row_hi, key.second - key.first);
    }
    const int cols = max_index() + 1;
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{""};
    for (int i = 0; i < cols; ++i) header.push_back(std::to_string(i));
    cells.push_back(header);
    std::vector<std::string> total{"total:"};
    for (const auto& v : totals()) total.push_back(v.str());
    cells.push_back(total);
    for (int j = row_lo; j <= row_hi; ++j) {
      std::vector<std::string> row{std::to_string(j) + ":"};
      for (int i = 0; i < cols; ++i) {
        const BigInt v = beta(i, i + j);
        row.push_back(v == 0 ? "." : v.str());
      }
      cells.push_back(row);
    }
    std::vector<std::size_t> width(static_cast<std::size_t>(cols + 1), 0);
    for (const auto& row : cells)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) os << ' ';
        os << std::setw(static_cast<int>(width[c])) << row[c];
      }
      os << '\n';
    }
    return os.str();
  }
};

inline BettiTable betti_table(const BettiPolynomial& bp, const MatrixContext& ctx) {
  BettiTable out;
  for (const auto& [key, mult] : bp.terms.entries()) {
    BigInt dim = dim_term(IrredTerm{key.wm, key.wn, key.degree, mult}, ctx.m, ctx.n);
    if (dim != 0) out.entries[{key.index, key.degree}] += dim;
  }
  return out;
}

}  // namespace detinv
