#pragma once

#include "detinv/numeric.hpp"
#include "detinv/partition.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace detinv {

/// Dimension of the irreducible GL_N representation S_lambda C^N (Weyl dimension formula).
inline BigInt dim_schur(const DominantWeight& lambda, int N) {
  if (N <= 0 || lambda.length() != static_cast<std::size_t>(N))
    throw std::invalid_argument("dim_schur: weight " + lambda.str() + " does not have length " + std::to_string(N));
  BigRational acc = 1;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      acc *= BigRational(lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i, j - i);
  if (boost::multiprecision::denominator(acc) != 1)
    throw std::logic_error("dim_schur: non-integral Weyl product for " + lambda.str());
  return boost::multiprecision::numerator(acc);
}

/// Zero when x has more than N parts: the functor kills C^N.
inline BigInt dim_schur(const Partition& x, int N) {
  if (x.length() > static_cast<std::size_t>(N)) return 0;
  return dim_schur(DominantWeight::from_partition(x, static_cast<std::size_t>(N)), N);
}

/// Number of semistandard Young tableaux of shape x with entries in 1..N, by direct filling.
inline BigInt ssyt_count(const Partition& x, int N) {
  if (N <= 0) throw std::invalid_argument("ssyt_count needs N >= 1");
  if (x.length() > static_cast<std::size_t>(N)) return 0;
  const auto& rows = x.parts();
  std::vector<std::vector<int>> grid(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) grid[r].assign(static_cast<std::size_t>(rows[r]), 0);

  BigInt count = 0;
  auto fill = [&](auto& self, std::size_t r, std::size_t c) -> void {
    if (r == rows.size()) {
      ++count;
      return;
    }
    if (c == grid[r].size()) {
      self(self, r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[r][c - 1]);
    if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
    for (int v = lo; v <= N; ++v) {
      grid[r][c] = v;
      self(self, r, c + 1);
    }
  };
  fill(fill, 0, 0);
  return count;
}

/// One isotypic piece S_wm C^m (x) S_wn C^n sitting in internal degree `degree`.
struct IrredTerm {
  DominantWeight wm;
  DominantWeight wn;
  int degree = 0;
  BigInt multiplicity = 1;

  friend bool operator==(const IrredTerm&, const IrredTerm&) = default;
};

inline BigInt dim_term(const IrredTerm& t, int m, int n) {
  return t.multiplicity * dim_schur(t.wm, m) * dim_schur(t.wn, n);
}

/// Finite multiset of irreducible terms, each tagged with an integer index (the homological
/// degree j, or the power of q). Iteration order is index, then degree, then wm, then wn.
class EquivariantCharacter {
 public:
  struct Key {
    int index;
    int degree;
    DominantWeight wm;
    DominantWeight wn;

    friend bool operator==(const Key&, const Key&) = default;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  void add(int index, const IrredTerm& t) {
    if (t.degree != t.wn.degree())
      throw std::logic_error("term degree " + std::to_string(t.degree) + " does not match |" + t.wn.str() + "|");
    if (t.multiplicity < 0) throw std::invalid_argument("negative multiplicity");
    if (t.multiplicity == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key{index, t.degree, t.wm, t.wn}, t.multiplicity);
    if (!inserted) it->second += t.multiplicity;
  }

  /// Adds every term of `o`, with indices shifted by `index_shift` and multiplicities scaled.
  void merge(const EquivariantCharacter& o, int index_shift = 0, const BigInt& scale = 1) {
    for (const auto& [k, mult] : o.terms_) add(k.index + index_shift, IrredTerm{k.wm, k.wn, k.degree, mult * scale});
  }

  const std::map<Key, BigInt>& entries() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (const auto& [k, mult] : terms_)
      if (out.empty() || out.back() != k.index) out.push_back(k.index);
    return out;
  }

  std::vector<IrredTerm> terms(int index) const {
    std::vector<IrredTerm> out;
    for (const auto& [k, mult] : terms_)
      if (k.index == index) out.push_back(IrredTerm{k.wm, k.wn, k.degree, mult});
    return out;
  }

  EquivariantCharacter at_index(int index) const {
    EquivariantCharacter out;
    for (const auto& [k, mult] : terms_)
      if (k.index == index) out.terms_.emplace(k, mult);
    return out;
  }

  /// Total dimension of the terms with the given index and degree.
  BigInt dimension(int index, int degree, int m, int n) const {
    BigInt total = 0;
    for (const auto& [k, mult] : terms_)
      if (k.index == index && k.degree == degree) total += dim_term(IrredTerm{k.wm, k.wn, k.degree, mult}, m, n);
    return total;
  }

  /// Total dimension over everything.
  BigInt dimension(int m, int n) const {
    BigInt total = 0;
    for (const auto& [k, mult] : terms_) total += dim_term(IrredTerm{k.wm, k.wn, k.degree, mult}, m, n);
    return total;
  }

  friend bool operator==(const EquivariantCharacter&, const EquivariantCharacter&) = default;

 private:
  std::map<Key, BigInt> terms_;
};

}  // namespace detinv
