#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace detinv {

/// A partition x = (x_1 >= x_2 >= ... >= 0), stored without trailing zeros.
/// The empty sequence is the zero partition.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part: " + str_of(parts_));
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts are not weakly decreasing: " + str_of(parts_));
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  /// Rectangle (cols^rows).
  static Partition rectangle(int rows, int cols) {
    if (rows <= 0 || cols <= 0) return {};
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
  }

  const std::vector<int>& parts() const { return parts_; }
  /// 0-based part access; parts past the end read as 0.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// Number of nonzero parts.
  std::size_t length() const { return parts_.size(); }
  bool is_zero() const { return parts_.empty(); }
  int first() const { return (*this)[0]; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Parts padded with zeros to exactly `len` entries (len >= length()).
  std::vector<int> padded(std::size_t len) const {
    if (len < parts_.size()) throw std::invalid_argument("cannot pad " + str() + " to length " + std::to_string(len));
    std::vector<int> out = parts_;
    out.resize(len, 0);
    return out;
  }

  std::string str() const { return str_of(parts_); }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Total order (lexicographic on parts) for use as a container key; unrelated to containment.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  friend std::ostream& operator<<(std::ostream& os, const Partition& x) { return os << x.str(); }

 private:
  static std::string str_of(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    if (v.empty()) os << '0';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
  }

  std::vector<int> parts_;
};

/// Weakly decreasing integer vector of fixed length; entries may be negative.
class DominantWeight {
 public:
  DominantWeight() = default;
  DominantWeight(std::initializer_list<int> e) : DominantWeight(std::vector<int>(e)) {}
  explicit DominantWeight(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i)
      if (entries_[i] > entries_[i - 1]) throw std::invalid_argument("weight is not dominant: " + str());
  }
  /// Partition padded with zeros to length N.
  static DominantWeight from_partition(const Partition& x, std::size_t N) { return DominantWeight(x.padded(N)); }

  const std::vector<int>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_.at(i); }
  int degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
    os << ')';
    return os.str();
  }

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight& a, const DominantWeight& b) { return a.entries_ <=> b.entries_; }
  friend std::ostream& operator<<(std::ostream& os, const DominantWeight& w) { return os << w.str(); }

 private:
  std::vector<int> entries_;
};

/// x'_i = #{j : x_j >= i}.
inline Partition conjugate(const Partition& x) {
  std::vector<int> out(static_cast<std::size_t>(x.first()), 0);
  for (int part : x.parts())
    for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

/// Containment of Young diagrams: x_i <= y_i for all i.
inline bool leq(const Partition& x, const Partition& y) {
  if (x.length() > y.length()) return false;
  for (std::size_t i = 0; i < x.length(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

inline bool comparable(const Partition& x, const Partition& y) { return leq(x, y) || leq(y, x); }

/// x(c)_i = min(x_i, c): the first c columns of x.
inline Partition truncate_columns(const Partition& x, int c) {
  std::vector<int> out;
  out.reserve(x.length());
  for (int part : x.parts()) out.push_back(std::min(part, std::max(c, 0)));
  return Partition(std::move(out));
}

/// Sorts into the canonical antichain order (descending lexicographic) and removes duplicates.
inline void sort_canonical(std::vector<Partition>& xs) {
  std::sort(xs.begin(), xs.end(), std::greater<>{});
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

/// Minimal elements of `xs` under containment, in canonical order.
inline std::vector<Partition> minimalize(std::vector<Partition> xs) {
  sort_canonical(xs);
  std::vector<Partition> out;
  for (const auto& x : xs) {
    bool minimal = std::none_of(xs.begin(), xs.end(), [&](const Partition& y) { return y != x && leq(y, x); });
    if (minimal) out.push_back(x);
  }
  return out;
}

inline bool is_antichain(std::span<const Partition> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (comparable(xs[i], xs[j])) return false;
  return true;
}

/// Calls `fn` for each partition of `size` with at most `rows` parts each at most `cols`,
/// in descending lexicographic order.
template <typename Fn>
void for_each_partition_of_size(int size, int rows, int cols, Fn&& fn) {
  if (size < 0 || rows < 0 || cols < 0) return;
  std::vector<int> cur;
  cur.reserve(static_cast<std::size_t>(rows));
  auto rec = [&](auto& self, int remaining, int max_part, int rows_left) -> void {
    if (remaining == 0) {
      fn(Partition(cur));
      return;
    }
    if (rows_left == 0 || static_cast<long long>(max_part) * rows_left < remaining) return;
    for (int v = std::min(max_part, remaining); v >= 1; --v) {
      cur.push_back(v);
      self(self, remaining - v, v, rows_left - 1);
      cur.pop_back();
    }
  };
  rec(rec, size, cols, rows);
}

/// All partitions inside the rows x cols box, graded by size, descending lexicographic within a size.
inline std::vector<Partition> enumerate_in_box(int rows, int cols) {
  std::vector<Partition> out;
  if (rows < 0 || cols < 0) return out;
  for (int k = 0; k <= rows * cols; ++k)
    for_each_partition_of_size(k, rows, cols, [&](Partition x) { out.push_back(std::move(x)); });
  return out;
}

/// lambda(r,s;a,b) = (s+a_1, ..., s+a_r, b_1, b_2, ...): an r x s rectangle with a glued
/// to its right and b below it.
inline Partition attach(int r, int s, const Partition& a, const Partition& b) {
  if (r <= 0 || s <= 0) throw std::invalid_argument("attach needs positive r and s");
  if (a.length() > static_cast<std::size_t>(r))
    throw std::invalid_argument("attach: " + a.str() + " has more than " + std::to_string(r) + " parts");
  if (b.first() > s) throw std::invalid_argument("attach: " + b.str() + " has a part larger than " + std::to_string(s));
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(r) + b.length());
  for (int i = 0; i < r; ++i) out.push_back(s + a[static_cast<std::size_t>(i)]);
  for (int part : b.parts()) out.push_back(part);
  return Partition(std::move(out));
}

/// lambda^vee = (-lambda_N, ..., -lambda_1).
inline DominantWeight dual_weight(const DominantWeight& w) {
  std::vector<int> out(w.entries().rbegin(), w.entries().rend());
  for (int& v : out) v = -v;
  return DominantWeight(std::move(out));
}

}  // namespace detinv
