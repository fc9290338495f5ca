#pragma once

#include "detinv/numeric.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace detinv {

/// Exact polynomial in q with integer coefficients. Zero coefficients are never stored.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(BigInt constant) { set(0, std::move(constant)); }  // NOLINT(google-explicit-constructor)
  QPolynomial(int constant) : QPolynomial(BigInt(constant)) {}    // NOLINT(google-explicit-constructor)

  static QPolynomial monomial(int exponent, BigInt coeff = 1) {
    QPolynomial p;
    p.set(exponent, std::move(coeff));
    return p;
  }

  const std::map<int, BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  int low_degree() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first; }

  void add_term(int exponent, const BigInt& coeff) {
    if (exponent < 0) throw std::invalid_argument("negative exponent in QPolynomial");
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial out;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

  /// Multiplication by q^k.
  QPolynomial shifted(int k) const {
    QPolynomial out;
    for (const auto& [e, c] : coeffs_) out.add_term(e + k, c);
    return out;
  }

  /// Substitution q -> q^k.
  QPolynomial in_power(int k) const {
    if (k <= 0) throw std::invalid_argument("q -> q^k needs k >= 1");
    QPolynomial out;
    for (const auto& [e, c] : coeffs_) out.add_term(e * k, c);
    return out;
  }

  BigInt evaluate(const BigInt& q) const {
    BigInt acc = 0;
    for (int e = degree(); e >= 0; --e) acc = acc * q + coefficient(e);
    return acc;
  }

  /// Exact quotient; throws if `divisor` does not divide this polynomial over Z.
  QPolynomial divided_by(const QPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    const int dd = divisor.degree();
    const BigInt& lead = divisor.coeffs_.rbegin()->second;
    QPolynomial rem = *this;
    QPolynomial quot;
    while (!rem.is_zero() && rem.degree() >= dd) {
      const int shift = rem.degree() - dd;
      const BigInt& top = rem.coeffs_.rbegin()->second;
      if (top % lead != 0) throw std::domain_error("inexact polynomial division");
      QPolynomial step = monomial(shift, top / lead);
      quot += step;
      rem -= step * divisor;
    }
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return quot;
  }

  /// Human form, e.g. "1 + q + 2q^2 + q^3 + q^4".
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << mag;
        continue;
      }
      if (mag != 1) os << mag;
      os << 'q';
      if (e != 1) os << '^' << e;
    }
    return os.str();
  }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;
  friend std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.str(); }

 private:
  void set(int exponent, BigInt coeff) {
    if (coeff != 0) coeffs_[exponent] = std::move(coeff);
  }

  std::map<int, BigInt> coeffs_;
};

/// Gauss polynomial [a choose b]_q, computed as the exact quotient
/// prod_{i<b}(1 - q^{a-i}) / prod_{i<=b}(1 - q^i). Zero when b > a.
inline QPolynomial qbinomial(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("qbinomial needs nonnegative arguments");
  if (b > a) return {};
  if (b > a - b) b = a - b;
  QPolynomial num = 1;
  QPolynomial den = 1;
  for (int i = 0; i < b; ++i) {
    num *= QPolynomial(1) - QPolynomial::monomial(a - i);
    den *= QPolynomial(1) - QPolynomial::monomial(i + 1);
  }
  return num.divided_by(den);
}

}  // namespace detinv
