#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spgen/rational.hpp"

namespace spgen {

/// Dense univariate polynomial over Rational, coefficients stored lowest
/// degree first. Canonical form has no trailing zero coefficients; the zero
/// polynomial is the empty list.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(Rational a) { return Poly({std::move(a)}); }
  /// a * x^k
  static Poly monomial(std::size_t k, Rational a = Rational(1)) {
    std::vector<Rational> c(k + 1);
    c[k] = std::move(a);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
  const Rational& leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Rational eval(const Rational& x) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) throw std::domain_error("monic form of zero polynomial");
    return *this * leading().inv();
  }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(Poly a, const Rational& s) {
    for (auto& v : a.c_) v *= s;
    a.trim();
    return a;
  }
  friend Poly operator*(const Rational& s, Poly a) { return std::move(a) * s; }

  /// Euclidean division over Q: num = quo * den + rem with deg rem < deg den.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    if (num.c_.size() < den.c_.size()) return {Poly(), num};
    std::vector<Rational> rem = num.c_;
    std::vector<Rational> quo(num.c_.size() - den.c_.size() + 1);
    const Rational lead_inv = den.leading().inv();
    for (std::size_t k = quo.size(); k-- > 0;) {
      Rational f = rem[k + den.c_.size() - 1] * lead_inv;
      if (f.is_zero()) continue;
      quo[k] = f;
      for (std::size_t i = 0; i < den.c_.size(); ++i) rem[k + i] -= f * den.c_[i];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = p.c_.size(); i-- > 0;) {
      if (p.c_[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0 || !(p.c_[i] == Rational(1))) os << p.c_[i];
      if (i >= 1) os << (i == 1 ? "x" : "x^") << (i == 1 ? "" : std::to_string(i));
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic greatest common divisor by the Euclidean algorithm. Each remainder
/// is normalized to monic form to keep coefficient growth in check.
inline Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd undefined");
  Poly a = p, b = q;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = r.is_zero() ? Poly() : r.monic();
  }
  return a.monic();
}

/// The m-th cyclotomic polynomial, computed by dividing x^m - 1 by Phi_d for
/// every proper divisor d of m.
inline Poly cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
  std::map<unsigned, Poly> phi;
  for (unsigned k = 1; k <= m; ++k) {
    if (m % k != 0) continue;
    Poly num = Poly::monomial(k) - Poly::constant(Rational(1));  // x^k - 1
    for (const auto& [d, pd] : phi)
      if (k % d == 0) num = num / pd;
    phi.emplace(k, std::move(num));
  }
  return phi.at(m);
}

}  // namespace spgen
