#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace spgen {

/// Exact arbitrary-precision rational scalar.
///
/// Values are kept in canonical form at all times: the fraction is reduced
/// and the denominator is positive, so equality is structural and hashing or
/// printing never needs a normalization pass.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long value) : v_(value) {}  // implicit on purpose: integer literals
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
  explicit Rational(mpz_class value) : v_(std::move(value)) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses the serialized form "p/q" or "p" (decimal, sign on the numerator).
  static Rational parse(const std::string& text) {
    mpq_class q;
    try {
      q = mpq_class(text, 10);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed rational \"" + text + "\"");
    }
    if (sgn(q.get_den()) == 0)
      throw std::invalid_argument("malformed rational \"" + text + "\": zero denominator");
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

 private:
  mpq_class v_;
};

inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }

}  // namespace spgen
