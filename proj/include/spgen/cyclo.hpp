#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "spgen/poly.hpp"

namespace spgen {

/// The cyclotomic field Q(xi_m), realized as Q[x]/Phi_m(x) with x mapped to
/// a primitive m-th root of unity.
class CycloField {
 public:
  /// Shared handle for order m; instances are memoized so elements of the
  /// same order share one modulus.
  static std::shared_ptr<const CycloField> of(unsigned m) {
    if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[m];
    if (!slot) slot = std::shared_ptr<const CycloField>(new CycloField(m));
    return slot;
  }

  unsigned order() const { return m_; }
  const Poly& modulus() const { return modulus_; }
  /// Extension degree phi(m) = deg Phi_m.
  std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }

 private:
  explicit CycloField(unsigned m) : m_(m), modulus_(cyclotomic_polynomial(m)) {}
  unsigned m_;
  Poly modulus_;
};

using CycloFieldPtr = std::shared_ptr<const CycloField>;

/// Element of Q(xi_m): a polynomial residue of degree < phi(m). The order m
/// is fixed at construction; combining elements of different orders is an
/// error, not an implicit embedding.
class CycloElement {
 public:
  CycloElement(CycloFieldPtr field, Poly residue)
      : field_(checked(std::move(field))), residue_(std::move(residue)) {
    if (residue_.degree() >= static_cast<long>(field_->degree())) residue_ = residue_ % field_->modulus();
  }

  static CycloElement zero(CycloFieldPtr field) { return CycloElement(std::move(field), Poly()); }
  static CycloElement one(CycloFieldPtr field) {
    return CycloElement(std::move(field), Poly::constant(Rational(1)));
  }
  /// xi itself (reduced, so for m <= 2 this is the rational value +-1).
  static CycloElement generator(CycloFieldPtr field) {
    return CycloElement(std::move(field), Poly::monomial(1));
  }
  static CycloElement from_rational(CycloFieldPtr field, Rational a) {
    return CycloElement(std::move(field), Poly::constant(std::move(a)));
  }

  unsigned order() const { return field_->order(); }
  const CycloFieldPtr& field() const { return field_; }
  const Poly& residue() const { return residue_; }
  bool is_zero() const { return residue_.is_zero(); }

  CycloElement& operator+=(const CycloElement& o) {
    require_same_order(o);
    residue_ += o.residue_;
    return *this;
  }
  CycloElement& operator-=(const CycloElement& o) {
    require_same_order(o);
    residue_ -= o.residue_;
    return *this;
  }
  CycloElement& operator*=(const CycloElement& o) {
    require_same_order(o);
    residue_ = (residue_ * o.residue_) % field_->modulus();
    return *this;
  }

  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(CycloElement a, const CycloElement& b) { return a *= b; }
  CycloElement operator-() const { return CycloElement(field_, -residue_); }

  CycloElement pow(unsigned long e) const {
    CycloElement acc = one(field_);
    CycloElement base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) acc *= base;
      base *= base;
    }
    return acc;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm of the
  /// residue against Phi_m.
  CycloElement inv() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    // u*residue + v*Phi_m = g, with g a nonzero constant since Phi_m is
    // irreducible over Q and deg residue < deg Phi_m.
    Poly r0 = residue_, r1 = field_->modulus();
    Poly u0 = Poly::constant(Rational(1)), u1;
    while (!r1.is_zero()) {
      auto [q, r] = Poly::divmod(r0, r1);
      r0 = std::exchange(r1, std::move(r));
      u0 = std::exchange(u1, u0 - q * u1);
    }
    if (r0.degree() != 0) throw std::logic_error("cyclotomic modulus is not irreducible");
    return CycloElement(field_, (u0 * r0.leading().inv()) % field_->modulus());
  }

  friend bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.order() == b.order() && a.residue_ == b.residue_;
  }

  friend std::ostream& operator<<(std::ostream& os, const CycloElement& a) {
    return os << "(" << a.residue_ << " : m=" << a.order() << ")";
  }

 private:
  static CycloFieldPtr checked(CycloFieldPtr f) {
    if (!f) throw std::invalid_argument("null cyclotomic field");
    return f;
  }
  void require_same_order(const CycloElement& o) const {
    if (order() != o.order()) throw std::invalid_argument("mixing cyclotomic orders");
  }

  CycloFieldPtr field_;
  Poly residue_;
};

inline CycloElement cyclo_inv(const CycloElement& a) { return a.inv(); }

inline CycloElement zero_like(const CycloElement& a) { return CycloElement::zero(a.field()); }
inline CycloElement one_like(const CycloElement& a) { return CycloElement::one(a.field()); }

}  // namespace spgen
