#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spgen/poly.hpp"
#include "spgen/rational.hpp"

namespace spgen {

/// Dense row-major matrix over a single exact scalar kind (Rational or
/// CycloElement). Dimensions are fixed at construction and positive.
template <typename S>
class Mat {
 public:
  Mat(std::size_t rows, std::size_t cols, const S& fill)
      : rows_(rows), cols_(cols), e_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
  }

  static Mat zero(std::size_t rows, std::size_t cols)
    requires std::is_default_constructible_v<S>
  {
    return Mat(rows, cols, S());
  }
  static Mat identity(std::size_t n, const S& one) {
    Mat m(n, n, zero_like(one));
    for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = one;
    return m;
  }
  static Mat identity(std::size_t n)
    requires std::is_same_v<S, Rational>
  {
    return identity(n, Rational(1));
  }
  /// Matrix unit with a single 1 at (i, j), zero-based.
  static Mat unit(std::size_t n, std::size_t i, std::size_t j)
    requires std::is_same_v<S, Rational>
  {
    Mat m = zero(n, n);
    m.at(i, j) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& at(std::size_t i, std::size_t j) {
    check_index(i, j);
    return e_[i * cols_ + j];
  }
  const S& at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return e_[i * cols_ + j];
  }
  const std::vector<S>& entries() const { return e_; }

  bool is_zero() const {
    for (const S& v : e_)
      if (!v.is_zero()) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_, e_.front());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.e_[j * rows_ + i] = e_[i * cols_ + j];
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(e_[a * cols_ + j], e_[b * cols_ + j]);
  }

  Mat& operator+=(const Mat& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  Mat operator-() const {
    Mat m = *this;
    for (S& v : m.e_) v = -v;
    return m;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Mat out(a.rows_, b.cols_, zero_like(a.e_.front()));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& f = a.e_[i * a.cols_ + k];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& g = b.e_[k * b.cols_ + j];
          if (!g.is_zero()) out.e_[i * b.cols_ + j] += f * g;
        }
      }
    return out;
  }
  friend Mat operator*(const S& s, Mat a) {
    for (S& v : a.e_) v = s * v;
    return a;
  }
  friend Mat operator*(Mat a, const S& s) {
    for (S& v : a.e_) v = v * s;
    return a;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << "[";
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (j) os << " ";
        os << m.e_[i * m.cols_ + j];
      }
      os << "]";
      if (i + 1 < m.rows_) os << "\n";
    }
    return os;
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  }
  void require_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<S> e_;
};

template <typename S>
S trace(const Mat<S>& a) {
  if (!a.is_square()) throw std::invalid_argument("trace requires a square matrix");
  S t = zero_like(a.at(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i) t += a.at(i, i);
  return t;
}

/// Lie bracket ab - ba.
template <typename S>
Mat<S> commutator(const Mat<S>& a, const Mat<S>& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("commutator requires square matrices of equal size");
  return a * b - b * a;
}

/// Exact rank by Bareiss fraction-free elimination on an integer-scaled copy
/// of the matrix (each row multiplied by the lcm of its denominators).
inline std::size_t rank(const Mat<Rational>& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < cols; ++j) scale = lcm(scale, a.at(i, j).denominator());
    for (std::size_t j = 0; j < cols; ++j)
      m[i][j] = a.at(i, j).numerator() * (scale / a.at(i, j).denominator());
  }

  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

/// Monic characteristic polynomial det(xI - a) by the Faddeev-LeVerrier
/// recurrence; all divisions are by integers, so the computation is exact.
inline Poly charpoly(const Mat<Rational>& a) {
  if (!a.is_square()) throw std::invalid_argument("charpoly requires a square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  Mat<Rational> m = Mat<Rational>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    const Rational ck = -(trace(m) / Rational(static_cast<long>(k)));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) += ck;
  }
  return Poly(std::move(c));
}

/// Exact inverse by Gauss-Jordan elimination over the scalar field.
template <typename S>
Mat<S> mat_inv(const Mat<S>& a) {
  if (!a.is_square()) throw std::invalid_argument("matrix inverse requires a square matrix");
  const std::size_t n = a.rows();
  const S one = one_like(a.at(0, 0));
  Mat<S> w = a;
  Mat<S> inv = Mat<S>::identity(n, one);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w.at(p, c).is_zero()) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    w.swap_rows(c, p);
    inv.swap_rows(c, p);
    const S piv = w.at(c, c).inv();
    for (std::size_t j = 0; j < n; ++j) {
      w.at(c, j) = piv * w.at(c, j);
      inv.at(c, j) = piv * inv.at(c, j);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || w.at(r, c).is_zero()) continue;
      const S f = w.at(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        w.at(r, j) -= f * w.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

/// True iff x^size = 0; for elements of sp in the defining representation
/// this coincides with Lie-algebra nilpotency.
inline bool is_nilpotent(const Mat<Rational>& x) {
  if (!x.is_square()) throw std::invalid_argument("nilpotency test requires a square matrix");
  Mat<Rational> p = x;
  for (std::size_t j = 1; j < x.rows() && !p.is_zero(); ++j) p = p * x;
  return p.is_zero();
}

/// exp(z) = sum z^j / j! for nilpotent z; the sum is finite and exact.
inline Mat<Rational> exp_nilpotent(const Mat<Rational>& z) {
  if (!z.is_square()) throw std::invalid_argument("exp_nilpotent requires a square matrix");
  const std::size_t n = z.rows();
  Mat<Rational> sum = Mat<Rational>::identity(n);
  Mat<Rational> pw = Mat<Rational>::identity(n);
  Rational factorial(1);
  for (std::size_t j = 1; j <= n; ++j) {
    pw = pw * z;
    if (pw.is_zero()) return sum;
    if (j == n) throw std::domain_error("not nilpotent");
    factorial *= Rational(static_cast<long>(j));
    sum += pw * factorial.inv();
  }
  return sum;  // unreachable: the loop either returns or throws
}

}  // namespace spgen
