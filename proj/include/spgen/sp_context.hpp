#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spgen/matrix.hpp"
#include "spgen/rng.hpp"

namespace spgen {

/// Structure data for sp_2n with the symplectic form Omega = [[0, I], [-I, 0]].
///
/// Members are the 2n x 2n matrices x with x^T Omega + Omega x = 0, i.e. the
/// block shape [[A, B], [C, -A^T]] with B, C symmetric. The standard basis is
/// ordered A-block generators (all i, j), then symmetric B generators, then
/// symmetric C generators (i <= j each); every basis matrix has a pivot cell
/// that no other basis matrix touches, which makes coordinates a direct read.
class SpContext {
 public:
  explicit SpContext(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    const std::size_t N = 2 * n;
    auto unit = [N](std::size_t i, std::size_t j) { return Mat<Rational>::unit(N, i, j); };

    omega_ = Mat<Rational>::zero(N, N);
    for (std::size_t i = 0; i < n; ++i) {
      omega_.at(i, n + i) = Rational(1);
      omega_.at(n + i, i) = Rational(-1);
    }

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        basis_.push_back(unit(i, j) - unit(n + j, n + i));
        pivot_cells_.emplace_back(i, j);
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        basis_.push_back(i == j ? unit(i, n + i) : unit(i, n + j) + unit(j, n + i));
        pivot_cells_.emplace_back(i, n + j);
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        basis_.push_back(i == j ? unit(n + i, i) : unit(n + i, j) + unit(n + j, i));
        pivot_cells_.emplace_back(n + i, j);
      }

    // Root vectors of type C_n: every basis matrix except the n Cartan
    // generators E_ii - E_{n+i,n+i} (the A-block diagonal).
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const auto [r, c] = pivot_cells_[k];
      if (!(k < n * n && r == c)) root_vectors_.push_back(basis_[k]);
    }

    for (std::size_t i = 0; i + 1 < n; ++i)
      simple_roots_.push_back(unit(i, i + 1) - unit(n + i + 1, n + i));
    simple_roots_.push_back(unit(n - 1, 2 * n - 1));  // long root 2*eps_n
    for (std::size_t i = 0; i + 1 < n; ++i)
      negative_simple_roots_.push_back(unit(i + 1, i) - unit(n + i, n + i + 1));
    negative_simple_roots_.push_back(unit(2 * n - 1, n - 1));
    highest_root_vector_ = unit(0, n);
    lowest_root_vector_ = unit(n, 0);
  }

  std::size_t n() const { return n_; }
  /// Matrix size 2n.
  std::size_t size() const { return 2 * n_; }
  /// dim sp_2n = n(2n+1).
  std::size_t dim() const { return n_ * (2 * n_ + 1); }

  const Mat<Rational>& omega() const { return omega_; }
  const std::vector<Mat<Rational>>& basis() const { return basis_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& pivot_cells() const {
    return pivot_cells_;
  }

  /// All 2n^2 root vectors, in basis order.
  const std::vector<Mat<Rational>>& root_vectors() const { return root_vectors_; }
  /// The n simple root vectors E_{i,i+1} - E_{n+i+1,n+i} and E_{n,2n}.
  const std::vector<Mat<Rational>>& simple_root_vectors() const { return simple_roots_; }
  /// The n negative simple root vectors E_{i+1,i} - E_{n+i,n+i+1} and E_{2n,n}.
  const std::vector<Mat<Rational>>& negative_simple_root_vectors() const {
    return negative_simple_roots_;
  }
  /// v_psi = E_{1,n+1}.
  const Mat<Rational>& highest_root_vector() const { return highest_root_vector_; }
  /// v_{-psi} = E_{n+1,1}.
  const Mat<Rational>& lowest_root_vector() const { return lowest_root_vector_; }

 private:
  std::size_t n_;
  Mat<Rational> omega_ = Mat<Rational>::zero(1, 1);
  std::vector<Mat<Rational>> basis_;
  std::vector<std::pair<std::size_t, std::size_t>> pivot_cells_;
  std::vector<Mat<Rational>> root_vectors_;
  std::vector<Mat<Rational>> simple_roots_;
  std::vector<Mat<Rational>> negative_simple_roots_;
  Mat<Rational> highest_root_vector_ = Mat<Rational>::zero(1, 1);
  Mat<Rational> lowest_root_vector_ = Mat<Rational>::zero(1, 1);
};

inline bool is_member(const SpContext& ctx, const Mat<Rational>& x) {
  if (x.rows() != ctx.size() || x.cols() != ctx.size())
    throw std::invalid_argument("matrix size does not match the context");
  return (x.transpose() * ctx.omega() + ctx.omega() * x).is_zero();
}

/// Coordinates of the member x in the standard basis; reconstructing the
/// matrix from them returns x exactly.
inline std::vector<Rational> coords(const SpContext& ctx, const Mat<Rational>& x) {
  if (!is_member(ctx, x)) throw std::invalid_argument("matrix is not a member of sp_2n");
  std::vector<Rational> v(ctx.dim());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto [i, j] = ctx.pivot_cells()[k];
    v[k] = x.at(i, j);
  }
  return v;
}

/// Matrix of the adjoint operator y -> [x, y] in standard basis coordinates.
inline Mat<Rational> ad_matrix(const SpContext& ctx, const Mat<Rational>& x) {
  if (!is_member(ctx, x)) throw std::invalid_argument("matrix is not a member of sp_2n");
  const std::size_t d = ctx.dim();
  Mat<Rational> ad = Mat<Rational>::zero(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto col = coords(ctx, commutator(x, ctx.basis()[j]));
    for (std::size_t i = 0; i < d; ++i) ad.at(i, j) = col[i];
  }
  return ad;
}

/// g x g^{-1}.
inline Mat<Rational> conjugate(const Mat<Rational>& g, const Mat<Rational>& x) {
  return g * x * mat_inv(g);
}

/// Random element of Sp_2n(Q): a product of k factors exp(c * z), where z is
/// drawn uniformly from the nilpotent standard generators (simple and
/// negative simple root vectors, v_psi and v_{-psi}) and c is a uniform
/// integer in [-bound, bound]. k = 0 gives the identity.
inline Mat<Rational> random_symplectic(const SpContext& ctx, Rng& rng, std::size_t k,
                                       long bound) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  std::vector<const Mat<Rational>*> pool;
  for (const auto& v : ctx.simple_root_vectors()) pool.push_back(&v);
  for (const auto& v : ctx.negative_simple_root_vectors()) pool.push_back(&v);
  pool.push_back(&ctx.highest_root_vector());
  pool.push_back(&ctx.lowest_root_vector());

  Mat<Rational> g = Mat<Rational>::identity(ctx.size());
  for (std::size_t j = 0; j < k; ++j) {
    const Mat<Rational>& z = *pool[rng.index(pool.size())];
    const Rational c(rng.uniform(-bound, bound));
    g = g * exp_nilpotent(c * z);
  }
  return g;
}

}  // namespace spgen
