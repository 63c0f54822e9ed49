#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spgen/closure.hpp"
#include "spgen/cyclo.hpp"
#include "spgen/matrix.hpp"
#include "spgen/sp_context.hpp"

namespace spgen {

enum class PairTag { lemma3, example1, prop3, completion };

inline std::string to_string(PairTag tag) {
  switch (tag) {
    case PairTag::lemma3: return "lemma3";
    case PairTag::example1: return "example1";
    case PairTag::prop3: return "prop3";
    case PairTag::completion: return "completion";
  }
  throw std::logic_error("unknown pair tag");
}

inline PairTag pair_tag_from_string(const std::string& s) {
  if (s == "lemma3") return PairTag::lemma3;
  if (s == "example1") return PairTag::example1;
  if (s == "prop3") return PairTag::prop3;
  if (s == "completion") return PairTag::completion;
  throw std::invalid_argument("unknown pair tag \"" + s + "\"");
}

/// A named pair of nilpotent members of sp_2n, with the consistent element
/// t when the construction provides one.
struct GeneratorPair {
  std::size_t n = 0;
  PairTag tag = PairTag::lemma3;
  Mat<Rational> x = Mat<Rational>::zero(1, 1);
  Mat<Rational> y = Mat<Rational>::zero(1, 1);
  std::optional<Mat<Rational>> t;
};

/// The cyclic-looking element T = (-1)^{n-1} v_{-psi} + sum of simple root
/// vectors: superdiagonal 1s in the A block, 1 at (n, 2n), (-1)^{n-1} at
/// (n+1, 1) and -1s on the subdiagonal of the lower-right block. T^{2n} = E.
inline Mat<Rational> lemma3_T(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  const std::size_t N = 2 * n;
  Mat<Rational> t = Mat<Rational>::zero(N, N);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    t.at(i, i + 1) = Rational(1);
    t.at(n + i + 1, n + i) = Rational(-1);
  }
  t.at(n - 1, N - 1) = Rational(1);
  t.at(n, 0) = Rational(n % 2 == 1 ? 1 : -1);
  return t;
}

/// The lowest-weight pair: x = v_{-psi} = E_{n+1,1} and y = sum of the
/// simple root vectors, so y = T + (-1)^n x.
inline GeneratorPair lemma3_pair(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  const SpContext ctx(n);
  Mat<Rational> y = Mat<Rational>::zero(2 * n, 2 * n);
  for (const auto& v : ctx.simple_root_vectors()) y += v;
  return GeneratorPair{n, PairTag::lemma3, ctx.lowest_root_vector(), std::move(y), lemma3_T(n)};
}

/// Same pair as lemma3_pair; kept as a named alias so both names are
/// addressable from the CLI.
inline GeneratorPair example1_pair(std::size_t n) {
  GeneratorPair p = lemma3_pair(n);
  p.tag = PairTag::example1;
  return p;
}

/// Checks the generation condition for a weighted pair: N must be a
/// full-support sum of simple root vectors and M a full-support sum of
/// negative simple root vectors; t = [N, M] must be diagonal, and the n
/// simple-root values on t (differences t_i - t_{i+1} and 2 t_n) must be
/// nonzero and pairwise distinct.
inline bool prop3_condition_check(const SpContext& ctx, const Mat<Rational>& N,
                                  const Mat<Rational>& M) {
  const std::size_t n = ctx.n();
  auto support_on = [&](const Mat<Rational>& m, const std::vector<Mat<Rational>>& vectors,
                        const char* what) {
    Mat<Rational> rest = m;
    for (const auto& v : vectors) {
      // the root vectors have pairwise disjoint supports, so the entry of m
      // at v's first nonzero cell is the coefficient of v
      std::size_t vi = 0, vj = 0;
      bool found = false;
      for (std::size_t r = 0; r < v.rows() && !found; ++r)
        for (std::size_t c = 0; c < v.cols() && !found; ++c)
          if (!v.at(r, c).is_zero()) {
            vi = r;
            vj = c;
            found = true;
          }
      const Rational coeff = m.at(vi, vj) / v.at(vi, vj);
      if (coeff.is_zero())
        throw std::invalid_argument(std::string(what) + " must have full support");
      rest -= coeff * v;
    }
    if (!rest.is_zero())
      throw std::invalid_argument(std::string(what) +
                                  " is not supported on the expected root vectors");
  };
  support_on(N, ctx.simple_root_vectors(), "N");
  support_on(M, ctx.negative_simple_root_vectors(), "M");

  const Mat<Rational> t = commutator(N, M);
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (i != j && !t.at(i, j).is_zero())
        throw std::domain_error("pair does not bracket to Cartan");

  std::vector<Rational> values;
  for (std::size_t i = 0; i + 1 < n; ++i) values.push_back(t.at(i, i) - t.at(i + 1, i + 1));
  values.push_back(Rational(2) * t.at(n - 1, n - 1));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_zero()) return false;
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j]) return false;
  }
  return true;
}

/// The weighted pair N = sum of simple root vectors, M = sum of weighted
/// negative simple root vectors. Weights must satisfy
/// prop3_condition_check; the default weights are 3, 9, ..., 3^n.
inline GeneratorPair prop3_pair(std::size_t n, const std::vector<Rational>& weights) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (weights.size() != n) throw std::invalid_argument("expected one weight per simple root");
  const SpContext ctx(n);
  Mat<Rational> N = Mat<Rational>::zero(2 * n, 2 * n);
  for (const auto& v : ctx.simple_root_vectors()) N += v;
  Mat<Rational> M = Mat<Rational>::zero(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) M += weights[i] * ctx.negative_simple_root_vectors()[i];
  if (!prop3_condition_check(ctx, N, M))
    throw std::domain_error("weights fail the simple-root value condition");
  GeneratorPair p{n, PairTag::prop3, std::move(N), std::move(M), std::nullopt};
  p.t = commutator(p.x, p.y);
  return p;
}

inline GeneratorPair prop3_pair(std::size_t n) {
  std::vector<Rational> weights;
  Rational w(1);
  for (std::size_t i = 0; i < n; ++i) {
    w *= Rational(3);
    weights.push_back(w);
  }
  return prop3_pair(n, weights);
}

/// Result of the exact diagonalization check over Q(xi_2n).
struct ConjugationReport {
  bool invertible = false;
  bool diagonal_with_all_roots_once = false;
  bool offdiagonal_nonzero = false;
  std::optional<Mat<CycloElement>> diagonalized;

  bool all_ok() const { return invertible && diagonal_with_all_roots_once && offdiagonal_nonzero; }
};

/// Builds the eigenvector matrix C of lemma3_T(n) over Q(xi_2n), with
/// column k the eigenvector of eigenvalue xi^k:
///   v = e_1 + lambda e_2 + ... + lambda^{n-1} e_n
///       + (-1)^{n-1}/lambda e_{n+1} + ... + 1/lambda^n e_{2n},
/// and verifies that (a) C is invertible, (b) C^{-1} T C is diagonal with
/// every 2n-th root of unity appearing exactly once, and (c) every
/// off-diagonal entry of C^{-1} E_{n+1,1} C is nonzero.
inline ConjugationReport verify_lemma3_conjugation(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  const std::size_t N = 2 * n;
  const auto field = CycloField::of(static_cast<unsigned>(N));
  const CycloElement xi = CycloElement::generator(field);
  const CycloElement one = CycloElement::one(field);

  Mat<CycloElement> C(N, N, CycloElement::zero(field));
  for (std::size_t k = 0; k < N; ++k) {
    const CycloElement lambda = xi.pow(k);
    const CycloElement lambda_inv = cyclo_inv(lambda);
    CycloElement p = one;
    for (std::size_t i = 0; i < n; ++i) {
      C.at(i, k) = p;
      p = p * lambda;
    }
    CycloElement q = one;
    for (std::size_t j = 1; j <= n; ++j) {
      q = q * lambda_inv;
      C.at(n + j - 1, k) = (n - j) % 2 == 0 ? q : -q;
    }
  }

  auto embed = [&](const Mat<Rational>& m) {
    Mat<CycloElement> out(m.rows(), m.cols(), CycloElement::zero(field));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        out.at(i, j) = CycloElement::from_rational(field, m.at(i, j));
    return out;
  };

  ConjugationReport report;
  Mat<CycloElement> c_inv = C;
  try {
    c_inv = mat_inv(C);
  } catch (const std::domain_error&) {
    return report;  // singular C: all checks fail
  }
  report.invertible = true;

  const Mat<CycloElement> diag = c_inv * embed(lemma3_T(n)) * C;
  bool diagonal = true;
  for (std::size_t i = 0; i < N && diagonal; ++i)
    for (std::size_t j = 0; j < N && diagonal; ++j)
      if (i != j && !diag.at(i, j).is_zero()) diagonal = false;
  bool roots_once = diagonal;
  if (diagonal) {
    // each 2n-th root of unity must appear exactly once on the diagonal
    for (std::size_t k = 0; k < N && roots_once; ++k) {
      const CycloElement root = xi.pow(k);
      std::size_t count = 0;
      for (std::size_t i = 0; i < N; ++i)
        if (diag.at(i, i) == root) ++count;
      roots_once = count == 1;
    }
  }
  report.diagonal_with_all_roots_once = roots_once;
  report.diagonalized = diag;

  const Mat<CycloElement> f = c_inv * embed(Mat<Rational>::unit(N, n, 0)) * C;
  bool offdiag_nonzero = true;
  for (std::size_t i = 0; i < N && offdiag_nonzero; ++i)
    for (std::size_t j = 0; j < N && offdiag_nonzero; ++j)
      if (i != j && f.at(i, j).is_zero()) offdiag_nonzero = false;
  report.offdiagonal_nonzero = offdiag_nonzero;
  return report;
}

}  // namespace spgen
