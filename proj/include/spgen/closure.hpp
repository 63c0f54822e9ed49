#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spgen/bracket_word.hpp"
#include "spgen/matrix.hpp"
#include "spgen/span.hpp"
#include "spgen/sp_context.hpp"

namespace spgen {

/// Basis of the Lie subalgebra generated by a set of matrices, together with
/// the bracket words that produced each basis element.
struct ClosureResult {
  SpanBasis span;                  // flattened s^2-dimensional coordinates
  std::size_t dimension = 0;       // = span.rank()
  std::vector<BracketWord> words;  // one per basis element, insertion order
  bool reached_bound = false;
};

/// Portable witness that a generator set spans sp_2n under iterated
/// brackets: evaluating the words and stacking coordinates gives rank
/// n(2n+1).
struct Certificate {
  std::size_t n = 0;
  std::vector<Mat<Rational>> generators;
  std::vector<BracketWord> words;
  std::size_t dimension = 0;
};

struct GenerationResult {
  bool generates = false;
  std::size_t closure_dimension = 0;
  std::optional<Certificate> certificate;
};

/// Span-closure under brackets in the flattened s^2-dimensional coordinate
/// space. Every unordered pair of basis elements is bracketed exactly once,
/// in a deterministic order: each inserted element is paired with all
/// earlier elements, earliest first, so new elements meet the original
/// generators first and words stay left-nested where possible. Stops early
/// once the span reaches dim_bound.
inline ClosureResult bracket_closure(const std::vector<Mat<Rational>>& gens, std::size_t size,
                                     std::size_t dim_bound) {
  if (gens.empty()) throw std::invalid_argument("bracket_closure needs at least one generator");
  for (const auto& g : gens)
    if (g.rows() != size || g.cols() != size)
      throw std::invalid_argument("generator shape mismatch");

  SpanBasis span(size * size);
  std::vector<Mat<Rational>> elems;
  std::vector<BracketWord> words;

  auto try_insert = [&](const Mat<Rational>& m, BracketWord w) {
    if (!span.insert_in_place(m.entries())) return;
    elems.push_back(m);
    words.push_back(std::move(w));
  };

  for (std::size_t i = 0; i < gens.size() && span.rank() < dim_bound; ++i)
    try_insert(gens[i], BracketWord::leaf(i));

  for (std::size_t i = 1; i < elems.size() && span.rank() < dim_bound; ++i)
    for (std::size_t j = 0; j < i && span.rank() < dim_bound; ++j)
      try_insert(commutator(elems[j], elems[i]), BracketWord::bracket(words[j], words[i]));

  const std::size_t dimension = span.rank();
  return ClosureResult{std::move(span), dimension, std::move(words), dimension >= dim_bound};
}

/// True iff the members gens generate sp_2n; on success the certificate
/// holds exactly n(2n+1) bracket words whose evaluations span the algebra.
inline GenerationResult generates_sp(const SpContext& ctx, const std::vector<Mat<Rational>>& gens) {
  for (const auto& g : gens)
    if (!is_member(ctx, g)) throw std::invalid_argument("generator is not a member of sp_2n");
  const std::size_t d = ctx.dim();
  ClosureResult closure = bracket_closure(gens, ctx.size(), d);
  GenerationResult result;
  result.generates = closure.dimension == d;
  result.closure_dimension = closure.dimension;
  if (result.generates)
    result.certificate = Certificate{ctx.n(), gens, std::move(closure.words), d};
  return result;
}

/// Re-evaluates every certificate word from the generators and accepts iff
/// every evaluation lies in sp_2n and the stacked coordinates have full rank
/// n(2n+1).
inline bool verify_certificate(const Certificate& cert) {
  const SpContext ctx(cert.n);
  const auto evaluated = evaluate_words(cert.words, cert.generators);
  SpanBasis span(ctx.dim());
  for (const auto& m : evaluated) {
    if (m.rows() != ctx.size() || m.cols() != ctx.size()) return false;
    if (!is_member(ctx, m)) return false;
    span.insert_in_place(coords(ctx, m));
  }
  return span.rank() == ctx.dim();
}

/// Spectral form of the consistency condition: t is consistent iff the
/// adjoint has rank 2n^2 and its characteristic polynomial is x^n q(x) with
/// q(0) != 0 and q squarefree. This forces n-dimensional kernel and 2n^2
/// distinct nonzero adjoint eigenvalues, i.e. all root values alpha(t)
/// nonzero and pairwise distinct.
inline bool consistent_check(const SpContext& ctx, const Mat<Rational>& t) {
  const Mat<Rational> ad = ad_matrix(ctx, t);  // throws for non-members
  if (rank(ad) != 2 * ctx.n() * ctx.n()) return false;
  const Poly p = charpoly(ad);
  std::size_t valuation = 0;
  while (valuation < p.coeffs().size() && p.coeffs()[valuation].is_zero()) ++valuation;
  if (valuation != ctx.n()) return false;
  std::vector<Rational> shifted(p.coeffs().begin() + static_cast<long>(valuation),
                                p.coeffs().end());
  const Poly q(std::move(shifted));
  return poly_gcd(q, q.derivative()).degree() == 0;
}

struct VandermondeResult {
  std::vector<Mat<Rational>> iterates;
  bool independent = false;
};

/// The 2n^2 adjoint iterates A_1 = [t, x], A_i = [t, A_{i-1}] together with
/// an exact independence check of their coordinates.
inline VandermondeResult vandermonde_closure(const SpContext& ctx, const Mat<Rational>& t,
                                             const Mat<Rational>& x) {
  if (!is_member(ctx, t) || !is_member(ctx, x))
    throw std::invalid_argument("arguments must be members of sp_2n");
  if (!consistent_check(ctx, t)) throw std::domain_error("element not consistent");
  const std::size_t m = 2 * ctx.n() * ctx.n();
  VandermondeResult result;
  result.iterates.reserve(m);
  SpanBasis span(ctx.dim());
  Mat<Rational> cur = x;
  for (std::size_t i = 0; i < m; ++i) {
    cur = commutator(t, cur);
    span.insert_in_place(coords(ctx, cur));
    result.iterates.push_back(cur);
  }
  result.independent = span.rank() == m;
  return result;
}

}  // namespace spgen
