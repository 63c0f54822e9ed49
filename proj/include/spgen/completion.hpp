#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>

#include "spgen/closure.hpp"
#include "spgen/constructions.hpp"
#include "spgen/matrix.hpp"
#include "spgen/rng.hpp"
#include "spgen/sp_context.hpp"

namespace spgen {

struct CompletionSuccess {
  Mat<Rational> y = Mat<Rational>::zero(1, 1);
  Certificate certificate;
  std::size_t trial = 0;
};

struct CompletionResult {
  std::optional<CompletionSuccess> success;
  std::size_t trials_attempted = 0;

  bool succeeded() const { return success.has_value(); }
};

/// Completes a nonzero nilpotent member x to a generating pair: searches for
/// a nilpotent y = g y0 g^{-1}, with y0 the regular nilpotent sum of simple
/// root vectors and g a random symplectic conjugator, such that {x, y}
/// generates sp_2n. Trial 0 uses g = identity. Trial j uses k = 4 + j/10
/// exponential factors with coefficients bounded by 2(1 + j/10), so the
/// integer range widens as failures accumulate. Every success is
/// re-verified through its certificate before being returned; the result is
/// deterministic for a fixed seed.
inline CompletionResult complete_nilpotent(const SpContext& ctx, const Mat<Rational>& x, Rng& rng,
                                           std::size_t max_trials) {
  if (!is_member(ctx, x)) throw std::invalid_argument("x is not a member of sp_2n");
  if (x.is_zero()) throw std::invalid_argument("x must be nonzero");
  if (!is_nilpotent(x)) throw std::invalid_argument("x must be nilpotent");
  if (max_trials < 1) throw std::invalid_argument("max_trials must be at least 1");

  const Mat<Rational> y0 = example1_pair(ctx.n()).y;
  for (std::size_t trial = 0; trial < max_trials; ++trial) {
    Mat<Rational> y = y0;
    if (trial > 0) {
      const std::size_t k = 4 + trial / 10;
      const long bound = 2 * (1 + static_cast<long>(trial / 10));
      y = conjugate(random_symplectic(ctx, rng, k, bound), y0);
    }
    GenerationResult gen = generates_sp(ctx, {x, y});
    if (!gen.generates) continue;
    if (!verify_certificate(*gen.certificate)) continue;
    if (!is_nilpotent(y)) continue;
    return CompletionResult{CompletionSuccess{std::move(y), std::move(*gen.certificate), trial},
                            trial + 1};
  }
  return CompletionResult{std::nullopt, max_trials};
}

}  // namespace spgen
