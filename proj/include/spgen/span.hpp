#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spgen/rational.hpp"

namespace spgen {

/// Row space of a growing set of vectors, kept in reduced row-echelon form
/// over Q: pivots strictly increasing, each pivot entry 1, pivot columns
/// otherwise zero. Membership testing is a single elimination pass.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dimension) : dim_(dimension) {
    if (dimension == 0) throw std::invalid_argument("ambient dimension must be positive");
  }

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residual of v after elimination by the basis rows; zero iff v is in
  /// the span.
  std::vector<Rational> reduce(std::vector<Rational> v) const {
    check_dimension(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (v[pivots_[r]].is_zero()) continue;
      const Rational f = v[pivots_[r]];
      for (std::size_t c = 0; c < dim_; ++c) v[c] -= f * rows_[r][c];
    }
    return v;
  }

  bool contains(const std::vector<Rational>& v) const {
    const auto res = reduce(v);
    return std::all_of(res.begin(), res.end(), [](const Rational& x) { return x.is_zero(); });
  }

  /// Mutating insert; returns true iff v was outside the span.
  bool insert_in_place(const std::vector<Rational>& v) {
    auto res = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && res[p].is_zero()) ++p;
    if (p == dim_) return false;
    const Rational inv = res[p].inv();
    for (std::size_t c = 0; c < dim_; ++c) res[c] *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r][p].is_zero()) continue;
      const Rational f = rows_[r][p];
      for (std::size_t c = 0; c < dim_; ++c) rows_[r][c] -= f * res[c];
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(res));
    return true;
  }

  /// Functional insert: returns the extended basis and whether v was new.
  std::pair<SpanBasis, bool> insert(const std::vector<Rational>& v) const {
    SpanBasis out = *this;
    const bool inserted = out.insert_in_place(v);
    return {std::move(out), inserted};
  }

 private:
  void check_dimension(const std::vector<Rational>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  }

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Free-function form of SpanBasis::insert.
inline std::pair<SpanBasis, bool> span_insert(const SpanBasis& s, const std::vector<Rational>& v) {
  return s.insert(v);
}

}  // namespace spgen
