#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "spgen/matrix.hpp"

namespace spgen {

/// Formal commutator word over generator symbols: a leaf is a generator
/// index, an inner node [l, r] denotes the commutator of its children.
/// Words are immutable and share subtrees, so a family of words produced by
/// one closure run forms a DAG.
class BracketWord {
 public:
  static BracketWord leaf(std::size_t index);
  static BracketWord bracket(BracketWord left, BracketWord right);

  bool is_leaf() const;
  std::size_t index() const;
  const BracketWord& left() const;
  const BracketWord& right() const;

  Mat<Rational> evaluate(const std::vector<Mat<Rational>>& gens) const;

  friend bool operator==(const BracketWord& a, const BracketWord& b);

 private:
  struct Node;
  explicit BracketWord(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  Mat<Rational> eval_cached(const std::vector<Mat<Rational>>& gens,
                            std::unordered_map<const Node*, Mat<Rational>>& cache) const;

  friend std::vector<Mat<Rational>> evaluate_words(const std::vector<BracketWord>& words,
                                                   const std::vector<Mat<Rational>>& gens);

  std::shared_ptr<const Node> node_;
};

struct BracketWord::Node {
  std::variant<std::size_t, std::pair<BracketWord, BracketWord>> v;
};

inline BracketWord BracketWord::leaf(std::size_t index) {
  return BracketWord(std::make_shared<const Node>(Node{index}));
}

inline BracketWord BracketWord::bracket(BracketWord left, BracketWord right) {
  return BracketWord(
      std::make_shared<const Node>(Node{std::make_pair(std::move(left), std::move(right))}));
}

inline bool BracketWord::is_leaf() const { return std::holds_alternative<std::size_t>(node_->v); }
inline std::size_t BracketWord::index() const { return std::get<std::size_t>(node_->v); }
inline const BracketWord& BracketWord::left() const { return std::get<1>(node_->v).first; }
inline const BracketWord& BracketWord::right() const { return std::get<1>(node_->v).second; }

// Memoized on node identity so shared subtrees are evaluated once.
inline Mat<Rational> BracketWord::eval_cached(
    const std::vector<Mat<Rational>>& gens,
    std::unordered_map<const Node*, Mat<Rational>>& cache) const {
  if (auto it = cache.find(node_.get()); it != cache.end()) return it->second;
  Mat<Rational> result = [&] {
    if (is_leaf()) {
      if (index() >= gens.size()) throw std::out_of_range("bracket word index out of range");
      return gens[index()];
    }
    return commutator(left().eval_cached(gens, cache), right().eval_cached(gens, cache));
  }();
  cache.emplace(node_.get(), result);
  return result;
}

inline Mat<Rational> BracketWord::evaluate(const std::vector<Mat<Rational>>& gens) const {
  std::unordered_map<const Node*, Mat<Rational>> cache;
  return eval_cached(gens, cache);
}

inline bool operator==(const BracketWord& a, const BracketWord& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.index() == b.index();
  return a.left() == b.left() && a.right() == b.right();
}

/// Evaluates a family of words against one generator list, sharing the
/// evaluation cache across the family.
inline std::vector<Mat<Rational>> evaluate_words(const std::vector<BracketWord>& words,
                                                 const std::vector<Mat<Rational>>& gens) {
  std::unordered_map<const BracketWord::Node*, Mat<Rational>> cache;
  std::vector<Mat<Rational>> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(w.eval_cached(gens, cache));
  return out;
}

}  // namespace spgen
