#pragma once

#include <map>
#include <optional>
#include <unordered_map>

#include "uqosp/rewrite/rewrite_system.hpp"

namespace uqosp::detail {

using PureMap = std::map<Word, RatFunc>;

/// Memoized normal-form machinery shared by completion and reduction.
class Engine {
 public:
  explicit Engine(int bound);

  int bound() const { return bound_; }
  const RatFunc& inv_qq() const { return inv_qq_; }
  const std::unordered_map<Word, PureVec, WordHash>& rules() const { return rules_; }
  void set_rule(const Word& lhs, PureVec rhs);
  void erase_rule(const Word& lhs);

  /// Normal form of a one-sign word under the Serre rules.
  const PureVec& purenf(const Word& w) const;
  /// a * w for a normal word w.
  const MonoVec& lmul(Letter a, const Word& w) const;
  /// Moves a letter a to the left of n*p, where n is a negative word (not
  /// necessarily reduced) and p a normal positive word.
  MonoVec push_letter(Letter a, const Word& n, const Word& p) const;
  const MonoVec& word_nf(const Word& w) const;
  PureMap reduce_pure(const PureMap& x) const;

 private:
  std::optional<std::pair<int, Word>> find_rule(const Word& w) const;
  const RatFunc& q_power(int n) const;
  void clear_caches();
  void invalidate(const Word& w);

  int bound_;
  RatFunc inv_qq_;
  std::unordered_map<Word, PureVec, WordHash> rules_;
  int max_lhs_ = 0;
  mutable std::unordered_map<int, RatFunc> qpow_;
  mutable std::unordered_map<Word, PureVec, WordHash> pure_cache_;
  mutable std::unordered_map<Word, MonoVec, WordHash> lmul_cache_;
  mutable std::unordered_map<Word, MonoVec, WordHash> word_cache_;
};

}  // namespace uqosp::detail
