#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uqosp/superalg/element.hpp"

namespace uqosp {

/// Combination of k-free words with coefficients in Q(q).
using PureVec = std::vector<std::pair<Word, RatFunc>>;
/// Combination of monomials with coefficients in Q(q).
using MonoVec = std::vector<std::pair<Monomial, RatFunc>>;

/// A rule lhs -> rhs between k-free words of one sign.
struct Rule {
  Word lhs;
  PureVec rhs;
  Weight weight() const { return lhs.weight(); }
};

struct CompletionOptions {
  /// Maximum word length D.
  int bound = 8;
  /// Abort once the rule count passes this many.
  std::size_t rule_ceiling = 5000;
};

struct CompletionStats {
  std::size_t positive_rules = 0;
  std::size_t negative_rules = 0;
  std::size_t critical_pairs = 0;
  std::size_t mixed_checks = 0;
  double seconds = 0;
};

/// One rewrite step available in a monomial: either the swap of an adjacent
/// (positive, negative) letter pair or an occurrence of a Serre-ideal rule.
struct Redex {
  enum Kind { swap, rule } kind;
  int position;
  Word lhs;
};

/// Rewriting system for the quantum superalgebra, completed up to word
/// length D.
///
/// The rules are: the k-relations (absorbed by the monomial form), the
/// swaps e_{+b} e_{-b'} -> +-e_{-b'} e_{+b} (+ Cartan term when b = b'),
/// and a Groebner basis, truncated at D, of the Serre ideals in the positive
/// and negative letters. Normal words are (negative word)(positive word).
///
/// normal_form memoizes; a system must not be used from several threads at
/// once.
class RewriteSystem {
 public:
  /// Runs the completion; throws CompletionError when the rule ceiling is
  /// hit or a mixed overlap fails to resolve.
  static RewriteSystem complete(const CompletionOptions& options);
  static RewriteSystem complete(int bound) { return complete(CompletionOptions{bound, 5000}); }

  RewriteSystem(RewriteSystem&&) noexcept;
  RewriteSystem& operator=(RewriteSystem&&) noexcept;
  ~RewriteSystem();

  int bound() const;
  const CompletionStats& stats() const;
  /// Serre-ideal rules of both signs, sorted by lhs.
  std::vector<Rule> rules() const;

  /// Throws BoundExceeded if some monomial is longer than the bound.
  Element normal_form(const Element& x) const;
  bool equal_mod_relations(const Element& x, const Element& y) const;
  /// Normal form of a single word as a Q(q)-combination.
  const MonoVec& normal_form_word(const Word& w) const;

  /// One-step rewriting, for cross-checking the fast normal form.
  std::vector<Redex> redexes(const Word& w) const;
  Element apply(const Monomial& m, const Redex& r) const;
  /// Reduces by repeatedly applying a uniformly chosen redex to the largest
  /// reducible monomial until nothing applies.
  Element random_reduce(const Element& x, std::mt19937_64& rng) const;

  /// One line per rule, "LHS -> RHS": k-relations, the swap rules, then
  /// the Groebner rules.
  std::vector<std::string> dump() const;

 private:
  struct Impl;
  explicit RewriteSystem(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

/// Element of Q(q)-combination of monomials lifted to Scalar coefficients.
Element to_element(const MonoVec& v);

/// The quintic and cubic Serre elements for the given sign (+1 or -1).
Element serre_quintic(int sign);
Element serre_cubic(int sign);

}  // namespace uqosp
