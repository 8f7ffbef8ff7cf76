#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uqosp/rewrite/rewrite_system.hpp"
#include "uqosp/superalg/element.hpp"

namespace uqosp {

/// A member of the candidate family of anti-automorphisms
/// e_{+-b} -> e_{-+b}, k -> k^{+-1}, q -> q^{+-1}.
struct ConjugationChoice {
  bool invert_q = true;
  bool invert_k = true;
  friend bool operator==(const ConjugationChoice&, const ConjugationChoice&) = default;
  std::string to_string() const;
};

Element conjugate_with(const Element& x, const ConjugationChoice& choice);

struct CalibrationEntry {
  ConjugationChoice choice;
  /// (e_{d-a})* equals the negative-root formula for e_{-d+a}.
  bool matches_paired_formula = false;
  /// (xy)* = y* x* on all pairs of generators including k's.
  bool anti_multiplicative = false;
  /// The images of the Cartan relations [e_b, e_-b'] reduce to zero.
  bool preserves_relations = false;
  bool accepted() const { return matches_paired_formula && anti_multiplicative && preserves_relations; }
};

struct Calibration {
  std::vector<CalibrationEntry> candidates;
  /// Set iff exactly one candidate is accepted.
  std::optional<ConjugationChoice> unique;
};

/// Tests every member of the family; `sys` needs bound >= 2.
Calibration calibrate_conjugation(const RewriteSystem& sys);

/// The calibrated choice (computed once); throws Error if calibration does
/// not single out one member.
const ConjugationChoice& calibrated_conjugation();

/// Cartan conjugation under the calibrated choice.
Element cartan_conjugate(const Element& x);

}  // namespace uqosp
