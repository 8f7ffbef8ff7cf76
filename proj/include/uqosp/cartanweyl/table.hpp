#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uqosp/rootsys/rootsys.hpp"
#include "uqosp/superalg/element.hpp"

namespace uqosp {

/// One defining bracket: target = coefficient * [left, right] in `mode`.
struct RecursionStep {
  /// "[e_a, e_d-2a]_q"
  std::string label;
  RootLabel left;
  RootLabel right;
  Scalar coefficient;
  BracketMode mode;
};

/// The recursion defining the vector of a real root or of e_{+-d}
/// (e_d = [e_a, e_{d-a}]_q / s_b); nullopt for Chevalley roots and for +-nd
/// with n >= 2, which come from the Schur transform.
std::optional<RecursionStep> recursion_step(const RootLabel& target);
/// e'_{nd} = [e_a, e_{nd-a}]_q / s_b for n > 0 and
/// e'_{-nd} = [e_{-nd+a}, e_{-a}]_{q^-1} / s_b.
RecursionStep primed_step(int n);

/// Root vectors expanded in Chevalley generators, built on demand and
/// memoized.
///
/// Real roots and e_{+-n d} are reachable whenever |c_delta| <= cutoff; the
/// double roots 2a, 2nd+-2a carry no vector. e'_{+-n d} are kept apart from
/// the Schur images e_{+-n d}.
class RootVectorTable {
 public:
  /// Only the clockwise ordering has recursions; anticlockwise raises
  /// DomainError.
  explicit RootVectorTable(int cutoff, Direction direction = Direction::clockwise);

  int cutoff() const { return cutoff_; }
  Direction direction() const { return direction_; }

  /// Throws DomainError for a double root or |c_delta| > cutoff.
  const Element& vector(const RootLabel& root);
  /// e'_{n d} for n > 0, e'_{-|n| d} for n < 0.
  const Element& primed(int n);

  /// Roots that carry a vector under the cutoff, sorted.
  std::vector<RootLabel> roots() const;
  /// Forces every entry.
  void build_all();
  const std::map<RootLabel, Element>& entries() const { return vectors_; }

  /// k for the weight c_delta d + c_alpha a.
  static Element k_of(int c_delta, int c_alpha);
  /// (k_b - k_b^{-1})/(q - q^{-1}).
  static Element cartan_term(int c_delta, int c_alpha);

 private:
  Element compute(int cd, int ca);
  Element compute_primed(int n);

  int cutoff_;
  Direction direction_;
  std::map<RootLabel, Element> vectors_;
  std::map<int, Element> primed_;
};

/// Deformation parameter of the Schur transform used for the table:
/// (q - q^{-1}) s_b for positive, (q^{-1} - q) s_b for negative vectors.
Scalar table_kappa(int sign);

/// Eager table for all roots with |c_delta| <= n_max.
RootVectorTable build_root_vectors(int n_max, Direction direction = Direction::clockwise);

}  // namespace uqosp
