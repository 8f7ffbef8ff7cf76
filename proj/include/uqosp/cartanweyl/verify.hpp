#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uqosp/cartanweyl/table.hpp"
#include "uqosp/rewrite/rewrite_system.hpp"

namespace uqosp {

struct RelationReport {
  std::string relation;
  int n = 0;
  int m = 0;
  /// Reduced LHS - RHS (for verify_remark: the reduced bracket).
  Element residual;
  bool pass = false;
  int bound_used = 0;
  double wall_time = 0;
  /// Extra verdict text, e.g. the matched factor reading.
  std::string note;
};

/// Real roots b whose bracket [e_b, e_{-b}] is a Cartan term at index n:
/// nd+a, nd-a, (2n-1)d+2a, (2n+1)d-2a.
enum class RealFamily { plus_a, minus_a, plus_2a, minus_2a };
inline constexpr RealFamily kRealFamilies[] = {RealFamily::plus_a, RealFamily::minus_a, RealFamily::plus_2a,
                                               RealFamily::minus_2a};
RootLabel family_root(RealFamily f, int n);
/// Sign of the Cartan term: (-1)^n, (-1)^{n-1}, +1, +1.
int family_sign(RealFamily f, int n);
/// "plus-a", "minus-a", "plus-2a", "minus-2a".
const char* family_name(RealFamily f);
std::optional<RealFamily> parse_family(std::string_view text);

/// [e_b, e_{-b}] = sign (k_b - k_b^{-1})/(q - q^{-1}) for b = family_root(f, n).
/// `rhs_sign` = -1 flips the right-hand side (negative control). Throws
/// BoundExceeded.
RelationReport verify_prop1_relation(RealFamily family, int n, const RewriteSystem& sys, RootVectorTable& table,
                                     int rhs_sign = 1);
/// All four families at index n; the table needs cutoff >= 2n+1.
std::vector<RelationReport> verify_prop1(int n, const RewriteSystem& sys, RootVectorTable& table);

/// Readings of the factor q^{nl} + q^{+-nl} - 1 in [e_{nd}, e_{-nd}]:
/// `minus` takes q^{-nl} for the second term, `literal` repeats q^{nl}.
enum class FactorReading { minus, literal };
const char* reading_name(FactorReading r);
/// Scalar c with [e_{nd}, e_{-nd}] = c (k_{nd} - k_{nd}^{-1})/(q - q^{-1}):
/// (-1)^n [nl] (q^{nl} + q^{+-nl} - 1)/(n b), l = (a, a).
Scalar imaginary_coefficient(int n, FactorReading reading);

struct Prop2Report {
  RelationReport report;
  /// For n = m: residual under each reading.
  Element residual_minus;
  Element residual_literal;
  bool minus_matches = false;
  bool literal_matches = false;
};

/// [e_{nd}, e_{-md}]. For n = m it passes iff exactly one reading gives
/// residual 0 (named in report.note); for n != m iff the bracket reduces to 0.
Prop2Report verify_prop2(int n, int m, const RewriteSystem& sys, RootVectorTable& table);

/// [e'_{nd}, e_{-md}] for n != m; passes iff the reduced bracket is nonzero.
RelationReport verify_remark(int n, int m, const RewriteSystem& sys, RootVectorTable& table);

/// [e_{nd}, e_{md}] reduces to 0.
RelationReport verify_imaginary_commute(int n, int m, const RewriteSystem& sys, RootVectorTable& table);

}  // namespace uqosp
