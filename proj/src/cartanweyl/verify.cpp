#include "uqosp/cartanweyl/verify.hpp"

#include <chrono>

#include "uqosp/coeffield/config.hpp"
#include "uqosp/error.hpp"

namespace uqosp {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string bracket_label(const std::string& x, const std::string& y) { return "[" + x + ", " + y + "]"; }

// Reducing the factors first keeps the product small; the relations form a
// two-sided ideal so the result is unchanged.
Element reduced_bracket(const Element& x, const Element& y, const RewriteSystem& sys) {
  return sys.normal_form(qbracket(sys.normal_form(x), sys.normal_form(y), 0));
}

}  // namespace

RootLabel family_root(RealFamily f, int n) {
  switch (f) {
    case RealFamily::plus_a: return RootLabel(n, 1);
    case RealFamily::minus_a: return RootLabel(n, -1);
    case RealFamily::plus_2a: return RootLabel(2 * n - 1, 2);
    case RealFamily::minus_2a: return RootLabel(2 * n + 1, -2);
  }
  throw DomainError("unknown root family");
}

int family_sign(RealFamily f, int n) {
  switch (f) {
    case RealFamily::plus_a: return n % 2 == 0 ? 1 : -1;
    case RealFamily::minus_a: return n % 2 == 0 ? -1 : 1;
    default: return 1;
  }
}

const char* family_name(RealFamily f) {
  switch (f) {
    case RealFamily::plus_a: return "plus-a";
    case RealFamily::minus_a: return "minus-a";
    case RealFamily::plus_2a: return "plus-2a";
    case RealFamily::minus_2a: return "minus-2a";
  }
  return "?";
}

std::optional<RealFamily> parse_family(std::string_view text) {
  for (RealFamily f : kRealFamilies)
    if (text == family_name(f)) return f;
  return std::nullopt;
}

RelationReport verify_prop1_relation(RealFamily family, int n, const RewriteSystem& sys, RootVectorTable& table,
                                     int rhs_sign) {
  if (n < 1) throw DomainError("index n must be >= 1");
  auto t0 = std::chrono::steady_clock::now();
  const RootLabel b = family_root(family, n);
  Element lhs = reduced_bracket(table.vector(b), table.vector(-b), sys);
  Element rhs = Scalar(family_sign(family, n) * rhs_sign) * RootVectorTable::cartan_term(b.c_delta(), b.c_alpha());
  RelationReport r;
  r.relation = bracket_label("e_" + b.to_string(), "e_" + (-b).to_string());
  r.n = n;
  r.residual = lhs - rhs;
  r.pass = r.residual.is_zero();
  r.bound_used = sys.bound();
  r.wall_time = seconds_since(t0);
  return r;
}

std::vector<RelationReport> verify_prop1(int n, const RewriteSystem& sys, RootVectorTable& table) {
  std::vector<RelationReport> out;
  for (RealFamily f : kRealFamilies) out.push_back(verify_prop1_relation(f, n, sys, table));
  return out;
}

const char* reading_name(FactorReading r) { return r == FactorReading::minus ? "minus" : "literal"; }

Scalar imaginary_coefficient(int n, FactorReading reading) {
  const int nl = n * alpha_sq_int();
  Scalar factor = reading == FactorReading::minus ? Scalar::q_power(nl) + Scalar::q_power(-nl) - Scalar(1)
                                                : Scalar::q_power(nl) + Scalar::q_power(nl) - Scalar(1);
  Scalar sign(n % 2 == 0 ? 1 : -1);
  Scalar nb = Scalar(n) * Scalar(Scalar::b());
  return sign * nb.inverse() * factor * qint(nl);
}

Prop2Report verify_prop2(int n, int m, const RewriteSystem& sys, RootVectorTable& table) {
  if (n < 1 || m < 1) throw DomainError("indices n, m must be >= 1");
  auto t0 = std::chrono::steady_clock::now();
  Prop2Report out;
  RelationReport& r = out.report;
  r.relation = bracket_label("e_" + RootLabel(n, 0).to_string(), "e_" + RootLabel(-m, 0).to_string());
  r.n = n;
  r.m = m;
  r.bound_used = sys.bound();
  Element bracket = reduced_bracket(table.vector(RootLabel(n, 0)), table.vector(RootLabel(-m, 0)), sys);
  if (n != m) {
    r.residual = bracket;
    r.pass = bracket.is_zero();
    r.note = "delta_nm";
  } else {
    Element cartan = RootVectorTable::cartan_term(n, 0);
    out.residual_minus = bracket - imaginary_coefficient(n, FactorReading::minus) * cartan;
    out.residual_literal = bracket - imaginary_coefficient(n, FactorReading::literal) * cartan;
    out.minus_matches = out.residual_minus.is_zero();
    out.literal_matches = out.residual_literal.is_zero();
    r.pass = out.minus_matches != out.literal_matches;
    if (out.minus_matches && !out.literal_matches) {
      r.note = "minus";
      r.residual = out.residual_minus;
    } else if (out.literal_matches && !out.minus_matches) {
      r.note = "literal";
      r.residual = out.residual_literal;
    } else {
      r.note = out.minus_matches ? "both" : "none";
      r.residual = out.residual_minus;
    }
  }
  r.wall_time = seconds_since(t0);
  return out;
}

RelationReport verify_remark(int n, int m, const RewriteSystem& sys, RootVectorTable& table) {
  if (n < 1 || m < 1) throw DomainError("indices n, m must be >= 1");
  if (n == m) throw DomainError("verify_remark needs n != m");
  auto t0 = std::chrono::steady_clock::now();
  RelationReport r;
  r.relation = bracket_label("e'_" + RootLabel(n, 0).to_string(), "e_" + RootLabel(-m, 0).to_string());
  r.n = n;
  r.m = m;
  r.residual = reduced_bracket(table.primed(n), table.vector(RootLabel(-m, 0)), sys);
  r.pass = !r.residual.is_zero();
  r.bound_used = sys.bound();
  r.wall_time = seconds_since(t0);
  return r;
}

RelationReport verify_imaginary_commute(int n, int m, const RewriteSystem& sys, RootVectorTable& table) {
  auto t0 = std::chrono::steady_clock::now();
  RelationReport r;
  r.relation = bracket_label("e_" + RootLabel(n, 0).to_string(), "e_" + RootLabel(m, 0).to_string());
  r.n = n;
  r.m = m;
  r.residual = reduced_bracket(table.vector(RootLabel(n, 0)), table.vector(RootLabel(m, 0)), sys);
  r.pass = r.residual.is_zero();
  r.bound_used = sys.bound();
  r.wall_time = seconds_since(t0);
  return r;
}

}  // namespace uqosp
