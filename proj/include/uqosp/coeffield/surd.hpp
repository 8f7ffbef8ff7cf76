#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace uqosp {

/// Exact element of Q adjoined square roots: a finite sum of c_r * sqrt(r)
/// over squarefree positive integers r (r = 1 is the rational part).
class Surd {
 public:
  Surd() = default;
  Surd(long c);  // NOLINT(google-explicit-constructor)
  Surd(const mpq_class& c);  // NOLINT(google-explicit-constructor)

  /// Positive square root of a nonnegative rational.
  static Surd sqrt(const mpq_class& x);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Rational part (coefficient of sqrt(1)).
  mpq_class rational_part() const;
  /// Coefficient of sqrt(r) for squarefree r.
  mpq_class coeff(const mpz_class& radicand) const;
  const std::map<mpz_class, mpq_class>& terms() const { return terms_; }

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(const Surd& a, const Surd& b);
  Surd operator-() const;
  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }

  /// Inverse; supported when the value is c*sqrt(r) (single term).
  Surd inverse() const;
  /// Floating-point approximation, for display only.
  double approx() const;

  /// "1/2 + 3*sqrt(2)"
  std::string to_string() const;

 private:
  void add_term(const mpz_class& radicand, const mpq_class& c);

  std::map<mpz_class, mpq_class> terms_;
};

}  // namespace uqosp
