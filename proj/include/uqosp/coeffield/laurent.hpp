#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace uqosp {

/// Laurent polynomial in q with integer coefficients.
///
/// Stored densely from the lowest to the highest exponent; both ends are
/// trimmed so the representation is canonical and `==` is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const mpz_class& c, int exponent);
  /// q^n
  static LaurentPoly q_power(int n) { return monomial(1, n); }
  static LaurentPoly from_coefficients(int low, std::vector<mpz_class> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_constant() const { return c_.empty() || (low_ == 0 && c_.size() == 1); }
  /// Single nonzero term.
  bool is_monomial() const { return c_.size() == 1; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  /// Exponent span high() - low().
  int span() const { return static_cast<int>(c_.size()) - 1; }
  mpz_class coeff(int exponent) const;
  const std::vector<mpz_class>& coefficients() const { return c_; }
  const mpz_class& lowest_coeff() const { return c_.front(); }
  const mpz_class& highest_coeff() const { return c_.back(); }
  /// Nonnegative gcd of the coefficients.
  mpz_class content() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpz_class& c);
  /// Exact division of every coefficient.
  LaurentPoly& divide_exact(const mpz_class& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const mpz_class& c) { return a *= c; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }

  /// Multiply by q^n.
  LaurentPoly shifted(int n) const;
  /// The substitution q -> q^{-1}.
  LaurentPoly inverted() const;
  /// Value at q = 1.
  mpz_class at_one() const;
  /// Value at a nonzero rational.
  mpq_class evaluate(const mpq_class& q) const;

  /// Ordinary polynomial obtained by dividing out q^low.
  LaurentPoly stripped() const;

  /// Quotient of a by an ordinary polynomial b (b.low() == 0) when it is
  /// exact in Z[q, q^-1]; returns false otherwise.
  static bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot);
  /// As try_divide but throws when the division is inexact.
  static LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);
  /// Primitive gcd of the stripped polynomials with positive leading
  /// coefficient; gcd(0, 0) is 0.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  /// Rendering with every coefficient divided by `divisor`.
  std::string to_string(const mpz_class& divisor = 1, const std::string& var = "q") const;

 private:
  void trim();

  int low_ = 0;
  std::vector<mpz_class> c_;
};

}  // namespace uqosp
