#pragma once

#include <string>

#include "uqosp/coeffield/laurent.hpp"

namespace uqosp {

/// Element of Q(q) as num/den.
///
/// Both parts have integer coefficients. Canonical form: `den` is an
/// ordinary polynomial with positive constant term, `num` and `den` are
/// coprime and share no integer content; zero is 0/1. Rendering divides
/// both parts by the constant term of `den`.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  static RatFunc q_power(int n) { return RatFunc(LaurentPoly::q_power(n)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// Denominator is a constant, i.e. a Laurent polynomial over Q.
  bool is_laurent() const { return den_.is_constant(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc operator-() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc inverse() const;
  /// q -> q^{-1}.
  RatFunc conjugate() const;
  bool has_pole_at_one() const;
  /// Throws PoleAtOne("1") when the denominator vanishes at q = 1.
  mpq_class at_one() const;
  mpq_class evaluate(const mpq_class& q) const;

  std::string to_string() const;

 private:
  void canonicalize();
  void normalize_content();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Symmetric q-number (q^n - q^-n)/(q - q^-1) as a Laurent polynomial.
LaurentPoly qint_poly(int n);

}  // namespace uqosp
