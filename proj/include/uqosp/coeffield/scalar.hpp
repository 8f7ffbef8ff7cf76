#pragma once

#include <array>
#include <string>

#include "uqosp/coeffield/ratfunc.hpp"
#include "uqosp/coeffield/surd.hpp"

namespace uqosp {

/// Element of Q(q)(s_a, s_b), s_a^2 = a = [2(alpha,alpha)],
/// s_b^2 = b = [2(alpha,alpha)] - [(alpha,alpha)].
///
/// Coordinates on the basis {1, s_a, s_b, s_a*s_b}, indexed 0..3 (bit 0 is
/// the s_a exponent, bit 1 the s_b exponent).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long c) { c_[0] = RatFunc(c); }  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& c) { c_[0] = RatFunc(c); }  // NOLINT(google-explicit-constructor)
  Scalar(RatFunc r) { c_[0] = std::move(r); }  // NOLINT(google-explicit-constructor)
  Scalar(LaurentPoly p) { c_[0] = RatFunc(std::move(p)); }  // NOLINT(google-explicit-constructor)
  static Scalar from_coords(std::array<RatFunc, 4> coords);

  static Scalar q_power(int n) { return Scalar(RatFunc::q_power(n)); }
  static Scalar s_a();
  static Scalar s_b();
  /// a and b as rational functions under the current (alpha, alpha).
  static const RatFunc& a();
  static const RatFunc& b();

  const RatFunc& coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  bool is_one() const;
  /// Only the coordinate on 1 is nonzero.
  bool in_base_field() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const RatFunc& r);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator*(Scalar x, const RatFunc& r) { return x *= r; }
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }
  Scalar operator-() const;
  friend bool operator==(const Scalar& x, const Scalar& y) { return x.c_ == y.c_; }

  Scalar inverse() const;
  /// q -> q^{-1} on every coordinate; s_a, s_b fixed.
  Scalar conjugate() const;
  /// Value at q = 1 with s_a, s_b sent to the positive roots of a(1), b(1).
  Surd limit_q1() const;

  std::string to_string() const;

 private:
  std::array<RatFunc, 4> c_;
};

Scalar qint(int n);

enum class ArithKind { add, mul, neg, inv };
/// Dispatcher over the four field operations; `y` is ignored for neg and inv.
Scalar scalar_arith(const Scalar& x, const Scalar& y, ArithKind kind);

}  // namespace uqosp
