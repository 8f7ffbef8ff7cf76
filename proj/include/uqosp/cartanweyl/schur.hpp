#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "uqosp/coeffield/scalar.hpp"

namespace uqosp {

/// All (p_1, ..., p_n) with p_1 + 2 p_2 + ... + n p_n = n, in lexicographic
/// order of the vectors.
std::vector<std::vector<int>> weighted_partitions(int n);

/// The deformation parameter q - q^{-1}.
Scalar default_kappa();

/// Polynomial in commuting indeterminates x_1, x_2, ... with Scalar
/// coefficients.
class FormalPoly {
 public:
  using Exponents = std::vector<int>;

  FormalPoly() = default;
  FormalPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static FormalPoly variable(int i);

  bool is_zero() const { return t_.empty(); }
  const std::map<Exponents, Scalar>& terms() const { return t_; }

  FormalPoly& operator+=(const FormalPoly& o);
  FormalPoly& operator-=(const FormalPoly& o);
  friend FormalPoly operator+(FormalPoly a, const FormalPoly& b) { return a += b; }
  friend FormalPoly operator-(FormalPoly a, const FormalPoly& b) { return a -= b; }
  friend FormalPoly operator*(const FormalPoly& a, const FormalPoly& b);
  friend FormalPoly operator*(const Scalar& s, const FormalPoly& a);
  friend bool operator==(const FormalPoly& a, const FormalPoly& b) { return a.t_ == b.t_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void add(Exponents e, const Scalar& c);
  std::map<Exponents, Scalar> t_;
};

namespace detail {

template <class T>
T ordered_power_product(const std::vector<int>& p, const std::vector<T>& family) {
  T term(Scalar(1));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) term = term * family[i];
  return term;
}

inline mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace detail

/// e'_n = sum over weighted partitions of kappa^{s-1}/(p_1!...p_n!) e_1^{p_1}
/// ... e_n^{p_n}, s = p_1 + ... + p_n. `family[k-1]` is e_k.
template <class T>
T schur_forward(int n, const std::vector<T>& family, const Scalar& kappa) {
  T out;
  for (const auto& p : weighted_partitions(n)) {
    int s = 0;
    mpz_class den = 1;
    for (int v : p) {
      s += v;
      den *= detail::factorial(v);
    }
    Scalar c = Scalar(mpq_class(1, den));
    for (int i = 1; i < s; ++i) c = c * kappa;
    out += c * detail::ordered_power_product(p, family);
  }
  return out;
}

/// Inverse transform: coefficient (-kappa)^{s-1} (s-1)!/(p_1!...p_n!).
template <class T>
T schur_inverse(int n, const std::vector<T>& family, const Scalar& kappa) {
  T out;
  for (const auto& p : weighted_partitions(n)) {
    int s = 0;
    mpz_class den = 1;
    for (int v : p) {
      s += v;
      den *= detail::factorial(v);
    }
    Scalar c = Scalar(mpq_class(detail::factorial(s - 1), den));
    for (int i = 1; i < s; ++i) c = c * -kappa;
    out += c * detail::ordered_power_product(p, family);
  }
  return out;
}

struct SchurCheck {
  int order = 0;
  bool roundtrip = true;
  bool generating_function = true;
  /// First order at which a check failed, 0 when both hold.
  int first_failure = 0;
};

/// Over commuting indeterminates x_1..x_order: schur_inverse(schur_forward)
/// is the identity, and 1 + K'(t) = exp K(t) coefficientwise through t^order
/// where K(t) = kappa sum x_n t^n and K'(t) = kappa sum e'_n t^n.
SchurCheck check_schur(int order, const Scalar& kappa);

}  // namespace uqosp
