#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "uqosp/coeffield/surd.hpp"

namespace uqosp {

/// Laurent polynomial in u with Surd coefficients.
class USeries {
 public:
  USeries() = default;
  USeries(const Surd& c, int degree = 0);  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
  const std::map<int, Surd>& terms() const { return t_; }
  Surd coeff(int degree) const;

  USeries& operator+=(const USeries& o);
  USeries& operator-=(const USeries& o);
  friend USeries operator+(USeries a, const USeries& b) { return a += b; }
  friend USeries operator-(USeries a, const USeries& b) { return a -= b; }
  friend USeries operator*(const USeries& a, const USeries& b);
  friend USeries operator*(const Surd& s, const USeries& a);
  USeries operator-() const;
  friend bool operator==(const USeries& a, const USeries& b) { return a.t_ == b.t_; }

  /// Multiply by u^n.
  USeries shifted(int n) const;
  /// d/du.
  USeries derivative() const;

  std::string to_string() const;

 private:
  void add(int degree, const Surd& c);
  std::map<int, Surd> t_;
};

/// 3x3 supermatrix with grading (1|2): index 0 even, 1 and 2 odd.
class SuperMatrix {
 public:
  static int index_parity(int i) { return i == 0 ? 0 : 1; }
  /// Matrix unit E_{ij} scaled by c u^degree.
  static SuperMatrix unit(int i, int j, const Surd& c = 1, int degree = 0);

  const USeries& at(int i, int j) const { return e_[i][j]; }
  USeries& at(int i, int j) { return e_[i][j]; }
  bool is_zero() const;
  bool is_u_independent() const;

  SuperMatrix& operator+=(const SuperMatrix& o);
  SuperMatrix& operator-=(const SuperMatrix& o);
  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator*(const Surd& s, const SuperMatrix& a);
  SuperMatrix operator-() const;
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) { return a.e_ == b.e_; }

  /// Multiply every entry by u^n.
  SuperMatrix shifted(int n) const;
  /// Entries of block parity p.
  SuperMatrix parity_part(int p) const;
  /// Common block parity of the nonzero entries (0 for zero); nullopt when
  /// mixed.
  std::optional<int> parity() const;
  /// Even block trace minus odd block trace.
  USeries supertrace() const;
  /// Coefficient of u^n entrywise.
  SuperMatrix degree_part(int n) const;

  /// One row per line, entries as Laurent polynomials in u.
  std::string to_string() const;

 private:
  std::array<std::array<USeries, 3>, 3> e_;
};

/// Supercommutator AB - (-1)^{|A||B|} BA, extended bilinearly over the
/// parity parts.
SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b);

/// The fundamental osp(1|2) basis under the current (alpha, alpha) = l:
/// h_a = l diag(0, 1, -1), e_a = E10 + E02, e_{-a} = l (E01 - E20),
/// e_{2a} = E12, e_{-2a} = -l^2 E21.
SuperMatrix osp_h();
/// e_{m a} for m in {1, -1, 2, -2}.
SuperMatrix osp_e(int m);

}  // namespace uqosp
