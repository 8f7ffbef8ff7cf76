#pragma once

#include <string>

#include "uqosp/classical/supermatrix.hpp"
#include "uqosp/rootsys/rootsys.hpp"

namespace uqosp {

/// a(u) + central*c + derivation*d in the centrally extended loop superalgebra
/// with derivation.
struct LoopElement {
  SuperMatrix matrix;
  Surd central;
  Surd derivation;

  static LoopElement from(const SuperMatrix& m) { return {m, Surd(), Surd()}; }
  static LoopElement c() { return {SuperMatrix(), Surd(1), Surd()}; }
  static LoopElement d() { return {SuperMatrix(), Surd(), Surd(1)}; }

  bool is_zero() const { return matrix.is_zero() && central.is_zero() && derivation.is_zero(); }
  /// Parity of the matrix part; c and d are even.
  std::optional<int> parity() const { return matrix.parity(); }

  LoopElement& operator+=(const LoopElement& o);
  LoopElement& operator-=(const LoopElement& o);
  friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
  friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
  friend LoopElement operator*(const Surd& s, const LoopElement& x);
  LoopElement operator-() const { return Surd(-1) * *this; }
  friend bool operator==(const LoopElement& a, const LoopElement& b) {
    return a.matrix == b.matrix && a.central == b.central && a.derivation == b.derivation;
  }

  std::string to_string() const;
};

/// Normalization constant kappa of (a|b) = kappa str(ab), fixed by requiring
/// [e_d, e_{-d}] = -c for the realized vectors.
Surd killing_normalization();
/// kappa str(ab); DomainError for u-dependent input.
Surd killing_form(const SuperMatrix& a, const SuperMatrix& b);
/// (x|y)_L: the form extended u-linearly.
USeries loop_form(const SuperMatrix& x, const SuperMatrix& y);

/// psi(a u^n, b u^m) = n delta_{n,-m} (a|b), extended bilinearly.
Surd cocycle(const LoopElement& x, const LoopElement& y);
/// Res (dx/du | y)_L.
Surd cocycle_residue(const LoopElement& x, const LoopElement& y);

/// Bracket of the extended loop superalgebra.
LoopElement loop_bracket(const LoopElement& x, const LoopElement& y);

enum class ChevalleyGen { h_d, h_a0, h_a, e_a, f_a, e_a0, f_a0 };
/// Image of a Chevalley generator (f = e_{-beta}).
LoopElement chevalley_image(ChevalleyGen g);
std::string chevalley_name(ChevalleyGen g);

/// h_{n d + m a} = n c + m h_a.
LoopElement coroot(int c_delta, int c_alpha);

/// Current realization of the root vector e_root; e_{+-n d} for imaginary
/// roots. Non-roots raise DomainError through RootLabel.
LoopElement realize(const RootLabel& root);

}  // namespace uqosp
