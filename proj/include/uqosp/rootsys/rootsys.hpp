#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uqosp {

/// c_delta*delta + c_alpha*alpha + c_d*d.
struct Weight {
  int c_delta = 0;
  int c_alpha = 0;
  int c_d = 0;

  Weight& operator+=(const Weight& o) {
    c_delta += o.c_delta;
    c_alpha += o.c_alpha;
    c_d += o.c_d;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(const Weight& a, const Weight& b) {
    return {a.c_delta - b.c_delta, a.c_alpha - b.c_alpha, a.c_d - b.c_d};
  }
  Weight operator-() const { return {-c_delta, -c_alpha, -c_d}; }
  friend Weight operator*(int k, const Weight& w) { return {k * w.c_delta, k * w.c_alpha, k * w.c_d}; }
  friend auto operator<=>(const Weight&, const Weight&) = default;
  bool is_zero() const { return c_delta == 0 && c_alpha == 0 && c_d == 0; }

  /// "3d+2a"; a nonzero d-part is appended as "+1D".
  std::string to_string() const;
};

inline constexpr Weight kDelta{1, 0, 0};
inline constexpr Weight kAlpha{0, 1, 0};
inline constexpr Weight kAlpha0{1, -2, 0};
inline constexpr Weight kD{0, 0, 1};

/// Pairing of the lattice under the current (alpha, alpha). (d, d) has no
/// value and raises DomainError.
mpq_class pairing(const Weight& w1, const Weight& w2);

/// Affine root nδ+mα (c_d = 0).
class RootLabel {
 public:
  /// Throws DomainError if (c_delta, c_alpha) is not a root.
  RootLabel(int c_delta, int c_alpha);
  static bool is_root(int c_delta, int c_alpha);
  static std::optional<RootLabel> parse(std::string_view text);

  int c_delta() const { return w_.c_delta; }
  int c_alpha() const { return w_.c_alpha; }
  const Weight& weight() const { return w_; }
  bool is_imaginary() const { return w_.c_alpha == 0; }
  bool is_real() const { return !is_imaginary(); }
  bool is_odd() const { return w_.c_alpha == 1 || w_.c_alpha == -1; }
  bool is_even() const { return !is_odd(); }
  bool is_positive() const { return w_.c_delta > 0 || (w_.c_delta == 0 && w_.c_alpha > 0); }
  bool is_negative() const { return !is_positive(); }
  /// 2a and 2nd+-2a.
  bool is_double() const { return (w_.c_alpha == 2 || w_.c_alpha == -2) && w_.c_delta % 2 == 0; }
  RootLabel operator-() const { return RootLabel(-w_.c_delta, -w_.c_alpha); }

  std::string to_string() const { return w_.to_string(); }
  friend auto operator<=>(const RootLabel& a, const RootLabel& b) {
    if (auto c = a.w_.c_delta <=> b.w_.c_delta; c != 0) return c;
    return a.w_.c_alpha <=> b.w_.c_alpha;
  }
  friend bool operator==(const RootLabel& a, const RootLabel& b) { return a.w_ == b.w_; }

 private:
  Weight w_;
};

/// 1 iff the root is odd; non-roots rejected with DomainError.
int parity(int c_delta, int c_alpha);
inline int parity(const RootLabel& r) { return r.is_odd() ? 1 : 0; }

using RatMatrix = std::vector<std::vector<mpq_class>>;

struct CartanData {
  RatMatrix standard;        // basis (alpha0, alpha)
  RatMatrix symmetric;       // basis (alpha0, alpha)
  RatMatrix extended;        // basis (d, alpha0, alpha)
  RatMatrix extended_inverse;
};

CartanData cartan_data();

/// Positive roots with c_delta <= cutoff, sorted by (c_delta, c_alpha).
std::vector<RootLabel> enumerate_positive(int cutoff, bool reduced);

enum class Direction { clockwise, anticlockwise };

/// Truncation of the two normal orderings to the reduced positive roots
/// with c_delta <= cutoff.
std::vector<RootLabel> normal_order(int cutoff, Direction direction);

struct OrderCheck {
  bool valid = true;
  /// (beta1, beta2, gamma): beta1 precedes beta2 and gamma = beta1 + beta2
  /// does not sit between them.
  std::optional<std::array<RootLabel, 3>> violation;
};

/// Pairs of two imaginary roots are exempt. Throws DomainError on
/// duplicates or non-positive roots.
OrderCheck validate_normal_order(const std::vector<RootLabel>& seq);

}  // namespace uqosp
