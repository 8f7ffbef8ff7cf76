#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uqosp/coeffield/scalar.hpp"
#include "uqosp/superalg/generators.hpp"

namespace uqosp {

/// Finite linear combination of monomials; zero coefficients are never stored.
template <class C>
class LinComb {
 public:
  using Map = std::unordered_map<Monomial, C, MonomialHash>;

  LinComb() = default;
  LinComb(const Monomial& m, C c) { add(m, std::move(c)); }

  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const Map& terms() const { return t_; }
  C coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? C() : it->second;
  }

  void add(const Monomial& m, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  void add(const LinComb& o) {
    for (const auto& [m, c] : o.t_) add(m, c);
  }
  template <class S>
  void add_scaled(const LinComb& o, const S& s) {
    if (s.is_zero()) return;
    for (const auto& [m, c] : o.t_) add(m, c * s);
  }

  /// Terms sorted by the monomial order.
  std::vector<std::pair<Monomial, C>> sorted() const {
    std::vector<std::pair<Monomial, C>> v(t_.begin(), t_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }
  /// Largest monomial; undefined on zero.
  const Monomial& leading() const {
    auto best = t_.begin();
    for (auto it = t_.begin(); it != t_.end(); ++it)
      if (best->first < it->first) best = it;
    return best->first;
  }
  int max_word_length() const {
    int n = 0;
    for (const auto& [m, c] : t_) n = std::max(n, m.word.size());
    return n;
  }

  LinComb& operator+=(const LinComb& o) {
    add(o);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  LinComb operator-() const {
    LinComb r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
  }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.t_ == b.t_; }

 private:
  Map t_;
};

/// Element of the superalgebra: Scalar-linear combination of Cartan-left
/// monomials.
class Element : public LinComb<Scalar> {
 public:
  using LinComb<Scalar>::LinComb;
  Element() = default;
  Element(const LinComb<Scalar>& l) : LinComb<Scalar>(l) {}  // NOLINT(google-explicit-constructor)
  Element(const Scalar& s);  // NOLINT(google-explicit-constructor)
  Element(long c) : Element(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static Element gen(Letter l);
  /// k_d^x k_a^y k_a0^z.
  static Element k(int kd, int ka, int ka0);
  static Element k(const KExp& e) { return k(e[0], e[1], e[2]); }
  static Element word(const Word& w);

  friend Element operator*(const Element& x, const Element& y);
  friend Element operator*(const Scalar& s, const Element& x);
  friend Element operator*(const Element& x, const Scalar& s) { return s * x; }
  friend Element operator+(Element a, const Element& b) {
    a += b;
    return a;
  }
  friend Element operator-(Element a, const Element& b) {
    a -= b;
    return a;
  }
  Element operator-() const { return Element(LinComb<Scalar>::operator-()); }

  std::string to_string() const;
};

/// Product of two monomials: (k1 w1)(k2 w2) = q^{-(k2, wt w1)} (k1 k2) w1 w2;
/// returns the q-exponent.
int monomial_product(const Monomial& a, const Monomial& b, Monomial& out);

Element multiply(const Element& x, const Element& y);

struct WeightParity {
  Weight weight;
  int parity = 0;
};
/// Common weight and parity of all monomials; nullopt when inhomogeneous
/// (zero counts as homogeneous of weight 0, parity 0).
std::optional<WeightParity> weight_parity(const Element& x);

/// Bracket xy - (-1)^{|x||y|} q^{e (wt x, wt y)} yx with e = 1 (q-deformed),
/// 0 (plain) or -1 (the q^{-1} variant). Inhomogeneous input raises
/// DomainError listing the monomials.
Element qbracket(const Element& x, const Element& y, int e = 1);

enum class BracketMode { q, plain, q_inverse };
Element qbracket(const Element& x, const Element& y, BracketMode mode);

/// Integer power of the generator q as an element.
Element element_q_power(int n);

}  // namespace uqosp
