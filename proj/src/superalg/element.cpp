#include "uqosp/superalg/element.hpp"

#include "uqosp/error.hpp"

namespace uqosp {

Element::Element(const Scalar& s) {
  if (!s.is_zero()) add(Monomial{}, s);
}

Element Element::gen(Letter l) { return Element(Monomial{{0, 0, 0}, Word::single(l)}, Scalar(1)); }

Element Element::k(int kd, int ka, int ka0) { return Element(Monomial{{kd, ka, ka0}, Word{}}, Scalar(1)); }

Element Element::word(const Word& w) { return Element(Monomial{{0, 0, 0}, w}, Scalar(1)); }

int monomial_product(const Monomial& a, const Monomial& b, Monomial& out) {
  out.k = a.k + b.k;
  out.word = a.word + b.word;
  return -k_pairing(b.k, a.word.weight());
}

Element operator*(const Element& x, const Element& y) {
  Element r;
  for (const auto& [m1, c1] : x.terms()) {
    for (const auto& [m2, c2] : y.terms()) {
      Monomial m;
      int e = monomial_product(m1, m2, m);
      Scalar c = c1 * c2;
      if (e != 0) c *= RatFunc::q_power(e);
      r.add(m, c);
    }
  }
  return r;
}

Element operator*(const Scalar& s, const Element& x) {
  Element r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : x.terms()) r.add(m, s * c);
  return r;
}

Element multiply(const Element& x, const Element& y) { return x * y; }

std::optional<WeightParity> weight_parity(const Element& x) {
  std::optional<WeightParity> wp;
  for (const auto& [m, c] : x.terms()) {
    WeightParity here{m.weight(), m.parity()};
    if (!wp) wp = here;
    else if (wp->weight != here.weight || wp->parity != here.parity) return std::nullopt;
  }
  if (!wp) wp = WeightParity{};
  return wp;
}

namespace {

WeightParity require_homogeneous(const Element& x, const char* which) {
  auto wp = weight_parity(x);
  if (!wp) {
    std::string msg = std::string("qbracket: ") + which + " argument is inhomogeneous:";
    for (const auto& [m, c] : x.sorted())
      msg += " [" + Element(m, Scalar(1)).to_string() + " : " + m.weight().to_string() + ", parity " +
             std::to_string(m.parity()) + "]";
    throw DomainError(msg);
  }
  return *wp;
}

}  // namespace

Element qbracket(const Element& x, const Element& y, int e) {
  if (x.is_zero() || y.is_zero()) return {};
  WeightParity wx = require_homogeneous(x, "first");
  WeightParity wy = require_homogeneous(y, "second");
  mpq_class p = pairing(wx.weight, wy.weight) * e;
  if (p.get_den() != 1) throw DomainError("qbracket: non-integral q exponent");
  int exponent = static_cast<int>(p.get_num().get_si());
  Scalar c = Scalar::q_power(exponent);
  if (wx.parity & wy.parity) c = -c;
  return x * y - c * (y * x);
}

Element qbracket(const Element& x, const Element& y, BracketMode mode) {
  switch (mode) {
    case BracketMode::q: return qbracket(x, y, 1);
    case BracketMode::plain: return qbracket(x, y, 0);
    case BracketMode::q_inverse: return qbracket(x, y, -1);
  }
  return {};
}

Element element_q_power(int n) { return Element(Scalar::q_power(n)); }

}  // namespace uqosp
