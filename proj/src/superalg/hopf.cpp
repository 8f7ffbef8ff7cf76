#include "uqosp/superalg/hopf.hpp"

#include <array>

#include "uqosp/superalg/text.hpp"

namespace uqosp {
namespace {

Tensor coproduct_letter(Letter l) {
  Element x = Element::gen(l);
  Element k = Element::k(letter_k(l));
  if (is_positive(l)) {
    Element kinv = Element::k(-letter_k(l));
    return Tensor::pure({x, Element(1)}) + Tensor::pure({kinv, x});
  }
  return Tensor::pure({x, k}) + Tensor::pure({Element(1), x});
}

Tensor coproduct_monomial(const Monomial& m) {
  Element k = Element::k(m.k);
  Tensor t = Tensor::pure({k, k});
  for (int i = 0; i < m.word.size(); ++i) t = t * coproduct_letter(m.word.at(i));
  return t;
}

Element antipode_letter(Letter l) {
  Element x = Element::gen(l);
  if (is_positive(l)) return -(Element::k(letter_k(l)) * x);
  return -(x * Element::k(-letter_k(l)));
}

Element antipode_monomial(const Monomial& m) {
  Element r(1);
  for (int i = m.word.size() - 1; i >= 0; --i) r = r * antipode_letter(m.word.at(i));
  int odd = m.word.odd_count();
  if ((odd * (odd - 1) / 2) & 1) r = -r;
  return r * Element::k(-m.k);
}

Tensor scalar_tensor(const Scalar& s) {
  Tensor t(0);
  t.add(Tensor::Key{}, s);
  return t;
}

}  // namespace

KExp letter_k(Letter l) { return (l == kEa || l == kFa) ? KExp{0, 1, 0} : KExp{0, 0, 1}; }

Tensor coproduct(const Element& x) {
  Tensor out(2);
  for (const auto& [m, c] : x.terms()) out.add_scaled(coproduct_monomial(m), c);
  return out;
}

Element antipode(const Element& x) {
  Element out;
  for (const auto& [m, c] : x.terms()) out += c * antipode_monomial(m);
  return out;
}

Scalar counit(const Element& x) {
  Scalar s;
  for (const auto& [m, c] : x.terms())
    if (m.word.empty()) s += c;
  return s;
}

Tensor coproduct_left(const Tensor& t) {
  return t.map_slot(0, [](const Monomial& m) { return coproduct_monomial(m); });
}

Tensor coproduct_right(const Tensor& t) {
  return t.map_slot(1, [](const Monomial& m) { return coproduct_monomial(m); });
}

namespace {

Element collapse(const Tensor& t) {
  Element out;
  for (const auto& [k, c] : t.terms()) out.add(k.at(0), c);
  return out;
}

}  // namespace

Element counit_left(const Tensor& t) {
  return collapse(t.map_slot(0, [](const Monomial& m) { return scalar_tensor(counit(Element(m, Scalar(1)))); }));
}

Element counit_right(const Tensor& t) {
  return collapse(t.map_slot(1, [](const Monomial& m) { return scalar_tensor(counit(Element(m, Scalar(1)))); }));
}

Element antipode_left(const Tensor& t) {
  Element out;
  for (const auto& [k, c] : t.terms()) out += c * (antipode_monomial(k[0]) * Element(k[1], Scalar(1)));
  return out;
}

Element antipode_right(const Tensor& t) {
  Element out;
  for (const auto& [k, c] : t.terms()) out += c * (Element(k[0], Scalar(1)) * antipode_monomial(k[1]));
  return out;
}

std::vector<std::pair<std::string, Element>> hopf_generators() {
  std::vector<std::pair<std::string, Element>> g;
  const std::array<std::pair<const char*, KExp>, 3> ks{
      {{"k_d", {1, 0, 0}}, {"k_a", {0, 1, 0}}, {"k_a0", {0, 0, 1}}}};
  for (const auto& [name, e] : ks) {
    g.emplace_back(name, Element::k(e));
    g.emplace_back(std::string(name) + "^-1", Element::k(-e));
  }
  for (Letter l : {kEa, kEa0, kFa, kFa0}) g.emplace_back(letter_name(l), Element::gen(l));
  return g;
}

CheckReport verify_hopf_axioms() {
  CheckReport r;
  for (const auto& [name, g] : hopf_generators()) {
    Tensor d = coproduct(g);
    Tensor lhs = coproduct_left(d), rhs = coproduct_right(d);
    CheckItem co{"coassociativity " + name, lhs == rhs, ""};
    if (!co.pass) co.detail = (lhs - rhs).to_string();
    r.items.push_back(co);

    Element l = counit_left(d), rr = counit_right(d);
    CheckItem cu{"counit " + name, l == g && rr == g, ""};
    if (!cu.pass) cu.detail = (l - g).to_string() + " ; " + (rr - g).to_string();
    r.items.push_back(cu);

    Element eps(counit(g));
    Element sl = antipode_left(d), sr = antipode_right(d);
    CheckItem an{"antipode " + name, sl == eps && sr == eps, ""};
    if (!an.pass) an.detail = (sl - eps).to_string() + " ; " + (sr - eps).to_string();
    r.items.push_back(an);
  }
  return r;
}

}  // namespace uqosp
