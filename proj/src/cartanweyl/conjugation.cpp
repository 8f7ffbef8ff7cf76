#include "uqosp/cartanweyl/conjugation.hpp"

#include <mutex>

#include "uqosp/error.hpp"

namespace uqosp {

std::string ConjugationChoice::to_string() const {
  return std::string(invert_q ? "q->q^-1" : "q->q") + ", " + (invert_k ? "k->k^-1" : "k->k");
}

Element conjugate_with(const Element& x, const ConjugationChoice& choice) {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    Word w;
    for (int i = m.word.size() - 1; i >= 0; --i) w = w + Word::single(opposite(m.word.at(i)));
    KExp k = m.k;
    if (choice.invert_k)
      for (int& e : k) e = -e;
    Scalar s = choice.invert_q ? c.conjugate() : c;
    out.add_scaled(Element::word(w) * Element::k(k), s);
  }
  return out;
}

namespace {

std::vector<Element> generator_samples() {
  std::vector<Element> g;
  for (int l = 0; l < 4; ++l) g.push_back(Element::gen(static_cast<Letter>(l)));
  g.push_back(Element::k(1, 0, 0));
  g.push_back(Element::k(0, 1, 0));
  g.push_back(Element::k(0, 0, 1));
  g.push_back(Element::k(0, -1, 0));
  return g;
}

}  // namespace

Calibration calibrate_conjugation(const RewriteSystem& sys) {
  const Scalar inv_sa = Scalar::s_a().inverse();
  const Element ea = Element::gen(kEa), ea0 = Element::gen(kEa0);
  const Element fa = Element::gen(kFa), fa0 = Element::gen(kFa0);
  const Element pos = inv_sa * qbracket(ea, ea0, 1);
  const Element neg = inv_sa * qbracket(fa0, fa, -1);
  const auto gens = generator_samples();
  const Scalar inv_qq = (Scalar::q_power(1) - Scalar::q_power(-1)).inverse();

  Calibration cal;
  for (bool iq : {false, true}) {
    for (bool ik : {false, true}) {
      CalibrationEntry e;
      e.choice = {iq, ik};
      e.matches_paired_formula = conjugate_with(pos, e.choice) == neg;
      e.anti_multiplicative = true;
      for (const auto& x : gens)
        for (const auto& y : gens)
          if (!(conjugate_with(x * y, e.choice) == conjugate_with(y, e.choice) * conjugate_with(x, e.choice)))
            e.anti_multiplicative = false;
      e.preserves_relations = true;
      for (Letter p : {kEa0, kEa}) {
        for (Letter n : {kFa0, kFa}) {
          Element pe = Element::gen(p), ne = Element::gen(n);
          Element rel = qbracket(pe, ne, 0);
          if (opposite(p) == n) {
            KExp k = p == kEa ? KExp{0, 1, 0} : KExp{0, 0, 1};
            rel -= inv_qq * (Element::k(k) - Element::k({-k[0], -k[1], -k[2]}));
          }
          if (!sys.normal_form(conjugate_with(rel, e.choice)).is_zero()) e.preserves_relations = false;
        }
      }
      cal.candidates.push_back(e);
    }
  }
  int accepted = 0;
  for (const auto& e : cal.candidates)
    if (e.accepted()) {
      ++accepted;
      cal.unique = e.choice;
    }
  if (accepted != 1) cal.unique.reset();
  return cal;
}

const ConjugationChoice& calibrated_conjugation() {
  static std::once_flag once;
  static ConjugationChoice choice;
  std::call_once(once, [] {
    auto sys = RewriteSystem::complete(4);
    auto cal = calibrate_conjugation(sys);
    if (!cal.unique) throw Error("Cartan conjugation calibration is not unique");
    choice = *cal.unique;
  });
  return choice;
}

Element cartan_conjugate(const Element& x) { return conjugate_with(x, calibrated_conjugation()); }

}  // namespace uqosp
