#include "uqosp/rewrite/checks.hpp"

#include <algorithm>
#include <random>

#include "uqosp/error.hpp"
#include "uqosp/superalg/hopf.hpp"

namespace uqosp {

Tensor tensor_normal_form(const Tensor& t, const RewriteSystem& sys) {
  return t.map_each([&](const Monomial& m) { return sys.normal_form(Element(m, Scalar(1))); });
}

std::vector<std::pair<std::string, Element>> defining_relations() {
  std::vector<std::pair<std::string, Element>> rels;
  const std::array<std::pair<const char*, KExp>, 3> ks{
      {{"k_d", {1, 0, 0}}, {"k_a", {0, 1, 0}}, {"k_a0", {0, 0, 1}}}};
  const std::array<Weight, 3> kw{kD, kAlpha, kAlpha0};
  for (const auto& [name, e] : ks) rels.emplace_back(std::string("k k^-1 = 1 (") + name + ")", Element::k(e) * Element::k(-e) - Element(1));
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = i + 1; j < ks.size(); ++j) {
      Element a = Element::k(ks[i].second), b = Element::k(ks[j].second);
      rels.emplace_back(std::string("[") + ks[i].first + "," + ks[j].first + "] = 0", a * b - b * a);
    }
  const Letter letters[] = {kEa, kEa0, kFa, kFa0};
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (Letter l : letters) {
      mpq_class p = pairing(kw[i], letter_weight(l));
      Element x = Element::gen(l);
      Element lhs = Element::k(ks[i].second) * x * Element::k(-ks[i].second);
      Element rhs = Scalar::q_power(static_cast<int>(p.get_num().get_si())) * x;
      rels.emplace_back(std::string(ks[i].first) + " " + letter_name(l) + " " + ks[i].first + "^-1", lhs - rhs);
    }
  const Letter pos[] = {kEa, kEa0};
  Scalar inv = (Scalar::q_power(1) - Scalar::q_power(-1)).inverse();
  for (Letter b : pos)
    for (Letter b2 : pos) {
      Element lhs = qbracket(Element::gen(b), Element::gen(opposite(b2)), 0);
      Element rhs;
      if (b == b2) rhs = inv * (Element::k(letter_k(b)) - Element::k(-letter_k(b)));
      rels.emplace_back("[" + letter_name(b) + "," + letter_name(opposite(b2)) + "]", lhs - rhs);
    }
  for (int s : {1, -1}) {
    std::string tag = s > 0 ? " (+)" : " (-)";
    rels.emplace_back("quintic Serre" + tag, serre_quintic(s));
    rels.emplace_back("cubic Serre" + tag, serre_cubic(s));
  }
  return rels;
}

CheckReport verify_hopf_relations(const RewriteSystem& sys) {
  CheckReport r;
  for (const auto& [name, rel] : defining_relations()) {
    CheckItem it{"Delta " + name, false, ""};
    try {
      Element nf = sys.normal_form(rel);
      Tensor dnf = tensor_normal_form(coproduct(rel), sys);
      it.pass = nf.is_zero() && dnf.is_zero();
      if (!nf.is_zero()) it.detail = "relation residual: " + nf.to_string();
      else if (!dnf.is_zero()) it.detail = "coproduct residual: " + dnf.to_string();
    } catch (const BoundExceeded& e) {
      it.detail = e.what();
    }
    r.items.push_back(it);
  }
  return r;
}

CheckReport verify_serre(const RewriteSystem& sys) {
  CheckReport r;
  for (int s : {1, -1}) {
    std::string tag = s > 0 ? " (+)" : " (-)";
    for (int quintic : {1, 0}) {
      CheckItem it{std::string(quintic ? "quintic Serre" : "cubic Serre") + tag, false, ""};
      try {
        Element nf = sys.normal_form(quintic ? serre_quintic(s) : serre_cubic(s));
        it.pass = nf.is_zero();
        if (!it.pass) it.detail = nf.to_string();
      } catch (const BoundExceeded& e) {
        it.detail = e.what();
      }
      r.items.push_back(it);
    }
  }
  return r;
}

CheckReport check_soundness(const RewriteSystem& sys, const SoundnessOptions& options) {
  std::mt19937_64 rng(options.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const Scalar coeffs[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar::q_power(1), Scalar::q_power(-1)};

  int path_bad = 0, idem_bad = 0, samples = 0;
  std::string path_first, idem_first;
  for (int s = 0; s < options.samples; ++s) {
    std::vector<Letter> letters(static_cast<std::size_t>(uniform(1, options.max_length)));
    for (auto& l : letters) l = static_cast<Letter>(uniform(0, 3));
    Element x;
    int terms = uniform(1, 3);
    for (int t = 0; t < terms; ++t) {
      std::shuffle(letters.begin(), letters.end(), rng);
      Word w;
      for (Letter l : letters) w = w + Word::single(l);
      KExp k{uniform(-1, 1), uniform(-2, 2), uniform(-2, 2)};
      x += coeffs[uniform(0, 4)] * (Element::k(k) * Element::word(w));
    }
    ++samples;
    Element nf = sys.normal_form(x);
    for (int p = 0; p < options.paths; ++p) {
      Element alt = sys.random_reduce(x, rng);
      if (!(alt == nf) && path_bad++ == 0) path_first = x.to_string();
    }
    if (!(sys.normal_form(nf) == nf) && idem_bad++ == 0) idem_first = x.to_string();
  }
  CheckReport r;
  std::string count = std::to_string(samples) + " samples, " + std::to_string(options.paths) + " paths each";
  r.items.push_back({"path independence", path_bad == 0,
                     path_bad ? std::to_string(path_bad) + " mismatches, first " + path_first : count});
  r.items.push_back({"normal form idempotence", idem_bad == 0,
                     idem_bad ? std::to_string(idem_bad) + " failures, first " + idem_first : count});
  return r;
}

}  // namespace uqosp
