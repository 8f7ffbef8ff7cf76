#include "uqosp/superalg/text.hpp"

#include "uqosp/coeffield/parse.hpp"

namespace uqosp {
namespace {

struct ElementOps {
  using value_type = Element;
  Element integer(const mpz_class& z) const { return Element(Scalar(mpq_class(z))); }
  Element identifier(const std::string& name) const {
    if (name == "q") return Element(Scalar::q_power(1));
    if (name == "s_a") return Element(Scalar::s_a());
    if (name == "s_b") return Element(Scalar::s_b());
    if (name == "k_d") return Element::k(1, 0, 0);
    if (name == "k_a") return Element::k(0, 1, 0);
    if (name == "k_a0") return Element::k(0, 0, 1);
    throw ParseError("unknown identifier '" + name + "'");
  }
  Element generator(const std::string& inside) const {
    auto r = RootLabel::parse(inside);
    if (r) {
      for (int l = 0; l < 4; ++l) {
        Weight w = letter_weight(static_cast<Letter>(l));
        if (w.c_delta == r->c_delta() && w.c_alpha == r->c_alpha()) return Element::gen(static_cast<Letter>(l));
      }
    }
    throw ParseError("E(" + inside + ") is not a Chevalley generator");
  }
  static std::optional<Scalar> as_scalar(const Element& x) {
    if (x.is_zero()) return Scalar();
    if (x.size() != 1) return std::nullopt;
    const auto& [m, c] = *x.terms().begin();
    if (!m.word.empty() || m.k != KExp{0, 0, 0}) return std::nullopt;
    return c;
  }
  Element divide(const Element& x, const Element& y) const {
    auto s = as_scalar(y);
    if (!s) throw ParseError("division by a non-scalar");
    if (s->is_zero()) throw ParseError("division by zero");
    return s->inverse() * x;
  }
  Element power(const Element& x, int e) const {
    if (auto s = as_scalar(x)) return Element(scalar_pow(*s, e));
    if (x.size() == 1) {
      const auto& [m, c] = *x.terms().begin();
      if (m.word.empty() && c.is_one())
        return Element::k(m.k[0] * e, m.k[1] * e, m.k[2] * e);
    }
    if (e < 0) throw ParseError("negative power of a non-invertible element");
    Element r(1);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
  }
};

void append_k(std::string& out, const char* name, int e) {
  if (e == 0) return;
  if (!out.empty()) out += " * ";
  out += name;
  if (e != 1) out += "^" + std::to_string(e);
}

}  // namespace

std::string monomial_to_string(const Monomial& m) {
  std::string out;
  append_k(out, "k_d", m.k[kKd]);
  append_k(out, "k_a", m.k[kKa]);
  append_k(out, "k_a0", m.k[kKa0]);
  for (int i = 0; i < m.word.size(); ++i) {
    if (!out.empty()) out += " * ";
    out += letter_name(m.word.at(i));
  }
  return out.empty() ? "1" : out;
}

std::string Element::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : sorted()) {
    std::string mono = monomial_to_string(m);
    bool unit = mono == "1";
    if (c.is_one()) {
      if (!out.empty()) out += " + ";
      out += mono;
    } else if ((-c).is_one()) {
      out += out.empty() ? "-" : " - ";
      out += mono;
    } else {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      if (!unit) out += " * " + mono;
    }
  }
  return out;
}

Element parse_element(std::string_view text) { return ExprParser<ElementOps>(text, ElementOps{}).parse(); }

}  // namespace uqosp
