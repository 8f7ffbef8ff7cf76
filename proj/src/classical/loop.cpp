#include "uqosp/classical/loop.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

#include "uqosp/coeffield/config.hpp"
#include "uqosp/error.hpp"

namespace uqosp {

LoopElement& LoopElement::operator+=(const LoopElement& o) {
  matrix += o.matrix;
  central += o.central;
  derivation += o.derivation;
  return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& o) {
  matrix -= o.matrix;
  central -= o.central;
  derivation -= o.derivation;
  return *this;
}

LoopElement operator*(const Surd& s, const LoopElement& x) {
  return {s * x.matrix, s * x.central, s * x.derivation};
}

std::string LoopElement::to_string() const {
  std::ostringstream os;
  os << matrix.to_string() << "\n";
  os << "c: " << central.to_string() << "\n";
  os << "d: " << derivation.to_string();
  return os.str();
}

namespace {

Surd sign(int n) { return (n % 2 == 0) ? Surd(1) : Surd(-1); }

}  // namespace

Surd killing_normalization() {
  // matrix parts of e_d and e_{-d}, which do not involve the form
  SuperMatrix x = Surd::sqrt(alpha_sq()).inverse() * osp_h();
  SuperMatrix y = -(Surd::sqrt(alpha_sq()).inverse() * osp_h());
  Surd s = (x * y).supertrace().coeff(0);
  return -s.inverse();
}

Surd killing_form(const SuperMatrix& a, const SuperMatrix& b) {
  if (!a.is_u_independent() || !b.is_u_independent())
    throw DomainError("killing_form takes u-independent matrices");
  return killing_normalization() * (a * b).supertrace().coeff(0);
}

USeries loop_form(const SuperMatrix& x, const SuperMatrix& y) {
  return killing_normalization() * (x * y).supertrace();
}

Surd cocycle(const LoopElement& x, const LoopElement& y) {
  Surd kappa = killing_normalization();
  std::set<int> dx;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (const auto& [n, c] : x.matrix.at(i, j).terms()) dx.insert(n);
  Surd r;
  for (int n : dx) {
    if (n == 0) continue;
    SuperMatrix a = x.matrix.degree_part(n).shifted(-n);
    SuperMatrix b = y.matrix.degree_part(-n).shifted(n);
    Surd ab = (a * b).supertrace().coeff(0);
    if (!ab.is_zero()) r += Surd(n) * kappa * ab;
  }
  return r;
}

Surd cocycle_residue(const LoopElement& x, const LoopElement& y) {
  SuperMatrix dx;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) dx.at(i, j) = x.matrix.at(i, j).derivative();
  return loop_form(dx, y.matrix).coeff(-1);
}

LoopElement loop_bracket(const LoopElement& x, const LoopElement& y) {
  LoopElement r;
  r.matrix = supercommutator(x.matrix, y.matrix);
  r.central = cocycle(x, y);
  auto euler = [](const SuperMatrix& m) {
    SuperMatrix out;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& [n, c] : m.at(i, j).terms()) out.at(i, j) += USeries(Surd(n) * c, n);
    return out;
  };
  if (!x.derivation.is_zero()) r.matrix += x.derivation * euler(y.matrix);
  if (!y.derivation.is_zero()) r.matrix -= y.derivation * euler(x.matrix);
  return r;
}

LoopElement chevalley_image(ChevalleyGen g) {
  Surd root = Surd::sqrt(mpq_class(2) / alpha_sq());
  switch (g) {
    case ChevalleyGen::h_d: return LoopElement::d();
    case ChevalleyGen::h_a0: return LoopElement::c() - Surd(2) * LoopElement::from(osp_h());
    case ChevalleyGen::h_a: return LoopElement::from(osp_h());
    case ChevalleyGen::e_a: return LoopElement::from(osp_e(1));
    case ChevalleyGen::f_a: return LoopElement::from(osp_e(-1));
    case ChevalleyGen::e_a0: return LoopElement::from(-root * osp_e(-2).shifted(1));
    case ChevalleyGen::f_a0: return LoopElement::from(root * osp_e(2).shifted(-1));
  }
  throw DomainError("unknown Chevalley generator");
}

std::string chevalley_name(ChevalleyGen g) {
  switch (g) {
    case ChevalleyGen::h_d: return "h_d";
    case ChevalleyGen::h_a0: return "h_a0";
    case ChevalleyGen::h_a: return "h_a";
    case ChevalleyGen::e_a: return "e_a";
    case ChevalleyGen::f_a: return "e_-a";
    case ChevalleyGen::e_a0: return "e_a0";
    case ChevalleyGen::f_a0: return "e_-a0";
  }
  return "?";
}

LoopElement coroot(int c_delta, int c_alpha) {
  return Surd(c_delta) * LoopElement::c() + Surd(c_alpha) * LoopElement::from(osp_h());
}

LoopElement realize(const RootLabel& root) {
  const int cd = root.c_delta(), ca = root.c_alpha();
  const int n = std::abs(cd);
  const bool upper = cd > 0 || (cd == 0 && ca > 0);
  if (ca == 0) {
    Surd inv = Surd::sqrt(alpha_sq()).inverse();
    if (cd > 0) return LoopElement::from(sign(n + 1) * inv * osp_h().shifted(n));
    return LoopElement::from(-inv * osp_h().shifted(-n));
  }
  if (ca == 2 || ca == -2) {
    Surd root2 = Surd::sqrt(mpq_class(2) / alpha_sq());
    Surd f = upper ? sign(n) * root2 : root2;
    return LoopElement::from(f * osp_e(ca).shifted(cd));
  }
  // odd roots: e_{nd+-a} = +-(-1)^n e_{+-a} u^n, e_{-nd-+a} = +-e_{-+a} u^{-n}
  Surd f = upper ? Surd(ca) * sign(n) : Surd(-ca);
  return LoopElement::from(f * osp_e(ca).shifted(cd));
}

}  // namespace uqosp
