#include "uqosp/cartanweyl/table.hpp"

#include <cstdlib>

#include "uqosp/cartanweyl/schur.hpp"
#include "uqosp/error.hpp"

namespace uqosp {

RootVectorTable::RootVectorTable(int cutoff, Direction direction) : cutoff_(cutoff), direction_(direction) {
  if (cutoff < 1) throw DomainError("root vector table needs cutoff >= 1");
  if (direction != Direction::clockwise)
    throw DomainError("root vector recursions are only given for the clockwise normal ordering");
}

Scalar table_kappa(int sign) {
  Scalar k = (Scalar::q_power(1) - Scalar::q_power(-1)) * Scalar::s_b();
  return sign > 0 ? k : -k;
}

Element RootVectorTable::k_of(int c_delta, int c_alpha) { return Element::k(composite_k(c_delta, c_alpha)); }

Element RootVectorTable::cartan_term(int c_delta, int c_alpha) {
  KExp k = composite_k(c_delta, c_alpha);
  Scalar inv_qq = (Scalar::q_power(1) - Scalar::q_power(-1)).inverse();
  return inv_qq * (Element::k(k) - Element::k({-k[0], -k[1], -k[2]}));
}

const Element& RootVectorTable::vector(const RootLabel& root) {
  if (root.is_double()) throw DomainError("no root vector for the double root " + root.to_string());
  if (std::abs(root.c_delta()) > cutoff_)
    throw DomainError("root " + root.to_string() + " is beyond the table cutoff " + std::to_string(cutoff_));
  auto it = vectors_.find(root);
  if (it != vectors_.end()) return it->second;
  Element v = compute(root.c_delta(), root.c_alpha());
  return vectors_.emplace(root, std::move(v)).first->second;
}

const Element& RootVectorTable::primed(int n) {
  if (n == 0 || std::abs(n) > cutoff_) throw DomainError("e' index out of range: " + std::to_string(n));
  auto it = primed_.find(n);
  if (it != primed_.end()) return it->second;
  Element v = compute_primed(n);
  return primed_.emplace(n, std::move(v)).first->second;
}

namespace {

RecursionStep make_step(const RootLabel& l, const RootLabel& r, const Scalar& c, BracketMode mode) {
  std::string suffix = mode == BracketMode::q ? "_q" : mode == BracketMode::q_inverse ? "_q^-1" : "";
  return {"[e_" + l.to_string() + ", e_" + r.to_string() + "]" + suffix, l, r, c, mode};
}

}  // namespace

RecursionStep primed_step(int n) {
  const Scalar inv_sb = Scalar::s_b().inverse();
  if (n > 0) return make_step(RootLabel(0, 1), RootLabel(n, -1), inv_sb, BracketMode::q);
  return make_step(RootLabel(n, 1), RootLabel(0, -1), inv_sb, BracketMode::q_inverse);
}

std::optional<RecursionStep> recursion_step(const RootLabel& target) {
  const int cd = target.c_delta(), ca = target.c_alpha();
  const Scalar inv_sa = Scalar::s_a().inverse();
  const Scalar inv_sb = Scalar::s_b().inverse();
  using R = RootLabel;
  if ((cd == 0 && (ca == 1 || ca == -1)) || (cd == 1 && ca == -2) || (cd == -1 && ca == 2)) return std::nullopt;
  if (cd == 1 && ca == -1) return make_step(R(0, 1), R(1, -2), inv_sa, BracketMode::q);
  if (cd == -1 && ca == 1) return make_step(R(-1, 2), R(0, -1), inv_sa, BracketMode::q_inverse);
  if (ca == 0) {
    if (cd == 1) return make_step(R(0, 1), R(1, -1), inv_sb, BracketMode::q);
    if (cd == -1) return make_step(R(-1, 1), R(0, -1), inv_sb, BracketMode::q_inverse);
    return std::nullopt;
  }
  if (ca == 1 && cd > 0) return make_step(R(cd - 1, 1), R(1, 0), inv_sb, BracketMode::plain);
  if (ca == -1 && cd < 0) return make_step(R(-1, 0), R(cd + 1, -1), inv_sb, BracketMode::plain);
  if (ca == -1 && cd > 0) return make_step(R(1, 0), R(cd - 1, -1), inv_sb, BracketMode::plain);
  if (ca == 1 && cd < 0) return make_step(R(cd + 1, 1), R(-1, 0), inv_sb, BracketMode::plain);
  if (ca == 2 && cd > 0) {
    int n = (cd + 1) / 2;
    return make_step(R(n - 1, 1), R(n, 1), inv_sa, BracketMode::q);
  }
  if (ca == -2 && cd < 0) {
    int n = (-cd + 1) / 2;
    return make_step(R(-n, -1), R(-(n - 1), -1), inv_sa, BracketMode::q_inverse);
  }
  if (ca == -2 && cd > 0) {
    int n = (cd - 1) / 2;
    return make_step(R(n + 1, -1), R(n, -1), inv_sa, BracketMode::q);
  }
  if (ca == 2 && cd < 0) {
    int n = (-cd - 1) / 2;
    return make_step(R(-n, 1), R(-(n + 1), 1), inv_sa, BracketMode::q_inverse);
  }
  throw DomainError("no recursion for root " + target.to_string());
}

Element RootVectorTable::compute_primed(int n) {
  RecursionStep st = primed_step(n);
  return st.coefficient * qbracket(vector(st.left), vector(st.right), st.mode);
}

Element RootVectorTable::compute(int cd, int ca) {
  const RootLabel target(cd, ca);
  if (cd == 0 && ca == 1) return Element::gen(kEa);
  if (cd == 0 && ca == -1) return Element::gen(kFa);
  if (cd == 1 && ca == -2) return Element::gen(kEa0);
  if (cd == -1 && ca == 2) return Element::gen(kFa0);
  if (ca == 0 && std::abs(cd) >= 2) {
    int n = std::abs(cd);
    int sign = cd > 0 ? 1 : -1;
    std::vector<Element> family;
    for (int k = 1; k <= n; ++k) family.push_back(primed(sign * k));
    return schur_inverse(n, family, table_kappa(sign));
  }
  RecursionStep st = *recursion_step(target);
  Element left = vector(st.left);
  return st.coefficient * qbracket(left, vector(st.right), st.mode);
}

std::vector<RootLabel> RootVectorTable::roots() const {
  std::vector<RootLabel> out;
  for (int cd = -cutoff_; cd <= cutoff_; ++cd)
    for (int ca = -2; ca <= 2; ++ca)
      if (RootLabel::is_root(cd, ca)) {
        RootLabel r(cd, ca);
        if (!r.is_double()) out.push_back(r);
      }
  return out;
}

void RootVectorTable::build_all() {
  for (const auto& r : roots()) vector(r);
  for (int n = 1; n <= cutoff_; ++n) {
    primed(n);
    primed(-n);
  }
}

RootVectorTable build_root_vectors(int n_max, Direction direction) {
  RootVectorTable t(n_max, direction);
  t.build_all();
  return t;
}

}  // namespace uqosp
