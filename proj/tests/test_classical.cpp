#include <doctest.h>

#include "uqosp/classical/checks.hpp"
#include "uqosp/classical/loop.hpp"
#include "uqosp/coeffield/config.hpp"
#include "uqosp/error.hpp"

using namespace uqosp;

namespace {

LoopElement at(const SuperMatrix& m, int n) { return LoopElement::from(m.shifted(n)); }

void require_all(const CheckReport& r) {
  CHECK(!r.items.empty());
  for (const auto& it : r.items) {
    INFO(it.name << ": " << it.detail);
    CHECK(it.pass);
  }
}

std::vector<SuperMatrix> basis() {
  return {osp_h(), osp_e(1), osp_e(-1), osp_e(2), osp_e(-2)};
}

}  // namespace

TEST_SUITE("classical") {
  TEST_CASE("matrix brackets of the finite part") {
    const mpq_class l = alpha_sq();
    SuperMatrix h = osp_h();
    CHECK(supercommutator(h, osp_e(1)) == Surd(l) * osp_e(1));
    CHECK(supercommutator(h, osp_e(-1)) == Surd(-l) * osp_e(-1));
    CHECK(supercommutator(h, osp_e(2)) == Surd(2 * l) * osp_e(2));
    CHECK(supercommutator(osp_e(1), osp_e(-1)) == h);
    CHECK(supercommutator(osp_e(1), osp_e(1)) == Surd(2) * osp_e(2));
    CHECK(osp_e(1) * osp_e(-1) + osp_e(-1) * osp_e(1) == h);
    CHECK(osp_e(2).parity() == 0);
    CHECK(osp_e(-1).parity() == 1);
    CHECK(!(osp_e(1) + osp_e(2)).parity());
    CHECK_THROWS_AS(osp_e(3), DomainError);
  }

  TEST_CASE("u-series") {
    USeries x = USeries(Surd(2), 3) + USeries(Surd(1), -1);
    CHECK(x.derivative() == USeries(Surd(6), 2) + USeries(Surd(-1), -2));
    CHECK(x.shifted(1).coeff(4) == Surd(2));
    CHECK((x * x).coeff(2) == Surd(4));
    CHECK(USeries(Surd(1), -1).to_string() == "u^-1");
  }

  TEST_CASE("invariant form") {
    CHECK(killing_normalization() == Surd(mpq_class(-1, 2)));
    CHECK(killing_form(osp_e(1), osp_e(-1)) == Surd(1));
    CHECK(killing_form(osp_h(), osp_e(2)).is_zero());
    CHECK(killing_form(osp_h(), osp_h()) == Surd(1));
    CHECK_THROWS_AS(killing_form(osp_h().shifted(1), osp_h()), DomainError);
    require_all(check_form());
  }

  TEST_CASE("cocycle") {
    SuperMatrix h = osp_h();
    CHECK(cocycle(at(h, 1), at(h, -1)) == killing_form(h, h));
    CHECK(cocycle(at(osp_e(1), 2), at(osp_e(-1), 3)).is_zero());
    for (const auto& a : basis())
      for (const auto& b : basis())
        for (int n = -2; n <= 2; ++n) {
          LoopElement x = at(a, n), y = at(b, -n);
          CHECK(cocycle(x, y) == cocycle_residue(x, y));
          int sign = (*a.parity() * *b.parity()) ? -1 : 1;
          CHECK(cocycle(x, y) + Surd(sign) * cocycle(y, x) == Surd(0));
        }
  }

  TEST_CASE("loop bracket") {
    SuperMatrix h = osp_h();
    CHECK(loop_bracket(LoopElement::d(), at(osp_e(1), 3)) == Surd(3) * at(osp_e(1), 3));
    CHECK(loop_bracket(at(h, 1), at(h, -1)) == killing_form(h, h) * LoopElement::c());
    for (const auto& a : basis()) {
      CHECK(loop_bracket(LoopElement::c(), at(a, 2)).is_zero());
      CHECK(loop_bracket(at(a, -1), LoopElement::c()).is_zero());
    }
    CHECK(loop_bracket(at(osp_e(1), 1), at(osp_e(-1), -1)) == at(h, 0) + LoopElement::c());
  }

  TEST_CASE("realization of root vectors") {
    const mpq_class l = alpha_sq();
    Surd r = Surd::sqrt(2 / l);
    CHECK(realize(RootLabel(1, -2)) == -r * at(osp_e(-2), 1));
    CHECK(realize(RootLabel(0, 1)) == at(osp_e(1), 0));
    CHECK(realize(RootLabel(-1, 2)) == r * at(osp_e(2), -1));
    CHECK(chevalley_image(ChevalleyGen::e_a0) == realize(RootLabel(1, -2)));
    CHECK(chevalley_image(ChevalleyGen::h_a0) == LoopElement::c() - Surd(2) * at(osp_h(), 0));
    CHECK(coroot(1, 1) == LoopElement::c() + at(osp_h(), 0));
    CHECK(loop_bracket(realize(RootLabel(1, 0)), realize(RootLabel(-1, 0))) == -LoopElement::c());
  }

  TEST_CASE("realized vectors carry their weight") {
    for (int n = -3; n <= 3; ++n)
      for (int m = -2; m <= 2; ++m) {
        if (!RootLabel::is_root(n, m)) continue;
        RootLabel root(n, m);
        if (root.is_double()) continue;
        LoopElement x = realize(root);
        INFO(root.to_string());
        CHECK(!x.is_zero());
        CHECK(loop_bracket(LoopElement::d(), x) == Surd(n) * x);
        CHECK(loop_bracket(at(osp_h(), 0), x) == Surd(m * alpha_sq()) * x);
      }
  }

  TEST_CASE("relations, brackets and limits at the default normalization") {
    require_all(check_chevalley_relations());
    require_all(check_root_brackets(2));
    require_all(check_classical_limit(2));
  }

  TEST_CASE("cocycle identity") {
    require_all(check_cocycle(2));
  }

  TEST_CASE("other normalizations") {
    for (mpq_class l : {mpq_class(2), mpq_class(3), mpq_class(1, 3)}) {
      ScopedAlphaSq scope(l);
      INFO(l.get_str());
      CHECK(killing_normalization() == Surd(-1 / (2 * l)));
      require_all(check_chevalley_relations());
      require_all(check_root_brackets(1));
      require_all(check_form());
    }
    {
      ScopedAlphaSq scope(mpq_class(2));
      require_all(check_classical_limit(1));
    }
    ScopedAlphaSq scope(mpq_class(1, 2));
    CHECK_THROWS_AS(check_classical_limit(1), DomainError);
  }
}
