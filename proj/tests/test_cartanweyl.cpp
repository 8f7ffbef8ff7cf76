#include <doctest.h>

#include <random>

#include "uqosp/cartanweyl/conjugation.hpp"
#include "uqosp/cartanweyl/schur.hpp"
#include "uqosp/cartanweyl/table.hpp"
#include "uqosp/cartanweyl/verify.hpp"
#include "uqosp/error.hpp"

using namespace uqosp;

namespace {

const RewriteSystem& sys12() {
  static const RewriteSystem s = RewriteSystem::complete(12);
  return s;
}

RootVectorTable& table() {
  static RootVectorTable t(3);
  return t;
}

Element E(Letter l) { return Element::gen(l); }
Element qp(int n) { return Element(Scalar::q_power(n)); }

std::vector<FormalPoly> variables(int n) {
  std::vector<FormalPoly> v;
  for (int i = 1; i <= n; ++i) v.push_back(FormalPoly::variable(i));
  return v;
}

}  // namespace

TEST_SUITE("cartanweyl") {
  TEST_CASE("weighted partitions") {
    const std::size_t counts[] = {1, 2, 3, 5, 7, 11, 15};
    for (int n = 1; n <= 7; ++n) {
      auto ps = weighted_partitions(n);
      CHECK(ps.size() == counts[n - 1]);
      for (const auto& p : ps) {
        int total = 0;
        for (std::size_t i = 0; i < p.size(); ++i) total += static_cast<int>(i + 1) * p[i];
        CHECK(total == n);
      }
    }
  }

  TEST_CASE("Schur transform examples") {
    auto x = variables(2);
    Scalar k = default_kappa();
    CHECK(schur_forward(1, x, k) == x[0]);
    CHECK(schur_inverse(1, x, k) == x[0]);
    Scalar half = k * Scalar(mpq_class(1, 2));
    CHECK(schur_forward(2, x, k) == x[1] + half * (x[0] * x[0]));
    CHECK(schur_inverse(2, x, k) == x[1] - half * (x[0] * x[0]));
  }

  TEST_CASE("Schur transform round trip and generating function") {
    for (const Scalar& k : {default_kappa(), table_kappa(1), table_kappa(-1)}) {
      SchurCheck c = check_schur(6, k);
      CHECK(c.roundtrip);
      CHECK(c.generating_function);
      CHECK(c.first_failure == 0);
    }
  }

  TEST_CASE("root vectors from the recursion") {
    auto& t = table();
    Scalar inv_sa = Scalar::s_a().inverse();
    CHECK(t.vector(RootLabel(1, -1)) == inv_sa * (E(kEa) * E(kEa0) - qp(-2) * E(kEa0) * E(kEa)));
    CHECK(t.vector(RootLabel(-1, 1)) == inv_sa * (E(kFa0) * E(kFa) - qp(2) * E(kFa) * E(kFa0)));
    CHECK(t.vector(RootLabel(0, 1)) == E(kEa));
    CHECK(t.vector(RootLabel(-1, 2)) == E(kFa0));
    CHECK(t.vector(RootLabel(1, 0)) == Scalar::s_b().inverse() * qbracket(E(kEa), t.vector(RootLabel(1, -1))));
    CHECK_THROWS_AS(t.vector(RootLabel(0, 2)), DomainError);
    CHECK_THROWS_AS(t.vector(RootLabel(4, 1)), DomainError);
    CHECK_THROWS_AS(RootVectorTable(1, Direction::anticlockwise), DomainError);
  }

  TEST_CASE("root vectors have the weight and parity of their root") {
    RootVectorTable t = build_root_vectors(1);
    CHECK(t.roots().size() == 12);
    for (const auto& [root, v] : t.entries()) {
      INFO(root.to_string());
      auto wp = weight_parity(v);
      REQUIRE(wp);
      CHECK(wp->weight == root.weight());
      CHECK(wp->parity == parity(root));
      CHECK(!v.is_zero());
    }
  }

  TEST_CASE("primed and Schur imaginary vectors") {
    auto& t = table();
    CHECK(t.primed(1) == t.vector(RootLabel(1, 0)));
    CHECK(t.primed(-1) == t.vector(RootLabel(-1, 0)));
    std::vector<Element> fam{t.primed(1), t.primed(2)};
    CHECK(t.vector(RootLabel(2, 0)) == schur_inverse(2, fam, table_kappa(1)));
    CHECK(t.primed(2) == schur_forward(2, std::vector<Element>{t.vector(RootLabel(1, 0)), t.vector(RootLabel(2, 0))},
                                       table_kappa(1)));
  }

  TEST_CASE("Cartan conjugation") {
    Calibration cal = calibrate_conjugation(sys12());
    CHECK(cal.candidates.size() == 4);
    REQUIRE(cal.unique);
    CHECK(*cal.unique == ConjugationChoice{true, true});
    CHECK(cartan_conjugate(E(kEa)) == E(kFa));
    CHECK(cartan_conjugate(E(kEa0)) == E(kFa0));
    CHECK(cartan_conjugate(Element::k(0, 1, 0)) == Element::k(0, -1, 0));
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> letter(0, 3), len(0, 4), ke(-1, 1);
    for (int i = 0; i < 20; ++i) {
      Element x = Element::k(ke(rng), ke(rng), ke(rng));
      int n = len(rng);
      for (int j = 0; j < n; ++j) x = x * E(static_cast<Letter>(letter(rng)));
      x = x * Element(Scalar::q_power(ke(rng)) + Scalar::s_b());
      CHECK(cartan_conjugate(cartan_conjugate(x)) == x);
    }
    auto& t = table();
    for (int n = 1; n <= 2; ++n)
      CHECK(sys12().equal_mod_relations(cartan_conjugate(t.vector(RootLabel(n, 0))), t.vector(RootLabel(-n, 0))));
    CHECK(cartan_conjugate(t.vector(RootLabel(1, -1))) == t.vector(RootLabel(-1, 1)));
  }

  TEST_CASE("imaginary coefficient at n = 1") {
    CHECK(imaginary_coefficient(1, FactorReading::minus) == Scalar(-1));
  }

  TEST_CASE("real root brackets at n = 1") {
    auto& t = table();
    for (RealFamily f : {RealFamily::plus_a, RealFamily::minus_a, RealFamily::plus_2a}) {
      RelationReport r = verify_prop1_relation(f, 1, sys12(), t);
      INFO(family_name(f) << ": " << r.residual.to_string());
      CHECK(r.pass);
      CHECK(r.residual.is_zero());
    }
    CHECK_THROWS_AS(verify_prop1_relation(RealFamily::minus_2a, 1, sys12(), t), BoundExceeded);
  }

  TEST_CASE("real root families") {
    CHECK(family_root(RealFamily::plus_a, 1) == RootLabel(1, 1));
    CHECK(family_root(RealFamily::minus_a, 2) == RootLabel(2, -1));
    CHECK(family_root(RealFamily::plus_2a, 1) == RootLabel(1, 2));
    CHECK(family_root(RealFamily::minus_2a, 1) == RootLabel(3, -2));
    CHECK(family_sign(RealFamily::plus_a, 1) == -1);
    CHECK(family_sign(RealFamily::minus_a, 1) == 1);
    for (RealFamily f : kRealFamilies) CHECK(parse_family(family_name(f)) == f);
    CHECK(!parse_family("sideways"));
  }

  TEST_CASE("negative control: flipped sign fails") {
    RelationReport r = verify_prop1_relation(RealFamily::plus_a, 1, sys12(), table(), -1);
    CHECK(!r.pass);
    CHECK(!r.residual.is_zero());
  }

  TEST_CASE("imaginary brackets") {
    auto& t = table();
    Prop2Report p11 = verify_prop2(1, 1, sys12(), t);
    CHECK(p11.report.pass);
    CHECK(p11.minus_matches);
    Prop2Report p12 = verify_prop2(1, 2, sys12(), t);
    CHECK(p12.report.pass);
    CHECK(p12.report.residual.is_zero());
    Prop2Report p21 = verify_prop2(2, 1, sys12(), t);
    CHECK(p21.report.pass);
    Prop2Report p22 = verify_prop2(2, 2, sys12(), t);
    CHECK(p22.report.pass);
    CHECK(p22.minus_matches);
    CHECK(!p22.literal_matches);
    CHECK(verify_imaginary_commute(1, 2, sys12(), t).pass);
  }

  TEST_CASE("primed vectors do not commute with the negative family") {
    RelationReport r = verify_remark(2, 1, sys12(), table());
    CHECK(r.pass);
    CHECK(!r.residual.is_zero());
  }
}
