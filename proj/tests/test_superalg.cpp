#include <doctest.h>

#include <random>

#include "uqosp/error.hpp"
#include "uqosp/superalg/hopf.hpp"
#include "uqosp/superalg/text.hpp"

using namespace uqosp;

namespace {

Element E(Letter l) { return Element::gen(l); }
Element ka(int e) { return Element::k(0, e, 0); }
Element qp(int n) { return Element(Scalar::q_power(n)); }

Element random_element(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> letter(0, 3), len(0, max_len), ke(-1, 1), c(-2, 2), qe(-2, 2);
  Element x;
  for (int t = 0; t < 2; ++t) {
    Element m = Element::k(ke(rng), ke(rng), ke(rng));
    int n = len(rng);
    for (int i = 0; i < n; ++i) m = m * E(static_cast<Letter>(letter(rng)));
    x = x + Element(Scalar(c(rng)) * Scalar::q_power(qe(rng))) * m;
  }
  return x;
}

std::vector<Element> generators() {
  std::vector<Element> g;
  for (const auto& [name, x] : hopf_generators()) g.push_back(x);
  return g;
}

int parity_of(const Element& x) { return weight_parity(x)->parity; }

}  // namespace

TEST_SUITE("superalg") {
  TEST_CASE("multiplication examples") {
    CHECK(E(kEa) * ka(1) == qp(-1) * ka(1) * E(kEa));
    CHECK(ka(1) * ka(-1) == Element(1));
    Element ee = E(kEa) * E(kEa);
    REQUIRE(ee.size() == 1);
    CHECK(ee.terms().begin()->first.word.size() == 2);
    CHECK(ee.terms().begin()->second.is_one());
    CHECK(multiply(E(kEa), E(kEa)) == ee);
  }

  TEST_CASE("k acts by the pairing") {
    for (int l = 0; l < 4; ++l) {
      Letter x = static_cast<Letter>(l);
      Weight w = letter_weight(x);
      CHECK(Element::k(1, 0, 0) * E(x) * Element::k(-1, 0, 0) == qp(pairing(kD, w).get_num().get_si()) * E(x));
      CHECK(ka(1) * E(x) * ka(-1) == qp(pairing(kAlpha, w).get_num().get_si()) * E(x));
      CHECK(Element::k(0, 0, 1) * E(x) * Element::k(0, 0, -1) ==
            qp(pairing(kAlpha0, w).get_num().get_si()) * E(x));
    }
  }

  TEST_CASE("q-bracket examples") {
    CHECK(qbracket(E(kEa), E(kEa0), BracketMode::q) == E(kEa) * E(kEa0) - qp(-2) * E(kEa0) * E(kEa));
    CHECK(qbracket(E(kEa), E(kFa), BracketMode::plain) == E(kEa) * E(kFa) + E(kFa) * E(kEa));
    CHECK(qbracket(E(kEa), E(kEa0), BracketMode::q_inverse) == E(kEa) * E(kEa0) - qp(2) * E(kEa0) * E(kEa));
    for (Letter l : {kFa0, kFa, kEa0, kEa}) CHECK(qbracket(E(l), Element(1)).is_zero());
    CHECK(qbracket(E(kEa) * E(kEa0), Element(1)).is_zero());
    CHECK_THROWS_AS(qbracket(E(kEa) + E(kEa0), E(kFa)), DomainError);
  }

  TEST_CASE("weight and parity") {
    auto wp = weight_parity(E(kEa) * E(kEa0));
    REQUIRE(wp);
    CHECK(wp->weight == Weight{1, -1, 0});
    CHECK(wp->parity == 1);
    wp = weight_parity(ka(1));
    REQUIRE(wp);
    CHECK(wp->weight.is_zero());
    CHECK(wp->parity == 0);
    wp = weight_parity(E(kEa) * E(kEa));
    REQUIRE(wp);
    CHECK(wp->weight == Weight{0, 2, 0});
    CHECK(wp->parity == 0);
    CHECK(!weight_parity(E(kEa) + E(kFa)));
  }

  TEST_CASE("coproduct examples") {
    CHECK(coproduct(E(kEa)) == Tensor::pure({E(kEa), Element(1)}) + Tensor::pure({ka(-1), E(kEa)}));
    CHECK(coproduct(E(kFa)) == Tensor::pure({E(kFa), ka(1)}) + Tensor::pure({Element(1), E(kFa)}));
    CHECK(coproduct(ka(1)) == Tensor::pure({ka(1), ka(1)}));
  }

  TEST_CASE("antipode and counit examples") {
    CHECK(antipode(E(kEa)) == -(ka(1) * E(kEa)));
    CHECK(antipode(ka(1)) == ka(-1));
    CHECK(antipode(E(kFa)) == -(E(kFa) * ka(-1)));
    CHECK(counit(E(kEa)).is_zero());
    CHECK(counit(Element::k(0, 0, -1)).is_one());
    CHECK(counit(Element(1) + E(kEa) * E(kFa)).is_one());
  }

  TEST_CASE("associativity") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 25; ++i) {
      Element x = random_element(rng, 3), y = random_element(rng, 3), z = random_element(rng, 3);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
    }
  }

  TEST_CASE("super skew-symmetry of the plain bracket") {
    auto g = generators();
    for (const auto& x : g)
      for (const auto& y : g) {
        int sign = (parity_of(x) * parity_of(y)) % 2 ? 1 : -1;
        CHECK(qbracket(x, y, BracketMode::plain) == Element(Scalar(sign)) * qbracket(y, x, BracketMode::plain));
      }
  }

  TEST_CASE("coproduct is multiplicative, antipode anti-multiplicative") {
    auto g = generators();
    for (const auto& x : g)
      for (const auto& y : g) {
        CHECK(coproduct(x * y) == coproduct(x) * coproduct(y));
        Scalar sign((parity_of(x) * parity_of(y)) % 2 ? -1 : 1);
        CHECK(antipode(x * y) == sign * (antipode(y) * antipode(x)));
        CHECK(counit(x * y) == counit(x) * counit(y));
      }
  }

  TEST_CASE("Hopf axioms on generators") {
    CheckReport r = verify_hopf_axioms();
    CHECK(r.items.size() == 30);
    for (const auto& it : r.items) {
      INFO(it.name);
      CHECK(it.pass);
    }
  }

  TEST_CASE("text round trip") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
      Element x = random_element(rng, 4);
      CHECK(parse_element(x.to_string()) == x);
    }
    CHECK(parse_element("E(a)*k_a") == qp(-1) * ka(1) * E(kEa));
    CHECK_THROWS_AS(parse_element("E(b)"), ParseError);
  }

  TEST_CASE("tensor sign rule") {
    Tensor a = Tensor::pure({Element(1), E(kEa)});
    Tensor b = Tensor::pure({E(kFa), Element(1)});
    Tensor expected;
    expected.add_scaled(Tensor::pure({E(kFa), E(kEa)}), Scalar(-1));
    CHECK(a * b == expected);
    CHECK(b * a == Tensor::pure({E(kFa), E(kEa)}));
  }
}
