#include <doctest.h>

#include <random>

#include "uqosp/coeffield/config.hpp"
#include "uqosp/coeffield/parse.hpp"
#include "uqosp/coeffield/scalar.hpp"
#include "uqosp/error.hpp"

using namespace uqosp;

namespace {

// q^n - q^-n evaluated directly over the rationals.
mpq_class qint_at(int n, const mpq_class& q) {
  mpq_class num = 1, den = 1;
  mpq_class qn = 1;
  for (int i = 0; i < std::abs(n); ++i) qn *= q;
  num = qn - 1 / qn;
  den = q - 1 / q;
  mpq_class r = num / den;
  return n < 0 ? mpq_class(-r) : r;
}

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3), lo(-2, 1), len(1, 3);
  int low = lo(rng), n = len(rng);
  std::vector<mpz_class> cs;
  for (int i = 0; i < n; ++i) cs.emplace_back(c(rng));
  return LaurentPoly::from_coefficients(low, cs);
}

RatFunc random_ratfunc(std::mt19937_64& rng) {
  LaurentPoly den = random_poly(rng);
  while (den.is_zero()) den = random_poly(rng);
  return RatFunc(random_poly(rng), den);
}

Scalar random_scalar(std::mt19937_64& rng) {
  std::array<RatFunc, 4> c;
  std::uniform_int_distribution<int> pick(0, 2);
  for (auto& x : c)
    if (pick(rng) == 0) x = random_ratfunc(rng);
  if (c[0].is_zero()) c[0] = random_ratfunc(rng);
  return Scalar::from_coords(c);
}

}  // namespace

TEST_SUITE("coeffield") {
  TEST_CASE("surd squares reduce to their defining values") {
    Scalar sa = Scalar::s_a(), sb = Scalar::s_b();
    CHECK(sa * sa == Scalar::q_power(1) + Scalar::q_power(-1));
    CHECK(sb * sb == Scalar::q_power(1) + Scalar::q_power(-1) - Scalar(1));
    CHECK((sa * sa).to_string() == "q + q^-1");
    CHECK((sb * sb).to_string() == "q - 1 + q^-1");
  }

  TEST_CASE("inverse of q - q^-1") {
    Scalar x = Scalar::q_power(1) - Scalar::q_power(-1);
    CHECK((x * x.inverse()).is_one());
    CHECK(scalar_arith(x, scalar_arith(x, Scalar(), ArithKind::inv), ArithKind::mul).is_one());
  }

  TEST_CASE("division by zero raises") {
    CHECK_THROWS_AS(Scalar().inverse(), DivisionByZero);
    CHECK_THROWS_AS(parse_scalar("1/(q - q)"), DivisionByZero);
  }

  TEST_CASE("q-integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1).is_one());
    CHECK(qint(2) == Scalar::q_power(1) + Scalar::q_power(-1));
    Scalar qq = Scalar::q_power(1) - Scalar::q_power(-1);
    for (int n = -8; n <= 8; ++n) CHECK(qint(n) * qq == Scalar::q_power(n) - Scalar::q_power(-n));
  }

  TEST_CASE("q-integers against rational evaluation") {
    for (int n = -6; n <= 6; ++n)
      for (mpq_class q : {mpq_class(2), mpq_class(3, 7), mpq_class(-5, 2)}) {
        RatFunc r = qint(n).coord(0);
        CHECK(r.evaluate(q) == qint_at(n, q));
      }
  }

  TEST_CASE("limit at q = 1") {
    CHECK(qint(2).limit_q1() == Surd(2));
    CHECK(Scalar::s_b().limit_q1() == Surd(1));
    CHECK(Scalar::s_a().limit_q1() == Surd::sqrt(2));
    Scalar pole = (Scalar::q_power(1) - Scalar::q_power(-1)).inverse();
    CHECK_THROWS_AS(pole.limit_q1(), PoleAtOne);
    try {
      pole.limit_q1();
    } catch (const PoleAtOne& e) {
      CHECK(e.coordinate() == "1");
    }
    Scalar sa_pole = Scalar::s_a() * pole;
    try {
      sa_pole.limit_q1();
      FAIL("expected a pole");
    } catch (const PoleAtOne& e) {
      CHECK(e.coordinate() == "s_a");
    }
  }

  TEST_CASE("limit under a different normalization") {
    ScopedAlphaSq scope(mpq_class(2));
    CHECK(Scalar::s_a().limit_q1() == Surd(2));
    CHECK(Scalar::s_b().limit_q1() == Surd::sqrt(2));
    CHECK(Scalar(Scalar::a()).limit_q1() == Surd(4));
  }

  TEST_CASE("field axioms on random scalars") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
      Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      CHECK(x + (-x) == Scalar());
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    }
  }

  TEST_CASE("ratfunc arithmetic against rational evaluation") {
    std::mt19937_64 rng(11);
    const mpq_class q(5, 3);
    for (int i = 0; i < 60; ++i) {
      RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
      mpq_class va = a.evaluate(q), vb = b.evaluate(q);
      CHECK((a + b).evaluate(q) == va + vb);
      CHECK((a * b).evaluate(q) == va * vb);
      if (!b.is_zero() && vb != 0) CHECK((a / b).evaluate(q) == va / vb);
    }
  }

  TEST_CASE("canonical denominator") {
    RatFunc r(LaurentPoly(2), LaurentPoly::from_coefficients(0, {4, 6}));
    CHECK(r.den().lowest_coeff() > 0);
    CHECK(r == RatFunc(LaurentPoly(1), LaurentPoly::from_coefficients(0, {2, 3})));
    RatFunc s(LaurentPoly::from_coefficients(-1, {-1, 0, 1}), LaurentPoly::from_coefficients(0, {-1, 1}));
    CHECK(s.is_laurent());
    CHECK(s == RatFunc(LaurentPoly::from_coefficients(-1, {1, 1})));
  }

  TEST_CASE("limits are multiplicative") {
    std::mt19937_64 rng(3);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
      Scalar x = random_scalar(rng), y = random_scalar(rng);
      try {
        Surd lx = x.limit_q1(), ly = y.limit_q1();
        CHECK((x * y).limit_q1() == lx * ly);
        ++checked;
      } catch (const PoleAtOne&) {
      }
    }
    CHECK(checked > 10);
  }

  TEST_CASE("no unreduced surd powers") {
    Scalar x = Scalar::s_a() * Scalar::s_b();
    Scalar y = x * x * Scalar::s_a();
    CHECK(y.coord(3).is_zero());
    CHECK(y.coord(2).is_zero());
    CHECK(!y.coord(1).is_zero());
    CHECK(y == Scalar(Scalar::a()) * Scalar(Scalar::b()) * Scalar::s_a());
  }

  TEST_CASE("text round trip") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
      Scalar x = random_scalar(rng);
      CHECK(parse_scalar(x.to_string()) == x);
    }
    CHECK(parse_scalar("(q + q^-1 - 1)*s_a") == (Scalar::q_power(1) + Scalar::q_power(-1) - Scalar(1)) * Scalar::s_a());
    CHECK_THROWS_AS(parse_scalar("q +"), ParseError);
  }

  TEST_CASE("integral normalization is enforced") {
    ScopedAlphaSq scope(mpq_class(1, 2));
    CHECK_THROWS_AS(alpha_sq_int(), DomainError);
  }

  TEST_CASE("surd arithmetic") {
    Surd r2 = Surd::sqrt(2), r8 = Surd::sqrt(8);
    CHECK(r8 == Surd(2) * r2);
    CHECK(r2 * r2 == Surd(2));
    CHECK(r2.inverse() * r2 == Surd(1));
    CHECK(Surd::sqrt(mpq_class(1, 2)) == mpq_class(1, 2) * r2);
    CHECK((r2 + Surd(1)).to_string() == "1 + sqrt(2)");
  }
}
