#include "uqosp/coeffield/ratfunc.hpp"

#include "uqosp/error.hpp"

namespace uqosp {

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.low() != 0) {
    num_ = num_.shifted(-den_.low());
    den_ = den_.stripped();
  }
  if (!den_.is_constant()) {
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = LaurentPoly::divexact(num_, g);
      den_ = LaurentPoly::divexact(den_, g);
    }
  }
  normalize_content();
}

void RatFunc::normalize_content() {
  mpz_class c = den_.content();
  if (c != 1) {
    mpz_class n = num_.content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());
  }
  if (sgn(den_.lowest_coeff()) < 0) c = -c;
  if (c != 1) {
    num_.divide_exact(c);
    den_.divide_exact(c);
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    canonicalize();
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    canonicalize();
    return *this;
  }
  LaurentPoly g = LaurentPoly::gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  } else {
    LaurentPoly d1 = LaurentPoly::divexact(den_, g);
    LaurentPoly d2 = LaurentPoly::divexact(o.den_, g);
    num_ = num_ * d2 + o.num_ * d1;
    den_ = den_ * d2;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (o.den_.is_one() && o.num_.is_monomial() && (o.num_.lowest_coeff() == 1 || o.num_.lowest_coeff() == -1)) {
    num_ = num_.shifted(o.num_.low());
    if (o.num_.lowest_coeff() < 0) num_ = -num_;
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  if (o.den_.is_one()) {
    LaurentPoly g = LaurentPoly::gcd(o.num_, den_);
    if (g.is_constant()) {
      num_ = num_ * o.num_;
    } else {
      num_ = num_ * LaurentPoly::divexact(o.num_, g);
      den_ = LaurentPoly::divexact(den_, g);
    }
    normalize_content();
    return *this;
  }
  LaurentPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_one()) {
    LaurentPoly g = LaurentPoly::gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = LaurentPoly::divexact(n1, g);
      d2 = LaurentPoly::divexact(d2, g);
    }
  }
  if (!d1.is_one()) {
    LaurentPoly g = LaurentPoly::gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = LaurentPoly::divexact(n2, g);
      d1 = LaurentPoly::divexact(d1, g);
    }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  normalize_content();
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::conjugate() const { return RatFunc(num_.inverted(), den_.inverted()); }

bool RatFunc::has_pole_at_one() const { return sgn(den_.at_one()) == 0; }

mpq_class RatFunc::at_one() const {
  mpz_class d = den_.at_one();
  if (sgn(d) == 0) throw PoleAtOne("1");
  mpq_class r(num_.at_one(), d);
  r.canonicalize();
  return r;
}

mpq_class RatFunc::evaluate(const mpq_class& q) const {
  mpq_class d = den_.evaluate(q);
  if (sgn(d) == 0) throw DivisionByZero("rational function evaluated at a pole");
  return num_.evaluate(q) / d;
}

std::string RatFunc::to_string() const {
  const mpz_class& d0 = den_.lowest_coeff();
  if (den_.is_constant()) return num_.to_string(d0);
  return "(" + num_.to_string(d0) + ")/(" + den_.to_string(d0) + ")";
}

LaurentPoly qint_poly(int n) {
  if (n == 0) return {};
  int m = n < 0 ? -n : n;
  std::vector<mpz_class> c(static_cast<std::size_t>(2 * m - 1), mpz_class(0));
  for (std::size_t i = 0; i < c.size(); i += 2) c[i] = 1;
  LaurentPoly p = LaurentPoly::from_coefficients(-(m - 1), std::move(c));
  return n < 0 ? -p : p;
}

}  // namespace uqosp
