#include "uqosp/coeffield/surd.hpp"

#include <cmath>
#include <sstream>

#include "uqosp/error.hpp"

namespace uqosp {
namespace {

// n = s^2 * r with r squarefree.
void split_square(const mpz_class& n, mpz_class& s, mpz_class& r) {
  s = 1;
  r = 1;
  mpz_class m = n;
  for (mpz_class p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      s *= p;
    }
    if (m % p == 0) {
      m /= p;
      r *= p;
    }
  }
  r *= m;
}

}  // namespace

Surd::Surd(long c) {
  if (c != 0) terms_.emplace(mpz_class(1), mpq_class(c));
}

Surd::Surd(const mpq_class& c) {
  if (sgn(c) != 0) terms_.emplace(mpz_class(1), c);
}

Surd Surd::sqrt(const mpq_class& x) {
  if (sgn(x) < 0) throw DomainError("square root of a negative rational");
  Surd r;
  if (sgn(x) == 0) return r;
  // sqrt(p/q) = sqrt(p*q)/q
  mpz_class pq = x.get_num() * x.get_den();
  mpz_class s, rad;
  split_square(pq, s, rad);
  r.terms_.emplace(rad, mpq_class(s, x.get_den()));
  r.terms_.begin()->second.canonicalize();
  return r;
}

bool Surd::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

mpq_class Surd::rational_part() const { return coeff(1); }

mpq_class Surd::coeff(const mpz_class& radicand) const {
  auto it = terms_.find(radicand);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void Surd::add_term(const mpz_class& radicand, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(radicand, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [r, c] : o.terms_) add_term(r, c);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [r, c] : o.terms_) add_term(r, -c);
  return *this;
}

Surd operator*(const Surd& a, const Surd& b) {
  Surd out;
  for (const auto& [r1, c1] : a.terms_) {
    for (const auto& [r2, c2] : b.terms_) {
      mpz_class g = gcd(r1, r2);
      mpz_class rad = (r1 / g) * (r2 / g);
      out.add_term(rad, mpq_class(c1 * c2 * g));
    }
  }
  return out;
}

Surd Surd::operator-() const {
  Surd r = *this;
  for (auto& [rad, c] : r.terms_) c = -c;
  return r;
}

Surd Surd::inverse() const {
  if (terms_.empty()) throw DivisionByZero("inverse of zero surd");
  if (terms_.size() != 1) throw DomainError("inverse of a multi-term surd is not supported");
  const auto& [rad, c] = *terms_.begin();
  // 1/(c sqrt(r)) = sqrt(r)/(c r)
  Surd out;
  out.terms_.emplace(rad, mpq_class(1 / (c * rad)));
  return out;
}

double Surd::approx() const {
  double v = 0;
  for (const auto& [r, c] : terms_) v += c.get_d() * std::sqrt(r.get_d());
  return v;
}

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (r == 1) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "sqrt(" << r.get_str() << ")";
    }
  }
  return os.str();
}

}  // namespace uqosp
