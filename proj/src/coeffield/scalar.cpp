#include "uqosp/coeffield/scalar.hpp"

#include "uqosp/coeffield/config.hpp"
#include "uqosp/error.hpp"

namespace uqosp {
namespace {

const char* const kBasisNames[4] = {"1", "s_a", "s_b", "s_a*s_b"};

struct Defining {
  mpq_class lambda = 0;
  RatFunc a, b;
};

const Defining& defining() {
  static thread_local Defining d;
  if (d.lambda != alpha_sq() || sgn(d.lambda) == 0) {
    int l = alpha_sq_int();
    d.lambda = alpha_sq();
    d.a = RatFunc(qint_poly(2 * l));
    d.b = RatFunc(qint_poly(2 * l) - qint_poly(l));
  }
  return d;
}

Scalar flip(const Scalar& x, int mask) {
  std::array<RatFunc, 4> c;
  for (int i = 0; i < 4; ++i) c[static_cast<std::size_t>(i)] = (i & mask) ? -x.coord(i) : x.coord(i);
  return Scalar::from_coords(std::move(c));
}

}  // namespace

Scalar Scalar::from_coords(std::array<RatFunc, 4> coords) {
  Scalar s;
  s.c_ = std::move(coords);
  return s;
}

Scalar Scalar::s_a() {
  Scalar s;
  s.c_[1] = RatFunc(1);
  return s;
}

Scalar Scalar::s_b() {
  Scalar s;
  s.c_[2] = RatFunc(1);
  return s;
}

const RatFunc& Scalar::a() { return defining().a; }
const RatFunc& Scalar::b() { return defining().b; }

bool Scalar::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool Scalar::is_one() const { return c_[0].is_one() && in_base_field(); }

bool Scalar::in_base_field() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

Scalar& Scalar::operator+=(const Scalar& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar& Scalar::operator*=(const RatFunc& r) {
  for (auto& c : c_) c *= r;
  return *this;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  Scalar out;
  if (x.in_base_field()) {
    if (x.c_[0].is_zero()) return out;
    for (std::size_t i = 0; i < 4; ++i)
      if (!y.c_[i].is_zero()) out.c_[i] = x.c_[0] * y.c_[i];
    return out;
  }
  if (y.in_base_field()) return y * x;
  const Defining& d = defining();
  for (std::size_t i = 0; i < 4; ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (y.c_[j].is_zero()) continue;
      RatFunc t = x.c_[i] * y.c_[j];
      if (i & j & 1) t *= d.a;
      if (i & j & 2) t *= d.b;
      out.c_[i ^ j] += t;
    }
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  if (in_base_field()) return Scalar(c_[0].inverse());
  Scalar xb = flip(*this, 2);
  Scalar y = *this * xb;
  Scalar ya = flip(y, 1);
  Scalar n = y * ya;
  return xb * ya * n.c_[0].inverse();
}

Scalar Scalar::conjugate() const {
  Scalar r;
  for (std::size_t i = 0; i < 4; ++i) r.c_[i] = c_[i].conjugate();
  return r;
}

Surd Scalar::limit_q1() const {
  std::array<mpq_class, 4> v;
  for (std::size_t i = 0; i < 4; ++i) {
    if (c_[i].has_pole_at_one()) throw PoleAtOne(kBasisNames[i]);
    v[i] = c_[i].at_one();
  }
  const mpq_class& l = alpha_sq();
  Surd sa = Surd::sqrt(2 * l);
  Surd sb = Surd::sqrt(l);
  return Surd(v[0]) + Surd(v[1]) * sa + Surd(v[2]) * sb + Surd(v[3]) * sa * sb;
}

std::string Scalar::to_string() const {
  if (in_base_field()) return c_[0].to_string();
  std::string out;
  for (int i = 0; i < 4; ++i) {
    const RatFunc& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string body = c.to_string();
    bool bare = c.is_laurent() && c.num().is_monomial() && c.num().low() == 0 && sgn(c.num().lowest_coeff()) > 0;
    if (i == 0) {
      out += bare ? body : "(" + body + ")";
    } else if (c.is_one()) {
      out += kBasisNames[i];
    } else {
      out += (bare ? body : "(" + body + ")") + "*" + kBasisNames[i];
    }
  }
  return out;
}

Scalar qint(int n) { return Scalar(qint_poly(n)); }

Scalar scalar_arith(const Scalar& x, const Scalar& y, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return x + y;
    case ArithKind::mul: return x * y;
    case ArithKind::neg: return -x;
    case ArithKind::inv: return x.inverse();
  }
  return {};
}

}  // namespace uqosp
