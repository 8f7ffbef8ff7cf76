#include "uqosp/coeffield/parse.hpp"

namespace uqosp {
namespace {

struct ScalarOps {
  using value_type = Scalar;
  Scalar integer(const mpz_class& z) const { return Scalar(mpq_class(z)); }
  Scalar identifier(const std::string& name) const {
    if (name == "q") return Scalar::q_power(1);
    if (name == "s_a") return Scalar::s_a();
    if (name == "s_b") return Scalar::s_b();
    throw ParseError("unknown identifier '" + name + "'");
  }
  Scalar generator(const std::string&) const { throw ParseError("generators are not scalars"); }
  Scalar divide(const Scalar& x, const Scalar& y) const {
    if (y.is_zero()) throw DivisionByZero("division by zero");
    return x / y;
  }
  Scalar power(const Scalar& x, int e) const { return scalar_pow(x, e); }
};

}  // namespace

Scalar scalar_pow(const Scalar& x, int e) {
  if (e < 0) return scalar_pow(x.inverse(), -e);
  if (x.in_base_field() && x.coord(0).is_laurent() && x.coord(0).num().is_monomial()) {
    const LaurentPoly& p = x.coord(0).num();
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), p.lowest_coeff().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), x.coord(0).den().lowest_coeff().get_mpz_t(), static_cast<unsigned long>(e));
    return Scalar(RatFunc(LaurentPoly::monomial(n, p.low() * e), LaurentPoly(d)));
  }
  Scalar r(1), b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Scalar parse_scalar(std::string_view text) { return ExprParser<ScalarOps>(text, ScalarOps{}).parse(); }

}  // namespace uqosp
