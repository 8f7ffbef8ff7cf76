#include "uqosp/coeffield/config.hpp"

#include "uqosp/error.hpp"

namespace uqosp {
namespace {
mpq_class g_alpha_sq = 1;
}

const mpq_class& alpha_sq() { return g_alpha_sq; }

void set_alpha_sq(const mpq_class& value) {
  if (sgn(value) <= 0) throw DomainError("(alpha, alpha) must be positive");
  g_alpha_sq = value;
}

int alpha_sq_int() {
  if (g_alpha_sq.get_den() != 1 || !g_alpha_sq.get_num().fits_sint_p())
    throw DomainError("the quantum algebra needs an integral (alpha, alpha), got " + g_alpha_sq.get_str());
  return static_cast<int>(g_alpha_sq.get_num().get_si());
}

ScopedAlphaSq::ScopedAlphaSq(const mpq_class& value) : saved_(g_alpha_sq) { set_alpha_sq(value); }
ScopedAlphaSq::~ScopedAlphaSq() { g_alpha_sq = saved_; }

}  // namespace uqosp
