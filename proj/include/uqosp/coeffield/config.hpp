#pragma once

#include <gmpxx.h>

namespace uqosp {

/// The normalization (alpha, alpha). Process-wide, default 1.
const mpq_class& alpha_sq();
void set_alpha_sq(const mpq_class& value);
/// (alpha, alpha) as an integer; throws DomainError when it is not integral.
int alpha_sq_int();

/// Sets (alpha, alpha) for the lifetime of the object.
class ScopedAlphaSq {
 public:
  explicit ScopedAlphaSq(const mpq_class& value);
  ~ScopedAlphaSq();
  ScopedAlphaSq(const ScopedAlphaSq&) = delete;
  ScopedAlphaSq& operator=(const ScopedAlphaSq&) = delete;

 private:
  mpq_class saved_;
};

}  // namespace uqosp
