#include "uqosp/superalg/generators.hpp"

#include <bit>

#include "uqosp/coeffield/config.hpp"
#include "uqosp/error.hpp"

namespace uqosp {

std::string letter_name(Letter l) {
  static const char* const names[4] = {"E(-d+2a)", "E(-a)", "E(d-2a)", "E(a)"};
  return names[l];
}

int k_pairing(const KExp& k, const Weight& w) {
  int l = alpha_sq_int();
  // (d, w) = c_delta, (a, w) = l c_alpha, (d-2a, w) = -2 l c_alpha
  return k[kKd] * w.c_delta + k[kKa] * l * w.c_alpha - 2 * k[kKa0] * l * w.c_alpha;
}

Word Word::sub(int i, int n) const {
  if (n <= 0) return {};
  std::uint64_t shifted = bits >> (2 * (len - i - n));
  std::uint64_t mask = n >= 32 ? ~0ULL : ((1ULL << (2 * n)) - 1);
  return Word{shifted & mask, static_cast<std::uint8_t>(n)};
}

Word operator+(const Word& a, const Word& b) {
  if (a.len + b.len > Word::kMaxLength) throw BoundExceeded(Word::kMaxLength, a.len + b.len);
  if (b.len == 0) return a;
  if (a.len == 0) return b;
  return Word{(a.bits << (2 * b.len)) | b.bits, static_cast<std::uint8_t>(a.len + b.len)};
}

Weight Word::weight() const {
  Weight w;
  for (int i = 0; i < len; ++i) w += letter_weight(at(i));
  return w;
}

int Word::odd_count() const {
  // odd letters have the low bit set
  std::uint64_t low = bits & 0x5555555555555555ULL;
  return std::popcount(low);
}

int Word::parity() const { return odd_count() & 1; }

int Word::first_positive() const {
  for (int i = 0; i < len; ++i)
    if (is_positive(at(i))) return i;
  return len;
}

std::string Word::to_string() const {
  if (len == 0) return "1";
  std::string out;
  for (int i = 0; i < len; ++i) {
    if (i) out += " * ";
    out += letter_name(at(i));
  }
  return out;
}

KExp composite_k(int c_delta, int c_alpha) { return {0, 2 * c_delta + c_alpha, c_delta}; }

}  // namespace uqosp
