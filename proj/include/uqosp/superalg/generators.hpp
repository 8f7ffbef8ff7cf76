#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "uqosp/rootsys/rootsys.hpp"

namespace uqosp {

/// Chevalley e-generators, numbered so that negatives precede positives and
/// within a sign e_{+-(d-2a)} precedes e_{+-a}.
enum Letter : std::uint8_t {
  kFa0 = 0,  // e_{-(d-2a)}
  kFa = 1,   // e_{-a}
  kEa0 = 2,  // e_{d-2a}
  kEa = 3,   // e_{a}
};

inline constexpr bool is_negative(Letter l) { return l < 2; }
inline constexpr bool is_positive(Letter l) { return l >= 2; }
inline constexpr int letter_parity(Letter l) { return l & 1; }
inline constexpr Weight letter_weight(Letter l) {
  constexpr Weight w[4] = {{-1, 2, 0}, {0, -1, 0}, {1, -2, 0}, {0, 1, 0}};
  return w[l];
}
/// e_{+b} <-> e_{-b}.
inline constexpr Letter opposite(Letter l) { return static_cast<Letter>(l ^ 2); }
/// "E(a)", "E(-d+2a)", ...
std::string letter_name(Letter l);

/// Index into the k-exponent triple.
enum KIndex { kKd = 0, kKa = 1, kKa0 = 2 };
using KExp = std::array<int, 3>;

/// Exponent q^{(k, w)} for the Cartan monomial k = k_d^x k_a^y k_a0^z and a
/// weight w with c_d = 0; needs an integral (alpha, alpha).
int k_pairing(const KExp& k, const Weight& w);

/// Word in the four letters, packed two bits per letter with the first
/// letter most significant, so comparing `bits` of equal-length words is
/// lexicographic comparison.
struct Word {
  static constexpr int kMaxLength = 32;
  std::uint64_t bits = 0;
  std::uint8_t len = 0;

  static Word single(Letter l) { return Word{l, 1}; }
  int size() const { return len; }
  bool empty() const { return len == 0; }
  Letter at(int i) const { return static_cast<Letter>((bits >> (2 * (len - 1 - i))) & 3u); }
  Letter front() const { return at(0); }
  /// Letters [i, i+n).
  Word sub(int i, int n) const;
  Word prefix(int n) const { return sub(0, n); }
  Word suffix_from(int i) const { return sub(i, len - i); }
  /// Throws BoundExceeded past kMaxLength.
  friend Word operator+(const Word& a, const Word& b);
  Weight weight() const;
  int parity() const;
  int odd_count() const;
  /// Index of the first positive letter (== size() when there is none).
  int first_positive() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Degree-lexicographic order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.len <=> b.len; c != 0) return c;
    return a.bits <=> b.bits;
  }
  std::string to_string() const;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::uint64_t>()(w.bits * 0x9e3779b97f4a7c15ULL ^ w.len);
  }
};

/// k_d^{k[0]} k_a^{k[1]} k_a0^{k[2]} times a word.
struct Monomial {
  KExp k{0, 0, 0};
  Word word;

  Weight weight() const { return word.weight(); }
  int parity() const { return word.parity(); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Word order first, then k exponents.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.word <=> b.word; c != 0) return c;
    return a.k <=> b.k;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = WordHash()(m.word);
    for (int e : m.k) h = h * 1000003u ^ static_cast<std::size_t>(e + 1024);
    return h;
  }
};

inline KExp operator+(const KExp& a, const KExp& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline KExp operator-(const KExp& a) { return {-a[0], -a[1], -a[2]}; }

/// Cartan monomial for k_{n delta + m alpha} = k_a0^n k_a^{2n+m}.
KExp composite_k(int c_delta, int c_alpha);

}  // namespace uqosp
