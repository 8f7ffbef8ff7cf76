#include "uqosp/coeffield/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "uqosp/error.hpp"

namespace uqosp {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int exponent) {
  LaurentPoly p;
  if (sgn(c) != 0) {
    p.low_ = exponent;
    p.c_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(int low, std::vector<mpz_class> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

bool LaurentPoly::is_one() const { return low_ == 0 && c_.size() == 1 && c_[0] == 1; }

mpz_class LaurentPoly::coeff(int exponent) const {
  if (c_.empty() || exponent < low_ || exponent > high()) return 0;
  return c_[static_cast<std::size_t>(exponent - low_)];
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < c_.size() && sgn(c_[first]) == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = c_.size();
  while (sgn(c_[last - 1]) == 0) --last;
  if (last < c_.size()) c_.resize(last);
  if (first > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(first));
    low_ += static_cast<int>(first);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo != low_ || hi != high()) {
    std::vector<mpz_class> grown(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) grown[static_cast<std::size_t>(low_ - lo) + i].swap(c_[i]);
    c_.swap(grown);
    low_ = lo;
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<std::size_t>(o.low_ - low_) + i] += o.c_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = -o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo != low_ || hi != high()) {
    std::vector<mpz_class> grown(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) grown[static_cast<std::size_t>(low_ - lo) + i].swap(c_[i]);
    c_.swap(grown);
    low_ = lo;
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<std::size_t>(o.low_ - low_) + i] -= o.c_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
  if (sgn(c) == 0) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& v : c_) v *= c;
  return *this;
}

LaurentPoly& LaurentPoly::divide_exact(const mpz_class& c) {
  for (auto& v : c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  r.low_ = a.low_ + b.low_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::shifted(int n) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += n;
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return {};
  LaurentPoly r;
  r.low_ = -high();
  r.c_.assign(c_.rbegin(), c_.rend());
  return r;
}

mpz_class LaurentPoly::at_one() const {
  mpz_class s = 0;
  for (const auto& v : c_) s += v;
  return s;
}

mpq_class LaurentPoly::evaluate(const mpq_class& q) const {
  if (is_zero()) return 0;
  if (sgn(q) == 0) throw DivisionByZero("LaurentPoly::evaluate at q=0");
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + mpq_class(*it);
  mpq_class scale = 1;
  mpq_class base = low_ >= 0 ? q : mpq_class(1 / q);
  for (int i = 0; i < std::abs(low_); ++i) scale *= base;
  return acc * scale;
}

LaurentPoly LaurentPoly::stripped() const {
  LaurentPoly r = *this;
  r.low_ = 0;
  return r;
}

bool LaurentPoly::try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (b.low_ != 0) throw Error("try_divide expects an ordinary divisor");
  if (a.is_zero()) {
    quot = LaurentPoly();
    return true;
  }
  if (b.c_.size() == 1) {
    for (const auto& v : a.c_)
      if (!mpz_divisible_p(v.get_mpz_t(), b.c_[0].get_mpz_t())) return false;
    quot = a;
    quot.divide_exact(b.c_[0]);
    return true;
  }
  const int db = b.span();
  const int da = a.span();
  if (da < db) return false;
  std::vector<mpz_class> r = a.c_;
  std::vector<mpz_class> q(static_cast<std::size_t>(da - db + 1));
  const mpz_class& lead = b.c_.back();
  mpz_class f;
  for (int d = da; d >= db; --d) {
    mpz_class& top = r[static_cast<std::size_t>(d)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<std::size_t>(d - db + j)].get_mpz_t(), f.get_mpz_t(),
                 b.c_[static_cast<std::size_t>(j)].get_mpz_t());
    q[static_cast<std::size_t>(d - db)] = f;
  }
  for (int d = 0; d < db; ++d)
    if (sgn(r[static_cast<std::size_t>(d)]) != 0) return false;
  quot = from_coefficients(a.low_, std::move(q));
  return true;
}

LaurentPoly LaurentPoly::divexact(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q;
  if (!try_divide(a, b, q)) throw Error("LaurentPoly::divexact: division is not exact");
  return q;
}

namespace {

LaurentPoly primitive(LaurentPoly p) {
  if (p.is_zero()) return p;
  mpz_class c = p.content();
  if (sgn(p.highest_coeff()) < 0) c = -c;
  if (c != 1) p.divide_exact(c);
  return p;
}

mpz_class max_norm(const LaurentPoly& p) {
  mpz_class m = 0;
  for (const auto& v : p.coefficients())
    if (mpz_cmpabs(v.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(v);
  return m;
}

mpz_class eval_int(const LaurentPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

// Primitive polynomial remainder sequence.
LaurentPoly gcd_prs(LaurentPoly a, LaurentPoly b) {
  if (a.span() < b.span()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.span() == 0) return LaurentPoly(1);
    // pseudo-remainder of a by b
    std::vector<mpz_class> r = a.coefficients();
    const auto& bc = b.coefficients();
    const int db = b.span();
    const mpz_class& lead = bc.back();
    for (int d = a.span(); d >= db; --d) {
      mpz_class top = r[static_cast<std::size_t>(d)];
      if (sgn(top) == 0) continue;
      for (auto& v : r) v *= lead;
      for (int j = 0; j <= db; ++j)
        mpz_submul(r[static_cast<std::size_t>(d - db + j)].get_mpz_t(), top.get_mpz_t(),
                   bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    r.resize(static_cast<std::size_t>(db));
    a = std::move(b);
    b = primitive(LaurentPoly::from_coefficients(0, std::move(r)));
  }
  return primitive(a);
}

// True when the gcd is certainly constant: if p divides neither leading
// coefficient, the gcd mod p has at least the degree of the true gcd.
bool coprime_mod_p(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  constexpr unsigned long p = 2147483629UL;
  auto reduce = [](const std::vector<mpz_class>& c, std::vector<std::uint64_t>& out) {
    out.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = mpz_fdiv_ui(c[i].get_mpz_t(), p);
  };
  thread_local std::vector<std::uint64_t> x, y;
  reduce(a, x);
  reduce(b, y);
  if (x.back() == 0 || y.back() == 0) return false;
  auto inv = [](std::uint64_t v) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * v % p;
      v = v * v % p;
      e >>= 1;
    }
    return r;
  };
  if (x.size() < y.size()) std::swap(x, y);
  while (y.size() > 1) {
    const std::uint64_t li = inv(y.back());
    const std::size_t dy = y.size() - 1;
    while (x.size() >= y.size()) {
      std::uint64_t f = x.back() * li % p;
      std::size_t shift = x.size() - y.size();
      for (std::size_t j = 0; j < dy; ++j) x[shift + j] = (x[shift + j] + (p - f) * y[j]) % p;
      x.pop_back();
      while (!x.empty() && x.back() == 0) x.pop_back();
      if (x.empty()) return false;
    }
    std::swap(x, y);
  }
  return true;
}

}  // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (a0.is_zero()) return primitive(b0.stripped());
  if (b0.is_zero()) return primitive(a0.stripped());
  if (a0.span() == 0 || b0.span() == 0) return LaurentPoly(1);
  if (coprime_mod_p(a0.c_, b0.c_)) return LaurentPoly(1);
  LaurentPoly a = primitive(a0.stripped());
  LaurentPoly b = primitive(b0.stripped());
  if (a.span() == 0 || b.span() == 0) return LaurentPoly(1);
  if (a == b) return a;
  // Heuristic gcd: evaluate at a large integer, take the integer gcd and
  // read the candidate back off its balanced base-xi digits.
  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class h, ea = eval_int(a, xi), eb = eval_int(b, xi);
    mpz_gcd(h.get_mpz_t(), ea.get_mpz_t(), eb.get_mpz_t());
    std::vector<mpz_class> g;
    mpz_class half = xi / 2;
    while (sgn(h) != 0) {
      mpz_class digit;
      mpz_fdiv_r(digit.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
      if (digit > half) digit -= xi;
      g.push_back(digit);
      h -= digit;
      mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
    }
    LaurentPoly cand = primitive(from_coefficients(0, std::move(g)));
    LaurentPoly quot;
    if (!cand.is_zero() && try_divide(a, cand, quot) && try_divide(b, cand, quot)) return cand;
    xi = xi * 73794 / 27011;
  }
  return gcd_prs(a, b);
}

std::string LaurentPoly::to_string(const mpz_class& divisor, const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    const mpz_class& raw = c_[static_cast<std::size_t>(e - low_)];
    if (sgn(raw) == 0) continue;
    mpq_class c(raw, divisor);
    c.canonicalize();
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace uqosp
