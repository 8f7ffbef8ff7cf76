#include "uqosp/classical/supermatrix.hpp"

#include <sstream>

#include "uqosp/coeffield/config.hpp"
#include "uqosp/error.hpp"

namespace uqosp {

USeries::USeries(const Surd& c, int degree) { add(degree, c); }

Surd USeries::coeff(int degree) const {
  auto it = t_.find(degree);
  return it == t_.end() ? Surd() : it->second;
}

void USeries::add(int degree, const Surd& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

USeries& USeries::operator+=(const USeries& o) {
  for (const auto& [d, c] : o.t_) add(d, c);
  return *this;
}

USeries& USeries::operator-=(const USeries& o) {
  for (const auto& [d, c] : o.t_) add(d, -c);
  return *this;
}

USeries operator*(const USeries& a, const USeries& b) {
  USeries r;
  for (const auto& [da, ca] : a.t_)
    for (const auto& [db, cb] : b.t_) r.add(da + db, ca * cb);
  return r;
}

USeries operator*(const Surd& s, const USeries& a) {
  USeries r;
  for (const auto& [d, c] : a.t_) r.add(d, s * c);
  return r;
}

USeries USeries::operator-() const {
  USeries r;
  for (const auto& [d, c] : t_) r.t_.emplace(d, -c);
  return r;
}

USeries USeries::shifted(int n) const {
  USeries r;
  for (const auto& [d, c] : t_) r.t_.emplace(d + n, c);
  return r;
}

USeries USeries::derivative() const {
  USeries r;
  for (const auto& [d, c] : t_) r.add(d - 1, Surd(d) * c);
  return r;
}

std::string USeries::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [d, c] = *it;
    bool simple = c.is_rational();
    std::string cs = simple ? c.to_string() : "(" + c.to_string() + ")";
    if (d == 0) {
      os << cs;
      continue;
    }
    if (!(c == Surd(1))) os << cs << "*";
    os << "u";
    if (d != 1) os << "^" << d;
  }
  return os.str();
}

SuperMatrix SuperMatrix::unit(int i, int j, const Surd& c, int degree) {
  SuperMatrix m;
  m.e_[i][j] = USeries(c, degree);
  return m;
}

bool SuperMatrix::is_zero() const {
  for (const auto& row : e_)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

bool SuperMatrix::is_u_independent() const {
  for (const auto& row : e_)
    for (const auto& v : row)
      if (!v.is_constant()) return false;
  return true;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e_[i][j] += o.e_[i][j];
  return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e_[i][j] -= o.e_[i][j];
  return *this;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  SuperMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (a.e_[i][k].is_zero()) continue;
      for (int j = 0; j < 3; ++j)
        if (!b.e_[k][j].is_zero()) r.e_[i][j] += a.e_[i][k] * b.e_[k][j];
    }
  return r;
}

SuperMatrix operator*(const Surd& s, const SuperMatrix& a) {
  SuperMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.e_[i][j] = s * a.e_[i][j];
  return r;
}

SuperMatrix SuperMatrix::operator-() const { return Surd(-1) * *this; }

SuperMatrix SuperMatrix::shifted(int n) const {
  SuperMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.e_[i][j] = e_[i][j].shifted(n);
  return r;
}

SuperMatrix SuperMatrix::parity_part(int p) const {
  SuperMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if ((index_parity(i) + index_parity(j)) % 2 == p) r.e_[i][j] = e_[i][j];
  return r;
}

std::optional<int> SuperMatrix::parity() const {
  std::optional<int> p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (e_[i][j].is_zero()) continue;
      int q = (index_parity(i) + index_parity(j)) % 2;
      if (p && *p != q) return std::nullopt;
      p = q;
    }
  return p.value_or(0);
}

USeries SuperMatrix::supertrace() const {
  USeries s;
  for (int i = 0; i < 3; ++i) {
    if (index_parity(i) == 0) s += e_[i][i];
    else s -= e_[i][i];
  }
  return s;
}

SuperMatrix SuperMatrix::degree_part(int n) const {
  SuperMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.e_[i][j] = USeries(e_[i][j].coeff(n), n);
  return r;
}

std::string SuperMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    os << "[";
    for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << e_[i][j].to_string();
    os << "]";
    if (i < 2) os << "\n";
  }
  return os.str();
}

SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b) {
  SuperMatrix r;
  for (int pa = 0; pa < 2; ++pa) {
    SuperMatrix x = a.parity_part(pa);
    if (x.is_zero()) continue;
    for (int pb = 0; pb < 2; ++pb) {
      SuperMatrix y = b.parity_part(pb);
      if (y.is_zero()) continue;
      r += x * y;
      if (pa && pb) r += y * x;
      else r -= y * x;
    }
  }
  return r;
}

SuperMatrix osp_h() {
  Surd l(alpha_sq());
  return SuperMatrix::unit(1, 1, l) + SuperMatrix::unit(2, 2, -l);
}

SuperMatrix osp_e(int m) {
  Surd l(alpha_sq());
  switch (m) {
    case 1: return SuperMatrix::unit(1, 0) + SuperMatrix::unit(0, 2);
    case -1: return SuperMatrix::unit(0, 1, l) - SuperMatrix::unit(2, 0, l);
    case 2: return SuperMatrix::unit(1, 2);
    case -2: return SuperMatrix::unit(2, 1, -(l * l));
    default: throw DomainError("osp(1|2) has root vectors e_{ma} for m in {1, -1, 2, -2}");
  }
}

}  // namespace uqosp
