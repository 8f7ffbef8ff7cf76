#include "uqosp/cartanweyl/schur.hpp"

#include <sstream>

namespace uqosp {

namespace {

void partitions_rec(int i, int n, int rem, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (i > n) {
    if (rem == 0) out.push_back(cur);
    return;
  }
  for (int p = 0; p * i <= rem; ++p) {
    cur.push_back(p);
    partitions_rec(i + 1, n, rem - p * i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> weighted_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (n >= 1) partitions_rec(1, n, n, cur, out);
  return out;
}

Scalar default_kappa() { return Scalar::q_power(1) - Scalar::q_power(-1); }

FormalPoly::FormalPoly(const Scalar& c) { add({}, c); }

FormalPoly FormalPoly::variable(int i) {
  Exponents e(static_cast<std::size_t>(i), 0);
  e.back() = 1;
  FormalPoly p;
  p.add(std::move(e), Scalar(1));
  return p;
}

void FormalPoly::add(Exponents e, const Scalar& c) {
  if (c.is_zero()) return;
  while (!e.empty() && e.back() == 0) e.pop_back();
  auto [it, inserted] = t_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

FormalPoly& FormalPoly::operator+=(const FormalPoly& o) {
  for (const auto& [e, c] : o.t_) add(e, c);
  return *this;
}

FormalPoly& FormalPoly::operator-=(const FormalPoly& o) {
  for (const auto& [e, c] : o.t_) add(e, -c);
  return *this;
}

FormalPoly operator*(const FormalPoly& a, const FormalPoly& b) {
  FormalPoly r;
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) {
      FormalPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add(std::move(e), ca * cb);
    }
  }
  return r;
}

FormalPoly operator*(const Scalar& s, const FormalPoly& a) {
  FormalPoly r;
  for (const auto& [e, c] : a.t_) r.add(e, s * c);
  return r;
}

std::string FormalPoly::to_string(const std::string& var) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      int p = it->first[i];
      if (p == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(i + 1);
      if (p > 1) mono += "^" + std::to_string(p);
    }
    if (mono.empty()) {
      os << "(" << it->second.to_string() << ")";
    } else if (it->second.is_one()) {
      os << mono;
    } else {
      os << "(" << it->second.to_string() << ")*" << mono;
    }
  }
  return os.str();
}

SchurCheck check_schur(int order, const Scalar& kappa) {
  SchurCheck out;
  out.order = order;
  std::vector<FormalPoly> x;
  for (int i = 1; i <= order; ++i) x.push_back(FormalPoly::variable(i));
  std::vector<FormalPoly> primed;
  for (int n = 1; n <= order; ++n) primed.push_back(schur_forward(n, x, kappa));

  // exp K(t) truncated at t^order; series[k] is the coefficient of t^k.
  using Series = std::vector<FormalPoly>;
  auto mul = [order](const Series& a, const Series& b) {
    Series r(static_cast<std::size_t>(order + 1));
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order; ++j)
        if (!a[i].is_zero() && !b[j].is_zero()) r[i + j] += a[i] * b[j];
    return r;
  };
  Series k(static_cast<std::size_t>(order + 1));
  for (int n = 1; n <= order; ++n) k[n] = kappa * x[n - 1];
  Series expk(static_cast<std::size_t>(order + 1));
  expk[0] = FormalPoly(Scalar(1));
  Series power = expk;
  for (int j = 1; j <= order; ++j) {
    power = mul(power, k);
    Scalar inv_fact(mpq_class(1, detail::factorial(j)));
    for (int i = 0; i <= order; ++i) expk[i] += inv_fact * power[i];
  }

  for (int n = 1; n <= order; ++n) {
    bool rt = schur_inverse(n, primed, kappa) == x[n - 1];
    bool gf = kappa * primed[n - 1] == expk[n];
    if (!rt) out.roundtrip = false;
    if (!gf) out.generating_function = false;
    if ((!rt || !gf) && out.first_failure == 0) out.first_failure = n;
  }
  if (!(expk[0] == FormalPoly(Scalar(1)))) {
    out.generating_function = false;
    if (out.first_failure == 0) out.first_failure = -1;
  }
  return out;
}

}  // namespace uqosp
