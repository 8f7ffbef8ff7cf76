#include "uqosp/superalg/tensor.hpp"

#include <algorithm>

#include "uqosp/superalg/text.hpp"

namespace uqosp {

Tensor Tensor::pure(const std::vector<Element>& factors) {
  Tensor t(static_cast<int>(factors.size()));
  std::vector<std::pair<Key, Scalar>> acc{{Key{}, Scalar(1)}};
  for (const auto& f : factors) {
    std::vector<std::pair<Key, Scalar>> next;
    for (const auto& [k, c] : acc) {
      for (const auto& [m, d] : f.terms()) {
        Key kk = k;
        kk.push_back(m);
        next.emplace_back(std::move(kk), c * d);
      }
    }
    acc = std::move(next);
  }
  for (const auto& [k, c] : acc) t.add(k, c);
  return t;
}

void Tensor::add(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void Tensor::add(const Tensor& o) {
  for (const auto& [k, c] : o.t_) add(k, c);
}

void Tensor::add_scaled(const Tensor& o, const Scalar& s) {
  for (const auto& [k, c] : o.t_) add(k, c * s);
}

Tensor operator*(const Tensor& a, const Tensor& b) {
  Tensor r(a.rank_);
  for (const auto& [ka, ca] : a.t_) {
    for (const auto& [kb, cb] : b.t_) {
      int sign = 0;
      for (int i = 0; i < a.rank_; ++i)
        for (int j = 0; j < i; ++j) sign += ka[i].parity() * kb[j].parity();
      Tensor::Key k(a.rank_);
      int qexp = 0;
      for (int i = 0; i < a.rank_; ++i) qexp += monomial_product(ka[i], kb[i], k[i]);
      Scalar c = ca * cb;
      if (qexp) c *= RatFunc::q_power(qexp);
      if (sign & 1) c = -c;
      r.add(k, c);
    }
  }
  return r;
}

Tensor Tensor::map_slot(int i, const std::function<Tensor(const Monomial&)>& f) const {
  Tensor out(rank_);
  bool first = true;
  for (const auto& [k, c] : t_) {
    Tensor img = f(k[static_cast<std::size_t>(i)]);
    if (first) {
      out = Tensor(rank_ - 1 + img.rank());
      first = false;
    }
    for (const auto& [ki, ci] : img.t_) {
      Key nk(k.begin(), k.begin() + i);
      nk.insert(nk.end(), ki.begin(), ki.end());
      nk.insert(nk.end(), k.begin() + i + 1, k.end());
      out.add(nk, c * ci);
    }
  }
  return out;
}

Tensor Tensor::map_each(const std::function<Element(const Monomial&)>& f) const {
  Tensor out(rank_);
  for (const auto& [k, c] : t_) {
    std::vector<Element> imgs;
    imgs.reserve(k.size());
    for (const auto& m : k) imgs.push_back(f(m));
    out.add_scaled(pure(imgs), c);
  }
  return out;
}

std::vector<std::pair<Tensor::Key, Scalar>> Tensor::sorted() const {
  std::vector<std::pair<Key, Scalar>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

std::string Tensor::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : sorted()) {
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += "(" + c.to_string() + ") * ";
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) out += " (x) ";
      out += "[" + monomial_to_string(k[i]) + "]";
    }
  }
  return out;
}

}  // namespace uqosp
