#include "uqosp/rootsys/rootsys.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "uqosp/coeffield/config.hpp"
#include "uqosp/error.hpp"

namespace uqosp {
namespace {

std::string coef_term(int c, const char* sym, bool first) {
  if (c == 0) return "";
  std::string out;
  if (c < 0) out += "-";
  else if (!first) out += "+";
  int m = c < 0 ? -c : c;
  if (m != 1) out += std::to_string(m);
  return out + sym;
}

}  // namespace

std::string Weight::to_string() const {
  if (is_zero()) return "0";
  std::string out = coef_term(c_delta, "d", true);
  out += coef_term(c_alpha, "a", out.empty());
  out += coef_term(c_d, "D", out.empty());
  return out;
}

mpq_class pairing(const Weight& w1, const Weight& w2) {
  if (w1.c_d != 0 && w2.c_d != 0) throw DomainError("(d, d) is not defined");
  return mpq_class(w1.c_alpha * w2.c_alpha) * alpha_sq() + w1.c_delta * w2.c_d + w1.c_d * w2.c_delta;
}

bool RootLabel::is_root(int c_delta, int c_alpha) {
  if (c_alpha == 0) return c_delta != 0;
  return c_alpha >= -2 && c_alpha <= 2;
}

RootLabel::RootLabel(int c_delta, int c_alpha) : w_{c_delta, c_alpha, 0} {
  if (!is_root(c_delta, c_alpha)) throw DomainError("not a root: " + w_.to_string());
}

std::optional<RootLabel> RootLabel::parse(std::string_view text) {
  static const std::regex re(R"(^\s*(?:([+-]?\d*)d)?\s*(?:([+-]?\s*\d*)a)?\s*$)");
  std::string s(text);
  std::smatch m;
  if (s.empty() || !std::regex_match(s, m, re)) return std::nullopt;
  if (!m[1].matched && !m[2].matched) return std::nullopt;
  auto coef = [](std::string t) {
    t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
    if (t.empty() || t == "+") return 1;
    if (t == "-") return -1;
    return std::stoi(t);
  };
  int cd = m[1].matched ? coef(m[1].str()) : 0;
  int ca = m[2].matched ? coef(m[2].str()) : 0;
  if (m[1].matched && m[2].matched) {
    std::string a = m[2].str();
    a.erase(std::remove(a.begin(), a.end(), ' '), a.end());
    if (a.empty() || (a[0] != '+' && a[0] != '-')) return std::nullopt;
  }
  if (!is_root(cd, ca)) return std::nullopt;
  return RootLabel(cd, ca);
}

int parity(int c_delta, int c_alpha) {
  if (!RootLabel::is_root(c_delta, c_alpha)) throw DomainError("parity of a non-root");
  return (c_alpha == 1 || c_alpha == -1) ? 1 : 0;
}

CartanData cartan_data() {
  const mpq_class l = alpha_sq();
  CartanData d;
  d.symmetric = {{4 * l, -2 * l}, {-2 * l, l}};
  d.standard.assign(2, std::vector<mpq_class>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d.standard[i][j] = 2 * d.symmetric[i][j] / d.symmetric[i][i];
  d.extended = {{0, 1, 0}, {1, 4 * l, -2 * l}, {0, -2 * l, l}};
  d.extended_inverse = {{0, 1, 2}, {1, 0, 0}, {2, 0, 1 / l}};
  return d;
}

std::vector<RootLabel> enumerate_positive(int cutoff, bool reduced) {
  if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
  std::vector<RootLabel> out;
  for (int n = 0; n <= cutoff; ++n) {
    for (int m = -2; m <= 2; ++m) {
      if (!RootLabel::is_root(n, m)) continue;
      RootLabel r(n, m);
      if (!r.is_positive()) continue;
      if (reduced && r.is_double()) continue;
      out.push_back(r);
    }
  }
  return out;
}

std::vector<RootLabel> normal_order(int cutoff, Direction direction) {
  if (cutoff < 1) throw DomainError("normal_order needs cutoff >= 1");
  std::vector<RootLabel> seq;
  auto emit = [&](int n, int m) {
    if (n <= cutoff) seq.emplace_back(n, m);
  };
  emit(0, 1);
  for (int k = 1; k <= cutoff; ++k) {
    emit(2 * k - 1, 2);
    emit(k, 1);
  }
  for (int k = 1; k <= cutoff; ++k) emit(k, 0);
  for (int k = cutoff; k >= 0; --k) {
    emit(k + 1, -1);
    emit(2 * k + 1, -2);
  }
  if (direction == Direction::anticlockwise) std::reverse(seq.begin(), seq.end());
  return seq;
}

OrderCheck validate_normal_order(const std::vector<RootLabel>& seq) {
  std::map<RootLabel, std::size_t> pos;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!seq[i].is_positive()) throw DomainError("non-positive root in ordering: " + seq[i].to_string());
    if (!pos.emplace(seq[i], i).second) throw DomainError("duplicate root in ordering: " + seq[i].to_string());
  }
  OrderCheck res;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i].is_imaginary() && seq[j].is_imaginary()) continue;
      int cd = seq[i].c_delta() + seq[j].c_delta();
      int ca = seq[i].c_alpha() + seq[j].c_alpha();
      if (!RootLabel::is_root(cd, ca)) continue;
      auto it = pos.find(RootLabel(cd, ca));
      if (it == pos.end()) continue;
      if (it->second > i && it->second < j) continue;
      res.valid = false;
      res.violation = std::array<RootLabel, 3>{seq[i], seq[j], it->first};
      return res;
    }
  }
  return res;
}

}  // namespace uqosp
