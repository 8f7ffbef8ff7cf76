#include "uqosp/rewrite/rewrite_system.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <tuple>

#include "uqosp/coeffield/config.hpp"
#include "uqosp/error.hpp"
#include "uqosp/rewrite/detail.hpp"
#include "uqosp/superalg/hopf.hpp"
#include "uqosp/superalg/text.hpp"

namespace uqosp {

namespace detail {

Engine::Engine(int bound) : bound_(bound) {
  alpha_sq_int();
  inv_qq_ = RatFunc(LaurentPoly::q_power(1) - LaurentPoly::q_power(-1)).inverse();
}

const RatFunc& Engine::q_power(int n) const {
  auto it = qpow_.find(n);
  if (it != qpow_.end()) return it->second;
  return qpow_.emplace(n, RatFunc::q_power(n)).first->second;
}

void Engine::set_rule(const Word& lhs, PureVec rhs) {
  rules_[lhs] = std::move(rhs);
  max_lhs_ = 0;
  for (const auto& [l, r] : rules_) max_lhs_ = std::max(max_lhs_, l.size());
  invalidate(lhs);
}

void Engine::erase_rule(const Word& lhs) {
  rules_.erase(lhs);
  invalidate(lhs);
}

// Drops the cached normal forms that a rule on `w` can change: those whose
// word or result contains w. The rest remain valid reductions.
void Engine::invalidate(const Word& w) {
  auto has = [&w](const Word& big) {
    for (int i = 0; i + w.size() <= big.size(); ++i)
      if (big.sub(i, w.size()) == w) return true;
    return false;
  };
  for (auto it = pure_cache_.begin(); it != pure_cache_.end();) {
    bool stale = has(it->first);
    for (const auto& [rw, c] : it->second)
      if (!stale && has(rw)) stale = true;
    it = stale ? pure_cache_.erase(it) : std::next(it);
  }
  lmul_cache_.clear();
  word_cache_.clear();
}

void Engine::clear_caches() {
  pure_cache_.clear();
  lmul_cache_.clear();
  word_cache_.clear();
}

std::optional<std::pair<int, Word>> Engine::find_rule(const Word& w) const {
  for (int len = std::min(w.size(), max_lhs_); len >= 2; --len) {
    for (int i = 0; i + len <= w.size(); ++i) {
      Word sub = w.sub(i, len);
      if (rules_.count(sub)) return std::make_pair(i, sub);
    }
  }
  return std::nullopt;
}

const PureVec& Engine::purenf(const Word& w) const {
  auto it = pure_cache_.find(w);
  if (it != pure_cache_.end()) return it->second;
  PureVec result;
  auto hit = find_rule(w);
  if (!hit) {
    result.emplace_back(w, RatFunc(1));
  } else {
    const auto& [i, lhs] = *hit;
    Word pre = w.prefix(i);
    Word suf = w.suffix_from(i + lhs.size());
    std::unordered_map<Word, RatFunc, WordHash> acc;
    for (const auto& [rw, c] : rules_.at(lhs)) {
      const PureVec& sub = purenf(pre + rw + suf);
      for (const auto& [w2, c2] : sub) acc[w2] += c * c2;
    }
    for (auto& [w2, c2] : acc)
      if (!c2.is_zero()) result.emplace_back(w2, std::move(c2));
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return pure_cache_.emplace(w, std::move(result)).first->second;
}

MonoVec Engine::push_letter(Letter a, const Word& n, const Word& p) const {
  std::unordered_map<Monomial, RatFunc, MonomialHash> acc;
  if (is_negative(a)) {
    for (const auto& [nn, c] : purenf(Word::single(a) + n)) acc[Monomial{{0, 0, 0}, nn + p}] += c;
  } else {
    int sg = 1;
    const Letter partner = opposite(a);
    const KExp kk = letter_k(a);
    for (int j = 0; j < n.size(); ++j) {
      Letter f = n.at(j);
      if (f == partner) {
        Word pre = n.prefix(j);
        Word rest = pre + n.suffix_from(j + 1);
        Weight wpre = pre.weight();
        const PureVec& rest_nf = purenf(rest);
        for (int e : {1, -1}) {
          KExp k{e * kk[0], e * kk[1], e * kk[2]};
          RatFunc fac = inv_qq_ * q_power(-k_pairing(k, wpre));
          if (sg * e < 0) fac = -fac;
          for (const auto& [nn, c] : rest_nf) acc[Monomial{k, nn + p}] += fac * c;
        }
      }
      if (letter_parity(a) & letter_parity(f)) sg = -sg;
    }
    const PureVec& n_nf = purenf(n);
    const PureVec& ap = purenf(Word::single(a) + p);
    for (const auto& [nn, c] : n_nf)
      for (const auto& [pp, c2] : ap) acc[Monomial{{0, 0, 0}, nn + pp}] += sg > 0 ? c * c2 : -(c * c2);
  }
  MonoVec out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.emplace_back(m, std::move(c));
  return out;
}

const MonoVec& Engine::lmul(Letter a, const Word& w) const {
  Word key = Word::single(a) + w;
  auto it = lmul_cache_.find(key);
  if (it != lmul_cache_.end()) return it->second;
  int i = w.first_positive();
  MonoVec r = push_letter(a, w.prefix(i), w.suffix_from(i));
  return lmul_cache_.emplace(key, std::move(r)).first->second;
}

const MonoVec& Engine::word_nf(const Word& w) const {
  auto it = word_cache_.find(w);
  if (it != word_cache_.end()) return it->second;
  MonoVec out;
  if (w.size() <= 1) {
    out.emplace_back(Monomial{{0, 0, 0}, w}, RatFunc(1));
  } else {
    const MonoVec& rest = word_nf(w.suffix_from(1));
    Letter a = w.front();
    Weight wa = letter_weight(a);
    std::unordered_map<Monomial, RatFunc, MonomialHash> acc;
    for (const auto& [m, c] : rest) {
      RatFunc cf = c;
      int e = -k_pairing(m.k, wa);
      if (e) cf *= q_power(e);
      const MonoVec& pushed = lmul(a, m.word);
      for (const auto& [m2, c2] : pushed) acc[Monomial{m.k + m2.k, m2.word}] += cf * c2;
    }
    for (auto& [m, c] : acc)
      if (!c.is_zero()) out.emplace_back(m, std::move(c));
  }
  return word_cache_.emplace(w, std::move(out)).first->second;
}

PureMap Engine::reduce_pure(const PureMap& x) const {
  PureMap out;
  for (const auto& [w, c] : x) {
    for (const auto& [w2, c2] : purenf(w)) {
      auto [it, ins] = out.try_emplace(w2, c * c2);
      if (!ins) {
        it->second += c * c2;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace detail

namespace {

using detail::PureMap;

PureMap to_pure(const Element& x) {
  PureMap out;
  for (const auto& [m, c] : x.terms()) {
    if (m.k != KExp{0, 0, 0}) throw Error("expected a k-free element");
    if (!c.in_base_field()) throw Error("expected coefficients in Q(q)");
    out[m.word] += c.coord(0);
    if (out[m.word].is_zero()) out.erase(m.word);
  }
  return out;
}

void add_to(PureMap& x, const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, ins] = x.try_emplace(w, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

bool contains(const Word& big, const Word& small) {
  for (int i = 0; i + small.size() <= big.size(); ++i)
    if (big.sub(i, small.size()) == small) return true;
  return false;
}

PureMap rule_difference(const Word& lhs, const PureVec& rhs) {
  PureMap d;
  d[lhs] = RatFunc(1);
  for (const auto& [w, c] : rhs) add_to(d, w, -c);
  return d;
}

void complete_part(detail::Engine& eng, std::vector<PureMap> pending, const CompletionOptions& opt,
                   CompletionStats& stats, std::size_t& part_rules) {
  const int D = opt.bound;
  while (!pending.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pending.size(); ++i) {
      if (pending[i].empty()) {
        best = i;
        break;
      }
      if (!pending[best].empty() && pending[i].rbegin()->first < pending[best].rbegin()->first) best = i;
    }
    PureMap x = std::move(pending[best]);
    pending[best] = std::move(pending.back());
    pending.pop_back();
    if (x.empty()) continue;
    x = eng.reduce_pure(x);
    if (x.empty()) continue;
    Word lead = x.rbegin()->first;
    if (lead.size() > D) continue;
    RatFunc inv = x.rbegin()->second.inverse();
    PureVec rhs;
    for (const auto& [w, c] : x)
      if (w != lead) rhs.emplace_back(w, -(c * inv));

    std::vector<Word> doomed;
    for (const auto& [l2, r2] : eng.rules())
      if (contains(l2, lead)) doomed.push_back(l2);
    for (const auto& l2 : doomed) {
      if (!(contains(l2, lead))) continue;
      pending.push_back(rule_difference(l2, eng.rules().at(l2)));
      eng.erase_rule(l2);
      --part_rules;
    }
    eng.set_rule(lead, rhs);
    ++part_rules;
    if (eng.rules().size() > opt.rule_ceiling)
      throw CompletionError("rule ceiling " + std::to_string(opt.rule_ceiling) + " exceeded at bound " +
                            std::to_string(D) + " (last lhs " + lead.to_string() + ")");

    std::vector<std::pair<Word, PureVec>> snapshot(eng.rules().begin(), eng.rules().end());
    for (const auto& [l2, r2] : snapshot) {
      const std::pair<const Word*, const PureVec*> sides[2][2] = {{{&lead, &rhs}, {&l2, &r2}},
                                                                  {{&l2, &r2}, {&lead, &rhs}}};
      for (int s = 0; s < 2; ++s) {
        if (s == 1 && l2 == lead) break;
        const Word& A = *sides[s][0].first;
        const PureVec& RA = *sides[s][0].second;
        const Word& B = *sides[s][1].first;
        const PureVec& RB = *sides[s][1].second;
        for (int k = 1; k < std::min(A.size(), B.size()); ++k) {
          if (A.size() + B.size() - k > D) continue;
          if (A.sub(A.size() - k, k) != B.prefix(k)) continue;
          Word pre = A.prefix(A.size() - k);
          Word rest = B.suffix_from(k);
          PureMap sp;
          for (const auto& [w, c] : RA) add_to(sp, w + rest, c);
          for (const auto& [w, c] : RB) add_to(sp, pre + w, -c);
          ++stats.critical_pairs;
          if (!sp.empty()) pending.push_back(std::move(sp));
        }
      }
    }
  }
}

MonoVec to_monovec(const std::unordered_map<Monomial, RatFunc, MonomialHash>& acc) {
  MonoVec out;
  for (const auto& [m, c] : acc)
    if (!c.is_zero()) out.emplace_back(m, c);
  return out;
}

}  // namespace

struct RewriteSystem::Impl {
  explicit Impl(int bound) : engine(bound) {}
  detail::Engine engine;
  CompletionStats stats;
};

RewriteSystem::RewriteSystem(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
RewriteSystem::RewriteSystem(RewriteSystem&&) noexcept = default;
RewriteSystem& RewriteSystem::operator=(RewriteSystem&&) noexcept = default;
RewriteSystem::~RewriteSystem() = default;

Element serre_quintic(int sign) {
  Element x = Element::gen(sign > 0 ? kEa : kFa);
  Element r = Element::gen(sign > 0 ? kEa0 : kFa0);
  for (int i = 0; i < 5; ++i) r = qbracket(x, r, 1);
  return r;
}

Element serre_cubic(int sign) {
  Element x = Element::gen(sign > 0 ? kEa : kFa);
  Element y = Element::gen(sign > 0 ? kEa0 : kFa0);
  return qbracket(qbracket(x, y, 1), y, 1);
}

RewriteSystem RewriteSystem::complete(const CompletionOptions& options) {
  if (options.bound < 2) throw DomainError("completion bound must be at least 2");
  if (options.bound > Word::kMaxLength) throw DomainError("completion bound above the word-length limit");
  auto t0 = std::chrono::steady_clock::now();
  auto impl = std::make_unique<Impl>(options.bound);
  detail::Engine& eng = impl->engine;
  for (int sign : {1, -1}) {
    std::vector<PureMap> seeds{to_pure(serre_cubic(sign)), to_pure(serre_quintic(sign))};
    std::size_t& count = sign > 0 ? impl->stats.positive_rules : impl->stats.negative_rules;
    complete_part(eng, std::move(seeds), options, impl->stats, count);
  }
  // Overlaps of Serre rules with the swap rules.
  for (const auto& [lhs, rhs] : eng.rules()) {
    if (lhs.size() + 1 > options.bound) continue;
    bool positive = is_positive(lhs.front());
    const std::array<Letter, 2> others = positive ? std::array<Letter, 2>{kFa0, kFa} : std::array<Letter, 2>{kEa0, kEa};
    for (Letter other : others) {
      std::unordered_map<Monomial, RatFunc, MonomialHash> acc;
      if (positive) {
        for (const auto& [m, c] : eng.word_nf(lhs + Word::single(other))) acc[m] += c;
        for (const auto& [w, c] : rhs)
          for (const auto& [m, c2] : eng.word_nf(w + Word::single(other))) acc[m] -= c * c2;
      } else {
        for (const auto& [m, c] : eng.push_letter(other, lhs, Word{})) acc[m] += c;
        for (const auto& [w, c] : rhs)
          for (const auto& [m, c2] : eng.lmul(other, w)) acc[m] -= c * c2;
      }
      ++impl->stats.mixed_checks;
      MonoVec left = to_monovec(acc);
      if (!left.empty())
        throw CompletionError("mixed overlap of " + lhs.to_string() + " with " + letter_name(other) +
                              " does not resolve: " + to_element(left).to_string());
    }
  }
  impl->stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return RewriteSystem(std::move(impl));
}

int RewriteSystem::bound() const { return impl_->engine.bound(); }
const CompletionStats& RewriteSystem::stats() const { return impl_->stats; }

std::vector<Rule> RewriteSystem::rules() const {
  std::vector<Rule> out;
  for (const auto& [l, r] : impl_->engine.rules()) out.push_back(Rule{l, r});
  std::sort(out.begin(), out.end(), [](const Rule& a, const Rule& b) {
    bool pa = is_positive(a.lhs.front()), pb = is_positive(b.lhs.front());
    if (pa != pb) return pb;
    return a.lhs < b.lhs;
  });
  return out;
}

Element to_element(const MonoVec& v) {
  Element e;
  for (const auto& [m, c] : v) e.add(m, Scalar(c));
  return e;
}

const MonoVec& RewriteSystem::normal_form_word(const Word& w) const {
  if (w.size() > bound()) throw BoundExceeded(bound(), w.size());
  return impl_->engine.word_nf(w);
}

namespace {

using ScalarAcc = std::unordered_map<Monomial, Scalar, MonomialHash>;
using WordTerms = std::vector<std::pair<Word, Scalar>>;

bool letter_lex_less(const Word& a, const Word& b) {
  int n = std::min(a.size(), b.size());
  for (int i = 0; i < n; ++i)
    if (a.at(i) != b.at(i)) return a.at(i) < b.at(i);
  return a.size() < b.size();
}

// Normal form of sum c w[depth:] over terms[lo, hi), which share their first
// `depth` letters and are sorted letter-lexicographically. Suffixes with a
// common first letter are reduced together before that letter is pushed in.
ScalarAcc trie_nf(const detail::Engine& eng, const WordTerms& terms, std::size_t lo, std::size_t hi, int depth) {
  ScalarAcc acc;
  std::size_t i = lo;
  for (; i < hi && terms[i].first.size() == depth; ++i) {
    Monomial one{{0, 0, 0}, Word{}};
    auto [it, ins] = acc.try_emplace(one, terms[i].second);
    if (!ins) it->second += terms[i].second;
  }
  while (i < hi) {
    Letter a = terms[i].first.at(depth);
    std::size_t j = i;
    while (j < hi && terms[j].first.at(depth) == a) ++j;
    ScalarAcc sub = trie_nf(eng, terms, i, j, depth + 1);
    const Weight wa = letter_weight(a);
    for (const auto& [m, c] : sub) {
      if (c.is_zero()) continue;
      Scalar cf = c;
      int e = -k_pairing(m.k, wa);
      if (e) cf *= RatFunc::q_power(e);
      for (const auto& [m2, c2] : eng.lmul(a, m.word)) {
        Monomial key{m.k + m2.k, m2.word};
        auto [it, ins] = acc.try_emplace(key, cf * c2);
        if (!ins) it->second += cf * c2;
      }
    }
    i = j;
  }
  return acc;
}

}  // namespace

Element RewriteSystem::normal_form(const Element& x) const {
  int need = x.max_word_length();
  if (need > bound()) throw BoundExceeded(bound(), need);
  std::map<KExp, WordTerms> groups;
  for (const auto& [m, c] : x.terms()) groups[m.k].emplace_back(m.word, c);
  Element out;
  for (auto& [k, terms] : groups) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return letter_lex_less(a.first, b.first); });
    for (const auto& [m, c] : trie_nf(impl_->engine, terms, 0, terms.size(), 0)) out.add(Monomial{k + m.k, m.word}, c);
  }
  return out;
}

bool RewriteSystem::equal_mod_relations(const Element& x, const Element& y) const {
  return normal_form(x - y).is_zero();
}

std::vector<Redex> RewriteSystem::redexes(const Word& w) const {
  std::vector<Redex> out;
  for (int i = 0; i + 1 < w.size(); ++i)
    if (is_positive(w.at(i)) && is_negative(w.at(i + 1))) out.push_back(Redex{Redex::swap, i, w.sub(i, 2)});
  for (const auto& [lhs, rhs] : impl_->engine.rules())
    for (int i = 0; i + lhs.size() <= w.size(); ++i)
      if (w.sub(i, lhs.size()) == lhs) out.push_back(Redex{Redex::rule, i, lhs});
  std::sort(out.begin(), out.end(), [](const Redex& a, const Redex& b) {
    return std::tie(a.kind, a.position, a.lhs) < std::tie(b.kind, b.position, b.lhs);
  });
  return out;
}

Element RewriteSystem::apply(const Monomial& m, const Redex& r) const {
  const Word& w = m.word;
  Element u = Element::word(w.prefix(r.position));
  Element v = Element::word(w.suffix_from(r.position + r.lhs.size()));
  Element middle;
  if (r.kind == Redex::swap) {
    Letter a = w.at(r.position), f = w.at(r.position + 1);
    Scalar sign = (letter_parity(a) & letter_parity(f)) ? Scalar(-1) : Scalar(1);
    middle = sign * (Element::gen(f) * Element::gen(a));
    if (f == opposite(a)) {
      Scalar iq = Scalar(impl_->engine.inv_qq());
      middle += iq * (Element::k(letter_k(a)) - Element::k(-letter_k(a)));
    }
  } else {
    for (const auto& [rw, c] : impl_->engine.rules().at(r.lhs)) middle.add(Monomial{{0, 0, 0}, rw}, Scalar(c));
  }
  return Element::k(m.k) * u * middle * v;
}

Element RewriteSystem::random_reduce(const Element& x, std::mt19937_64& rng) const {
  Element cur = x;
  for (;;) {
    std::vector<std::pair<Monomial, std::vector<Redex>>> reducible;
    for (const auto& [m, c] : cur.sorted()) {
      auto rs = redexes(m.word);
      if (!rs.empty()) reducible.emplace_back(m, std::move(rs));
    }
    if (reducible.empty()) return cur;
    auto& [m, rs] = reducible[std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(rng)];
    const Redex& r = rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng)];
    Scalar c = cur.coeff(m);
    cur.add(m, -c);
    cur += c * apply(m, r);
  }
}

std::vector<std::string> RewriteSystem::dump() const {
  std::vector<std::string> out;
  const std::pair<const char*, KExp> ks[3] = {{"k_d", {1, 0, 0}}, {"k_a", {0, 1, 0}}, {"k_a0", {0, 0, 1}}};
  for (const auto& [name, e] : ks) {
    out.push_back(std::string(name) + " * " + name + "^-1 -> 1");
    out.push_back(std::string(name) + "^-1 * " + name + " -> 1");
  }
  for (const auto& [name, e] : ks) {
    for (Letter l : {kFa0, kFa, kEa0, kEa}) {
      Element lhs_k = Element::k(e);
      Element prod = Element::gen(l) * lhs_k;
      out.push_back(letter_name(l) + " * " + name + " -> " + prod.to_string());
    }
  }
  for (Letter a : {kEa0, kEa}) {
    for (Letter f : {kFa0, kFa}) {
      Monomial m{{0, 0, 0}, Word::single(a) + Word::single(f)};
      out.push_back(monomial_to_string(m) + " -> " + apply(m, Redex{Redex::swap, 0, m.word}).to_string());
    }
  }
  for (const auto& r : rules()) {
    Element rhs;
    for (const auto& [w, c] : r.rhs) rhs.add(Monomial{{0, 0, 0}, w}, Scalar(c));
    out.push_back(monomial_to_string(Monomial{{0, 0, 0}, r.lhs}) + " -> " + rhs.to_string());
  }
  return out;
}

}  // namespace uqosp
