#include "uqosp/classical/checks.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include "uqosp/cartanweyl/table.hpp"
#include "uqosp/classical/loop.hpp"
#include "uqosp/coeffield/config.hpp"
#include "uqosp/error.hpp"

namespace uqosp {

namespace {

using G = ChevalleyGen;

LoopElement br(const LoopElement& x, const LoopElement& y) { return loop_bracket(x, y); }
LoopElement img(G g) { return chevalley_image(g); }

CheckItem expect(std::string name, const LoopElement& got, const LoopElement& want) {
  LoopElement diff = got - want;
  CheckItem it{std::move(name), diff.is_zero(), ""};
  if (!it.pass) it.detail = "residual:\n" + diff.to_string();
  return it;
}

Surd sign(int n) { return (n % 2 == 0) ? Surd(1) : Surd(-1); }

int parity_of(const LoopElement& x) { return x.parity().value_or(0); }

}  // namespace

ClassicalReport check_chevalley_relations() {
  ClassicalReport r;
  const Surd l(alpha_sq());
  const LoopElement zero;
  const G cartan[] = {G::h_d, G::h_a0, G::h_a};
  for (G a : cartan)
    for (G b : cartan)
      r.items.push_back(expect("[" + chevalley_name(a) + "," + chevalley_name(b) + "] = 0", br(img(a), img(b)), zero));

  r.items.push_back(expect("[e_a,e_-a] = h_a", br(img(G::e_a), img(G::f_a)), img(G::h_a)));
  r.items.push_back(expect("[e_a0,e_-a0] = h_a0", br(img(G::e_a0), img(G::f_a0)), img(G::h_a0)));
  r.items.push_back(expect("[e_a,e_-a0] = 0", br(img(G::e_a), img(G::f_a0)), zero));
  r.items.push_back(expect("[e_a0,e_-a] = 0", br(img(G::e_a0), img(G::f_a)), zero));

  r.items.push_back(expect("[h_d,e_a0] = e_a0", br(img(G::h_d), img(G::e_a0)), img(G::e_a0)));
  r.items.push_back(expect("[h_d,e_-a0] = -e_-a0", br(img(G::h_d), img(G::f_a0)), -img(G::f_a0)));
  r.items.push_back(expect("[h_d,e_a] = 0", br(img(G::h_d), img(G::e_a)), zero));
  r.items.push_back(expect("[h_d,e_-a] = 0", br(img(G::h_d), img(G::f_a)), zero));

  r.items.push_back(expect("[h_a0,e_a0] = 4l e_a0", br(img(G::h_a0), img(G::e_a0)), Surd(4) * l * img(G::e_a0)));
  r.items.push_back(expect("[h_a0,e_-a0] = -4l e_-a0", br(img(G::h_a0), img(G::f_a0)), Surd(-4) * l * img(G::f_a0)));
  r.items.push_back(expect("[h_a0,e_a] = -2l e_a", br(img(G::h_a0), img(G::e_a)), Surd(-2) * l * img(G::e_a)));
  r.items.push_back(expect("[h_a0,e_-a] = 2l e_-a", br(img(G::h_a0), img(G::f_a)), Surd(2) * l * img(G::f_a)));

  r.items.push_back(expect("[h_a,e_a0] = -2l e_a0", br(img(G::h_a), img(G::e_a0)), Surd(-2) * l * img(G::e_a0)));
  r.items.push_back(expect("[h_a,e_-a0] = 2l e_-a0", br(img(G::h_a), img(G::f_a0)), Surd(2) * l * img(G::f_a0)));
  r.items.push_back(expect("[h_a,e_a] = l e_a", br(img(G::h_a), img(G::e_a)), l * img(G::e_a)));
  r.items.push_back(expect("[h_a,e_-a] = -l e_-a", br(img(G::h_a), img(G::f_a)), -l * img(G::f_a)));

  for (int s : {1, -1}) {
    LoopElement ea = img(s > 0 ? G::e_a : G::f_a);
    LoopElement e0 = img(s > 0 ? G::e_a0 : G::f_a0);
    std::string tag = s > 0 ? "+" : "-";
    LoopElement x = e0;
    for (int i = 0; i < 5; ++i) x = br(ea, x);
    r.items.push_back(expect("quintic Serre (" + tag + ")", x, zero));
    r.items.push_back(expect("cubic Serre (" + tag + ")", br(br(ea, e0), e0), zero));
  }

  LoopElement h_delta = img(G::h_a0) + Surd(2) * img(G::h_a);
  r.items.push_back(expect("h_a0 + 2h_a -> c", h_delta, LoopElement::c()));
  const G all[] = {G::h_d, G::h_a0, G::h_a, G::e_a, G::f_a, G::e_a0, G::f_a0};
  for (G g : all) r.items.push_back(expect("[h_a0 + 2h_a," + chevalley_name(g) + "] = 0", br(h_delta, img(g)), zero));
  return r;
}

ClassicalReport check_root_brackets(int n_max) {
  if (n_max < 1) throw DomainError("check_classical needs n_max >= 1");
  ClassicalReport r;
  struct Family {
    int ca;
    int sign_shift;  // sign (-1)^{n + sign_shift}
  };
  const Family fams[] = {{-2, 1}, {2, 1}, {-1, 1}, {1, 0}, {0, 0}};
  for (int n = 1; n <= n_max; ++n)
    for (const auto& f : fams) {
      RootLabel pos(n, f.ca);
      LoopElement got = br(realize(pos), realize(-pos));
      LoopElement want = sign(n + f.sign_shift) * coroot(n, f.ca);
      r.items.push_back(expect("[e_" + pos.to_string() + ",e_" + (-pos).to_string() + "] = " + (sign(n + f.sign_shift) == Surd(1) ? "" : "-") + "h_" + pos.to_string(), got, want));
    }
  return r;
}

ClassicalReport check_cocycle(int max_degree) {
  ClassicalReport r;
  std::vector<LoopElement> basis;
  std::vector<std::string> names;
  const char* labels[] = {"h_a", "e_a", "e_-a", "e_2a", "e_-2a"};
  for (int k = -max_degree; k <= max_degree; ++k) {
    SuperMatrix mats[] = {osp_h(), osp_e(1), osp_e(-1), osp_e(2), osp_e(-2)};
    for (int i = 0; i < 5; ++i) {
      basis.push_back(LoopElement::from(mats[i].shifted(k)));
      names.push_back(std::string(labels[i]) + "u^" + std::to_string(k));
    }
  }
  const std::size_t nb = basis.size();
  std::vector<int> par(nb);
  for (std::size_t i = 0; i < nb; ++i) par[i] = parity_of(basis[i]);

  std::size_t skew_bad = 0, residue_bad = 0;
  std::string skew_first, residue_first;
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      Surd xy = cocycle(basis[i], basis[j]);
      Surd yx = cocycle(basis[j], basis[i]);
      Surd s = (1 + par[i] * par[j]) % 2 == 0 ? Surd(1) : Surd(-1);
      if (!(xy == s * yx) && skew_bad++ == 0) skew_first = names[i] + ", " + names[j];
      if (!(xy == cocycle_residue(basis[i], basis[j])) && residue_bad++ == 0) residue_first = names[i] + ", " + names[j];
    }
  r.items.push_back({"cocycle skew-supersymmetry", skew_bad == 0,
                     skew_bad ? std::to_string(skew_bad) + " failures, first " + skew_first : ""});
  r.items.push_back({"closed form = residue form", residue_bad == 0,
                     residue_bad ? std::to_string(residue_bad) + " failures, first " + residue_first : ""});

  std::vector<std::vector<SuperMatrix>> bracket(nb, std::vector<SuperMatrix>(nb));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) bracket[i][j] = supercommutator(basis[i].matrix, basis[j].matrix);
  auto psi = [&](std::size_t i, std::size_t j, std::size_t k) {
    return cocycle(LoopElement::from(bracket[i][j]), basis[k]);
  };
  auto sg = [&](std::size_t a, std::size_t b) { return (par[a] && par[b]) ? Surd(-1) : Surd(1); };

  std::size_t cyclic_bad = 0, literal_bad = 0, triples = 0;
  std::string cyclic_first;
  for (std::size_t x = 0; x < nb; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      for (std::size_t z = 0; z < nb; ++z) {
        ++triples;
        Surd cyc = sg(x, z) * psi(x, y, z) + sg(y, x) * psi(y, z, x) + sg(z, y) * psi(z, x, y);
        if (!cyc.is_zero() && cyclic_bad++ == 0) cyclic_first = names[x] + ", " + names[y] + ", " + names[z];
        Surd lit = sg(x, z) * psi(x, y, z) + sg(z, x) * psi(z, y, x) + sg(x, y) * psi(x, z, y);
        if (!lit.is_zero()) ++literal_bad;
      }
  r.items.push_back({"cocycle identity, cyclic form", cyclic_bad == 0,
                     std::to_string(triples) + " triples" +
                         (cyclic_bad ? ", " + std::to_string(cyclic_bad) + " failures, first " + cyclic_first : "")});
  r.items.push_back({"cocycle identity, terms ([x,y],z) ([z,y],x) ([x,z],y) (informational)", true,
                     std::to_string(literal_bad) + " of " + std::to_string(triples) + " triples nonzero"});
  return r;
}

ClassicalReport check_form() {
  ClassicalReport r;
  std::vector<SuperMatrix> basis = {osp_h(), osp_e(1), osp_e(-1), osp_e(2), osp_e(-2)};
  std::size_t sym_bad = 0, inv_bad = 0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      int pi = basis[i].parity().value_or(0), pj = basis[j].parity().value_or(0);
      Surd s = (pi && pj) ? Surd(-1) : Surd(1);
      if (!(killing_form(basis[i], basis[j]) == s * killing_form(basis[j], basis[i]))) ++sym_bad;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        Surd lhs = killing_form(supercommutator(basis[i], basis[j]), basis[k]);
        Surd rhs = killing_form(basis[i], supercommutator(basis[j], basis[k]));
        if (!(lhs == rhs)) ++inv_bad;
      }
    }
  r.items.push_back({"form supersymmetry", sym_bad == 0, std::to_string(sym_bad) + " failures"});
  r.items.push_back({"form invariance", inv_bad == 0, std::to_string(inv_bad) + " failures"});
  Surd he = killing_form(osp_h(), osp_e(2));
  r.items.push_back({"(h_a|e_2a) = 0", he.is_zero(), he.to_string()});
  Surd ef = killing_form(osp_e(1), osp_e(-1));
  r.items.push_back({"(e_a|e_-a) = 1", ef == Surd(1), ef.to_string()});
  return r;
}

ClassicalReport check_classical_limit(int n_max) {
  ClassicalReport r;
  const Surd l(alpha_sq());
  auto limit_item = [&](const std::string& name, const Scalar& s, const Surd& want) {
    CheckItem it{name, false, ""};
    try {
      Surd v = s.limit_q1();
      it.pass = v == want;
      it.detail = v.to_string();
    } catch (const PoleAtOne& e) {
      it.detail = e.what();
    }
    r.items.push_back(it);
  };
  limit_item("a -> 2(a,a)", Scalar(Scalar::a()), Surd(2) * l);
  limit_item("b -> (a,a)", Scalar(Scalar::b()), l);
  limit_item("s_a -> sqrt(2(a,a))", Scalar::s_a(), Surd::sqrt(2 * alpha_sq()));
  limit_item("s_b -> sqrt((a,a))", Scalar::s_b(), Surd::sqrt(alpha_sq()));
  limit_item("Schur parameter -> 0 (positive)", table_kappa(1), Surd());
  limit_item("Schur parameter -> 0 (negative)", table_kappa(-1), Surd());

  auto step_item = [&](const std::string& name, const RecursionStep& st, const LoopElement& want) {
    CheckItem it{name + " " + st.label, false, ""};
    try {
      Surd c = st.coefficient.limit_q1();
      int e = 0;
      if (st.mode != BracketMode::plain) {
        mpq_class p = pairing(st.left.weight(), st.right.weight());
        e = static_cast<int>(p.get_num().get_si());
      }
      Surd qf = Scalar::q_power(e).limit_q1();
      if (!(qf == Surd(1))) throw DomainError("q-factor does not tend to 1");
      LoopElement got = c * loop_bracket(realize(st.left), realize(st.right));
      LoopElement diff = got - want;
      it.pass = diff.is_zero();
      if (!it.pass) it.detail = "residual:\n" + diff.to_string();
    } catch (const Error& e) {
      it.detail = e.what();
    }
    r.items.push_back(it);
  };
  for (int cd = -n_max; cd <= n_max; ++cd)
    for (int ca = -2; ca <= 2; ++ca) {
      if (!RootLabel::is_root(cd, ca)) continue;
      RootLabel root(cd, ca);
      if (root.is_double()) continue;
      auto st = recursion_step(root);
      if (!st) continue;
      step_item("e_" + root.to_string(), *st, realize(root));
    }
  for (int n = 1; n <= n_max; ++n)
    for (int s : {1, -1}) {
      RootLabel root(s * n, 0);
      step_item("e'_" + root.to_string() + " = e_" + root.to_string(), primed_step(s * n), realize(root));
    }
  return r;
}

ClassicalReport check_classical(int n_max) {
  ClassicalReport r = check_chevalley_relations();
  r.append(check_root_brackets(n_max));
  return r;
}

}  // namespace uqosp
