#include "uqosp/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "uqosp/cartanweyl/schur.hpp"
#include "uqosp/cartanweyl/table.hpp"
#include "uqosp/cartanweyl/verify.hpp"
#include "uqosp/classical/checks.hpp"
#include "uqosp/classical/loop.hpp"
#include "uqosp/coeffield/config.hpp"
#include "uqosp/coeffield/parse.hpp"
#include "uqosp/error.hpp"
#include "uqosp/rewrite/checks.hpp"
#include "uqosp/rootsys/rootsys.hpp"
#include "uqosp/superalg/hopf.hpp"

namespace uqosp {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
  int n = 1;
  int m = 1;
  int bound = 14;
  int cutoff = 1;
  int degree = 3;
  std::string alpha_sq = "1";
  std::string ordering = "clockwise";
  std::string out;
  std::string expr;
  std::vector<std::string> families;
  bool json = false;
  bool timing = false;
  bool reduced = false;
  bool expand = false;
};

struct Entry {
  std::string name;
  bool pass = false;
  std::string detail;
  std::optional<std::string> residual;
  std::optional<double> seconds;
};

struct Outcome {
  explicit Outcome(std::string c) : command(std::move(c)) {}
  std::string command;
  json data = json::object();
  std::vector<std::string> lines;
  std::vector<Entry> checks;
  std::optional<double> completion_seconds;
};

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Direction parse_direction(const std::string& s) {
  if (s == "clockwise") return Direction::clockwise;
  if (s == "anticlockwise") return Direction::anticlockwise;
  throw DomainError("unknown ordering '" + s + "' (clockwise or anticlockwise)");
}

void add_report(Outcome& o, const CheckReport& r) {
  for (const auto& it : r.items) o.checks.push_back({it.name, it.pass, it.detail, std::nullopt, std::nullopt});
}

Entry from_relation(const RelationReport& r, const std::string& name) {
  Entry e{name, r.pass, r.note, std::nullopt, r.wall_time};
  if (!r.residual.is_zero()) e.residual = r.residual.to_string();
  return e;
}

Entry bound_failure(const std::string& name, const BoundExceeded& ex) {
  return {name, false, ex.what(), std::nullopt, std::nullopt};
}

RewriteSystem completed(const Options& opt, Outcome& o) {
  if (opt.bound < 2) throw DomainError("--bound must be >= 2");
  auto t0 = Clock::now();
  RewriteSystem sys = RewriteSystem::complete(opt.bound);
  o.completion_seconds = since(t0);
  o.data["rules"] = sys.stats().positive_rules + sys.stats().negative_rules;
  return sys;
}

std::string relation_name(const std::string& rel, int n, int m = 0) {
  std::string s = rel + " n=" + std::to_string(n);
  if (m) s += " m=" + std::to_string(m);
  return s;
}

Outcome cmd_roots(const Options& opt) {
  if (opt.cutoff < 0) throw DomainError("--cutoff must be >= 0");
  Outcome o{"roots"};
  json list = json::array();
  for (const auto& r : enumerate_positive(opt.cutoff, opt.reduced)) {
    o.lines.push_back(r.to_string() + (r.is_odd() ? "  odd" : "  even"));
    list.push_back({{"root", r.to_string()}, {"parity", parity(r)}});
  }
  o.data["reduced"] = opt.reduced;
  o.data["roots"] = list;
  return o;
}

Outcome cmd_order(const Options& opt) {
  if (opt.cutoff < 1) throw DomainError("--cutoff must be >= 1");
  Outcome o{"order"};
  auto seq = normal_order(opt.cutoff, parse_direction(opt.ordering));
  json list = json::array();
  std::string line;
  for (const auto& r : seq) {
    list.push_back(r.to_string());
    line += (line.empty() ? "" : ", ") + r.to_string();
  }
  o.lines.push_back(line);
  o.data["sequence"] = list;
  OrderCheck chk = validate_normal_order(seq);
  Entry e{"normal ordering property", chk.valid, "", std::nullopt, std::nullopt};
  if (chk.violation) {
    const auto& v = *chk.violation;
    e.detail = "violation (" + v[0].to_string() + ", " + v[1].to_string() + ", " + v[2].to_string() + ")";
  }
  o.checks.push_back(e);
  return o;
}

Outcome cmd_cw_build(const Options& opt) {
  Outcome o{"cw build"};
  RootVectorTable table(std::max(opt.cutoff, 1), parse_direction(opt.ordering));
  json list = json::array();
  auto describe = [&](const std::string& label, const Element& v, const RootLabel& root) {
    json j{{"vector", label}, {"terms", v.size()}, {"max_length", v.max_word_length()}};
    std::string line = label + ": " + std::to_string(v.size()) + " terms, length " + std::to_string(v.max_word_length());
    if (opt.expand) {
      j["expansion"] = v.to_string();
      line += "\n  " + v.to_string();
    }
    o.lines.push_back(line);
    list.push_back(j);
    auto wp = weight_parity(v);
    bool ok = wp && wp->weight == root.weight() && wp->parity == parity(root);
    o.checks.push_back({"weight and parity of " + label, ok, "", std::nullopt, std::nullopt});
  };
  for (const auto& r : table.roots()) {
    auto t0 = Clock::now();
    const Element& v = table.vector(r);
    describe("e_" + r.to_string(), v, r);
    if (opt.timing) o.checks.back().seconds = since(t0);
    if (r.is_imaginary()) describe("e'_" + r.to_string(), table.primed(r.c_delta()), r);
  }
  o.data["cutoff"] = table.cutoff();
  o.data["vectors"] = list;
  return o;
}

Outcome cmd_prop1(const Options& opt) {
  if (opt.n < 1) throw DomainError("--n must be >= 1");
  std::vector<RealFamily> fams;
  for (const auto& name : opt.families) {
    auto f = parse_family(name);
    if (!f) throw DomainError("--family takes plus-a, minus-a, plus-2a or minus-2a, got '" + name + "'");
    fams.push_back(*f);
  }
  if (fams.empty()) fams.assign(std::begin(kRealFamilies), std::end(kRealFamilies));
  Outcome o{"verify prop1"};
  RewriteSystem sys = completed(opt, o);
  RootVectorTable table(std::max(opt.cutoff, 2 * opt.n + 1));
  for (RealFamily f : fams) {
    RootLabel b = family_root(f, opt.n);
    std::string name = relation_name("[e_" + b.to_string() + ", e_" + (-b).to_string() + "]", opt.n);
    try {
      o.checks.push_back(from_relation(verify_prop1_relation(f, opt.n, sys, table), name));
    } catch (const BoundExceeded& ex) {
      o.checks.push_back(bound_failure(name, ex));
    }
  }
  return o;
}

Outcome cmd_prop2(const Options& opt) {
  Outcome o{"verify prop2"};
  RewriteSystem sys = completed(opt, o);
  RootVectorTable table(std::max({opt.cutoff, opt.n, opt.m, 1}));
  std::string name = relation_name("[e_nd, e_-md]", opt.n, opt.m);
  try {
    Prop2Report r = verify_prop2(opt.n, opt.m, sys, table);
    Entry e = from_relation(r.report, name);
    if (opt.n == opt.m) {
      e.detail = "matched reading: " + r.report.note;
      o.data["matched_reading"] = r.report.note;
      o.data["minus_matches"] = r.minus_matches;
      o.data["literal_matches"] = r.literal_matches;
    } else {
      e.detail = "plain commutator";
    }
    o.checks.push_back(e);
  } catch (const BoundExceeded& ex) {
    o.checks.push_back(bound_failure(name, ex));
  }
  return o;
}

Outcome cmd_remark(const Options& opt) {
  Outcome o{"verify remark"};
  RewriteSystem sys = completed(opt, o);
  RootVectorTable table(std::max({opt.cutoff, opt.n, opt.m, 1}));
  std::string pos = RootLabel(opt.n, 0).to_string(), neg = RootLabel(-opt.m, 0).to_string();
  std::string primed = "[e'_" + pos + ", e_" + neg + "] != 0";
  std::string plain = "[e_" + pos + ", e_" + neg + "] = 0";
  try {
    RelationReport r = verify_remark(opt.n, opt.m, sys, table);
    Entry e{primed, r.pass, std::to_string(r.residual.size()) + " terms", std::nullopt, r.wall_time};
    if (opt.expand) e.residual = r.residual.to_string();
    o.checks.push_back(e);
  } catch (const BoundExceeded& ex) {
    o.checks.push_back(bound_failure(primed, ex));
  }
  try {
    o.checks.push_back(from_relation(verify_prop2(opt.n, opt.m, sys, table).report, plain));
  } catch (const BoundExceeded& ex) {
    o.checks.push_back(bound_failure(plain, ex));
  }
  return o;
}

Outcome cmd_hopf(const Options& opt) {
  Outcome o{"verify hopf"};
  add_report(o, verify_hopf_axioms());
  RewriteSystem sys = completed(opt, o);
  add_report(o, verify_hopf_relations(sys));
  return o;
}

Outcome cmd_serre(const Options& opt) {
  Outcome o{"verify serre"};
  RewriteSystem sys = completed(opt, o);
  add_report(o, verify_serre(sys));
  add_report(o, check_soundness(sys));
  return o;
}

Outcome cmd_schur(const Options& opt) {
  if (opt.n < 1) throw DomainError("--n must be >= 1");
  Outcome o{"schur"};
  std::vector<FormalPoly> e, ep;
  for (int k = 1; k <= opt.n; ++k) {
    e.push_back(FormalPoly::variable(k));
    ep.push_back(FormalPoly::variable(k));
  }
  std::string fwd = schur_forward(opt.n, e, default_kappa()).to_string("e");
  std::string inv = schur_inverse(opt.n, ep, default_kappa()).to_string("e'");
  std::string nd = std::to_string(opt.n) + "d";
  auto rename = [](std::string s, const std::string& var) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.compare(i, var.size(), var) == 0 && i + var.size() < s.size() && std::isdigit(s[i + var.size()])) {
        std::size_t j = i + var.size();
        std::string digits;
        while (j < s.size() && std::isdigit(s[j])) digits += s[j++];
        out += var + "_" + (digits == "1" ? std::string("d") : digits + "d");
        i = j - 1;
      } else {
        out += s[i];
      }
    }
    return out;
  };
  std::string fwd_line = "e'_" + nd + " = " + rename(fwd, "e");
  std::string inv_line = "e_" + nd + " = " + rename(inv, "e'");
  o.lines.push_back(fwd_line);
  o.lines.push_back(inv_line);
  o.data["forward"] = fwd_line;
  o.data["inverse"] = inv_line;
  SchurCheck c = check_schur(opt.n, default_kappa());
  o.checks.push_back({"roundtrip through order " + std::to_string(opt.n), c.roundtrip,
                      c.roundtrip ? "" : "first failure at " + std::to_string(c.first_failure), std::nullopt,
                      std::nullopt});
  o.checks.push_back({"generating function through order " + std::to_string(opt.n), c.generating_function,
                      c.generating_function ? "" : "first failure at " + std::to_string(c.first_failure),
                      std::nullopt, std::nullopt});
  return o;
}

Outcome cmd_classical(const Options& opt) {
  if (opt.n < 1) throw DomainError("--n must be >= 1");
  if (opt.degree < 0) throw DomainError("--degree must be >= 0");
  Outcome o{"classical"};
  o.data["killing_normalization"] = killing_normalization().to_string();
  o.lines.push_back("Killing normalization: " + killing_normalization().to_string());
  add_report(o, check_classical(opt.n));
  add_report(o, check_form());
  add_report(o, check_cocycle(opt.degree));
  return o;
}

Outcome cmd_limit(const Options& opt) {
  Outcome o{"limit"};
  if (!opt.expr.empty()) {
    Scalar s = parse_scalar(opt.expr);
    Surd v = s.limit_q1();
    o.lines.push_back(v.to_string());
    o.data["expression"] = opt.expr;
    o.data["limit"] = v.to_string();
    return o;
  }
  if (opt.n < 1) throw DomainError("--n must be >= 1");
  add_report(o, check_classical_limit(opt.n));
  return o;
}

json config_json(const Options& opt) {
  return json{{"alpha_sq", opt.alpha_sq}, {"n", opt.n},           {"m", opt.m},
              {"bound", opt.bound},       {"cutoff", opt.cutoff}, {"ordering", opt.ordering}};
}

std::string format_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s << " s";
  return os.str();
}

std::string render(const Outcome& o, const Options& opt) {
  std::size_t failed = 0;
  for (const auto& c : o.checks)
    if (!c.pass) ++failed;
  if (opt.json) {
    json j;
    j["schema"] = "uqosp.report/1";
    j["command"] = o.command;
    j["config"] = config_json(opt);
    j["pass"] = failed == 0;
    for (auto it = o.data.begin(); it != o.data.end(); ++it) j[it.key()] = it.value();
    json checks = json::array();
    for (const auto& c : o.checks) {
      json cj{{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
      if (c.residual) cj["residual"] = *c.residual;
      if (opt.timing && c.seconds) cj["wall_time"] = *c.seconds;
      checks.push_back(cj);
    }
    j["checks"] = checks;
    if (opt.timing && o.completion_seconds) j["completion_time"] = *o.completion_seconds;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& l : o.lines) os << l << "\n";
  if (opt.timing && o.completion_seconds) os << "completion: " << format_seconds(*o.completion_seconds) << "\n";
  for (const auto& c : o.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    if (opt.timing && c.seconds) os << " (" << format_seconds(*c.seconds) << ")";
    os << "\n";
    if (c.residual) os << "  residual: " << *c.residual << "\n";
  }
  if (!o.checks.empty()) {
    if (failed == 0) os << "all " << o.checks.size() << " checks passed\n";
    else os << failed << " of " << o.checks.size() << " checks failed\n";
  }
  return os.str();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Cartan-Weyl basis of U_q(osp(1|2)^) and its classical limit", "uqosp"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--alpha-sq", opt.alpha_sq, "(alpha, alpha), a rational; default 1");
  app.add_flag("--json", opt.json, "JSON report");
  app.add_option("--out", opt.out, "write the report to FILE");
  app.add_flag("--timing", opt.timing, "include wall times");

  std::function<Outcome(const Options&)> handler;
  auto with_n = [&](CLI::App* s) { s->add_option("--n", opt.n, "index n"); };
  auto with_m = [&](CLI::App* s) { s->add_option("--m", opt.m, "index m"); };
  auto with_bound = [&](CLI::App* s) { s->add_option("--bound", opt.bound, "rewriting word-length bound"); };
  auto with_cutoff = [&](CLI::App* s) { s->add_option("--cutoff", opt.cutoff, "root cutoff"); };
  auto with_ordering = [&](CLI::App* s) { s->add_option("--ordering", opt.ordering, "clockwise or anticlockwise"); };

  auto* roots = app.add_subcommand("roots", "positive roots up to the cutoff");
  with_cutoff(roots);
  roots->add_flag("--reduced", opt.reduced, "drop the double roots");
  roots->callback([&] { handler = cmd_roots; });

  auto* order = app.add_subcommand("order", "truncated normal ordering");
  with_cutoff(order);
  with_ordering(order);
  order->callback([&] { handler = cmd_order; });

  auto* cw = app.add_subcommand("cw", "Cartan-Weyl root vectors");
  cw->require_subcommand(1);
  auto* build = cw->add_subcommand("build", "build the root vector table");
  with_cutoff(build);
  with_ordering(build);
  build->add_flag("--expand", opt.expand, "print full expansions");
  build->callback([&] { handler = cmd_cw_build; });

  auto* verify = app.add_subcommand("verify", "verify identities by reduction");
  verify->require_subcommand(1);
  auto* p1 = verify->add_subcommand("prop1", "[e_b, e_-b] for the real families at index n");
  with_n(p1);
  with_bound(p1);
  with_cutoff(p1);
  p1->add_option("--family", opt.families, "plus-a, minus-a, plus-2a or minus-2a (repeatable)");
  p1->callback([&] { handler = cmd_prop1; });
  auto* p2 = verify->add_subcommand("prop2", "[e_nd, e_-md]");
  with_n(p2);
  with_m(p2);
  with_bound(p2);
  with_cutoff(p2);
  p2->callback([&] { handler = cmd_prop2; });
  auto* rm = verify->add_subcommand("remark", "[e'_nd, e_-md] against [e_nd, e_-md]");
  with_n(rm);
  with_m(rm);
  with_bound(rm);
  with_cutoff(rm);
  rm->add_flag("--expand", opt.expand, "print the nonzero normal form");
  rm->callback([&] { handler = cmd_remark; });
  auto* hopf = verify->add_subcommand("hopf", "Hopf axioms and coproducts of the defining relations");
  with_bound(hopf);
  hopf->callback([&] { handler = cmd_hopf; });
  auto* serre = verify->add_subcommand("serre", "Serre relations and rewriting soundness");
  with_bound(serre);
  serre->callback([&] { handler = cmd_serre; });

  auto* schur = app.add_subcommand("schur", "Schur transform between e'_nd and e_nd");
  with_n(schur);
  schur->callback([&] { handler = cmd_schur; });

  auto* classical = app.add_subcommand("classical", "loop realization checks");
  with_n(classical);
  classical->add_option("--degree", opt.degree, "u-degree range of the cocycle check");
  classical->callback([&] { handler = cmd_classical; });

  auto* limit = app.add_subcommand("limit", "q -> 1 coherence, or the limit of --expr");
  with_n(limit);
  limit->add_option("--expr", opt.expr, "scalar expression");
  limit->callback([&] { handler = cmd_limit; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (rm->parsed() && !rm->count("--n") && !rm->count("--m")) {
    opt.n = 2;
    opt.m = 1;
  }

  std::string report;
  try {
    mpq_class lambda(opt.alpha_sq);
    if (lambda.get_den() == 0) throw DomainError("--alpha-sq has a zero denominator");
    lambda.canonicalize();
    if (lambda <= 0) throw DomainError("--alpha-sq must be positive");
    ScopedAlphaSq scope(lambda);
    Outcome o = handler(opt);
    report = render(o, opt);
    bool pass = std::all_of(o.checks.begin(), o.checks.end(), [](const Entry& e) { return e.pass; });
    if (!opt.out.empty()) {
      std::ofstream f(opt.out, std::ios::binary);
      if (!f) {
        err << "error: cannot write " << opt.out << "\n";
        return 2;
      }
      f << report;
    } else {
      out << report;
    }
    return pass ? 0 : 1;
  } catch (const std::invalid_argument&) {
    err << "error: --alpha-sq expects a rational, got '" << opt.alpha_sq << "'\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace uqosp
