#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "uqosp/cartanweyl/schur.hpp"
#include "uqosp/cartanweyl/table.hpp"
#include "uqosp/cartanweyl/verify.hpp"
#include "uqosp/classical/checks.hpp"
#include "uqosp/error.hpp"
#include "uqosp/rewrite/checks.hpp"
#include "uqosp/rootsys/rootsys.hpp"
#include "uqosp/superalg/hopf.hpp"

using namespace uqosp;

namespace {

constexpr int kBound = 14;

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (!pass) detail += "; ";
    else detail.clear();
    pass = false;
    detail += why;
  }
  void note(const std::string& s) {
    if (pass) detail += (detail.empty() ? "" : "; ") + s;
  }
};

void absorb(Verdict& v, const CheckReport& r, const std::string& what) {
  for (const auto& it : r.items)
    if (!it.pass) v.fail(what + ": " + it.name + (it.detail.empty() ? "" : " (" + it.detail + ")"));
  v.note(what + " " + std::to_string(r.items.size()) + " checks");
}

std::string join(const std::vector<RootLabel>& v) {
  std::string s;
  for (const auto& r : v) s += (s.empty() ? "" : " ") + r.to_string();
  return s;
}

// Golden lists at cutoff 4; lower cutoffs are their c_delta prefixes.
const std::vector<std::string> kFull4 = {
    "a",   "2a",    "d-2a",  "d-a", "d",    "d+a",  "d+2a",  "2d-2a", "2d-a", "2d",  "2d+a",
    "2d+2a", "3d-2a", "3d-a", "3d", "3d+a", "3d+2a", "4d-2a", "4d-a",  "4d",  "4d+a", "4d+2a"};
const std::vector<std::string> kReduced4 = {"a",    "d-2a", "d-a",   "d",    "d+a", "d+2a", "2d-a",
                                            "2d",   "2d+a", "3d-2a", "3d-a", "3d",  "3d+a", "3d+2a",
                                            "4d-a", "4d",   "4d+a"};

std::string golden_prefix(const std::vector<std::string>& full, int cutoff) {
  std::string s;
  for (const auto& name : full) {
    int cd = 0;
    if (name.find('d') != std::string::npos) cd = name[0] == 'd' ? 1 : name[0] - '0';
    if (cd > cutoff) continue;
    s += (s.empty() ? "" : " ") + name;
  }
  return s;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  RewriteSystem sys = RewriteSystem::complete(kBound);
  double completion = std::chrono::duration<double>(clock::now() - t0).count();
  std::cout << "rewriting system completed to bound " << kBound << " in " << completion << " s\n";
  RootVectorTable table(3);

  std::vector<std::pair<std::string, std::function<Verdict()>>> criteria;

  criteria.emplace_back("real root brackets, n = 1, all four families", [&] {
    Verdict v;
    for (RealFamily f : kRealFamilies) {
      try {
        RelationReport r = verify_prop1_relation(f, 1, sys, table);
        if (!r.pass) v.fail(r.relation + " residual " + r.residual.to_string());
      } catch (const BoundExceeded& e) {
        v.fail(std::string(family_name(f)) + ": " + e.what());
      }
    }
    v.note("4 relations, residual 0");
    return v;
  });

  criteria.emplace_back("real root brackets, n = 2, families nd+a and nd-a", [&] {
    Verdict v;
    for (RealFamily f : {RealFamily::plus_a, RealFamily::minus_a}) {
      try {
        RelationReport r = verify_prop1_relation(f, 2, sys, table);
        if (!r.pass) v.fail(r.relation + " residual " + r.residual.to_string());
      } catch (const BoundExceeded& e) {
        v.fail(std::string(family_name(f)) + ": " + e.what());
      }
    }
    v.note("2 relations, residual 0 at bound " + std::to_string(kBound));
    return v;
  });

  criteria.emplace_back("imaginary brackets [e_nd, e_-md]", [&] {
    Verdict v;
    std::string reading;
    for (int n : {1, 2}) {
      Prop2Report p = verify_prop2(n, n, sys, table);
      if (!p.report.pass) {
        v.fail("n=m=" + std::to_string(n) + ": " + p.report.note);
        continue;
      }
      std::string r = p.minus_matches ? reading_name(FactorReading::minus) : reading_name(FactorReading::literal);
      if (reading.empty()) reading = r;
      else if (reading != r) v.fail("reading differs across n: " + reading + " vs " + r);
    }
    for (auto [n, m] : {std::pair{1, 2}, std::pair{2, 1}}) {
      Prop2Report p = verify_prop2(n, m, sys, table);
      if (!p.report.pass || !p.report.residual.is_zero())
        v.fail("(" + std::to_string(n) + "," + std::to_string(m) + ") residual " + p.report.residual.to_string());
    }
    v.note("matched reading: " + reading + " for n = 1, 2; (1,2), (2,1) reduce to 0");
    return v;
  });

  criteria.emplace_back("[e'_2d, e_-d] != 0 and [e_2d, e_-d] = 0", [&] {
    Verdict v;
    RelationReport r = verify_remark(2, 1, sys, table);
    if (!r.pass) v.fail("[e'_2d, e_-d] reduced to 0");
    Prop2Report p = verify_prop2(2, 1, sys, table);
    if (!p.report.residual.is_zero()) v.fail("[e_2d, e_-d] = " + p.report.residual.to_string());
    v.note("[e'_2d, e_-d] has " + std::to_string(r.residual.size()) + " normal terms");
    return v;
  });

  criteria.emplace_back("Schur transform through order 6", [&] {
    Verdict v;
    for (int order = 1; order <= 6; ++order) {
      SchurCheck c = check_schur(order, default_kappa());
      if (!c.roundtrip) v.fail("roundtrip fails at order " + std::to_string(order));
      if (!c.generating_function) v.fail("generating function fails at order " + std::to_string(order));
    }
    v.note("roundtrip and 1 + E'(t) = exp E(t) exact for n <= 6");
    return v;
  });

  criteria.emplace_back("Hopf axioms and coproducts of the defining relations", [&] {
    Verdict v;
    absorb(v, verify_hopf_axioms(), "axioms");
    absorb(v, verify_hopf_relations(sys), "relations");
    return v;
  });

  criteria.emplace_back("classical relations, root brackets n <= 3, cocycle |deg| <= 3", [&] {
    Verdict v;
    absorb(v, check_chevalley_relations(), "Chevalley");
    absorb(v, check_root_brackets(3), "root brackets");
    absorb(v, check_cocycle(3), "cocycle");
    return v;
  });

  criteria.emplace_back("classical limit of the recursions, n <= 2", [&] {
    Verdict v;
    absorb(v, check_classical_limit(2), "limit");
    return v;
  });

  criteria.emplace_back("rewriting soundness", [&] {
    Verdict v;
    SoundnessOptions opt;
    absorb(v, check_soundness(sys, opt), std::to_string(opt.samples) + " samples");
    return v;
  });

  criteria.emplace_back("root system combinatorics", [&] {
    Verdict v;
    for (int c = 0; c <= 4; ++c) {
      if (join(enumerate_positive(c, false)) != golden_prefix(kFull4, c))
        v.fail("full list at cutoff " + std::to_string(c) + ": " + join(enumerate_positive(c, false)));
      if (join(enumerate_positive(c, true)) != golden_prefix(kReduced4, c))
        v.fail("reduced list at cutoff " + std::to_string(c) + ": " + join(enumerate_positive(c, true)));
    }
    for (int c = 1; c <= 6; ++c)
      for (Direction d : {Direction::clockwise, Direction::anticlockwise}) {
        OrderCheck chk = validate_normal_order(normal_order(c, d));
        if (!chk.valid) {
          const auto& x = *chk.violation;
          v.fail(std::string(d == Direction::clockwise ? "clockwise" : "anticlockwise") + " cutoff " +
                 std::to_string(c) + ": (" + x[0].to_string() + ", " + x[1].to_string() + ", " +
                 x[2].to_string() + ")");
        }
      }
    v.note("golden lists for cutoff <= 4, both orderings valid for cutoff <= 6");
    return v;
  });

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("error: ") + e.what());
    }
    double secs = std::chrono::duration<double>(clock::now() - start).count();
    if (!v.pass) ++failed;
    std::ostringstream line;
    line << "criterion " << (i + 1) << ": " << (v.pass ? "PASS" : "FAIL") << " " << criteria[i].first;
    if (!v.detail.empty()) line << " [" << v.detail << "]";
    line << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " of 10 criteria failed" : "all 10 criteria passed") << "\n";
  return failed ? 1 : 0;
}
