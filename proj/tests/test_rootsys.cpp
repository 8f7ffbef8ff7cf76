#include <doctest.h>

#include <algorithm>
#include <set>

#include "uqosp/coeffield/config.hpp"
#include "uqosp/error.hpp"
#include "uqosp/rootsys/rootsys.hpp"

using namespace uqosp;

namespace {

std::vector<std::string> names(const std::vector<RootLabel>& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(r.to_string());
  return out;
}

RatMatrix product(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r(a.size(), std::vector<mpq_class>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

// Brute-force betweenness over all triples with a real summand.
bool brute_valid(const std::vector<RootLabel>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      for (std::size_t k = 0; k < seq.size(); ++k) {
        if (seq[i].is_imaginary() && seq[j].is_imaginary()) continue;
        if (seq[k].c_delta() != seq[i].c_delta() + seq[j].c_delta() ||
            seq[k].c_alpha() != seq[i].c_alpha() + seq[j].c_alpha())
          continue;
        if (!(i < k && k < j)) return false;
      }
  return true;
}

}  // namespace

TEST_SUITE("rootsys") {
  TEST_CASE("cartan matrices") {
    CartanData d = cartan_data();
    CHECK(d.standard == RatMatrix{{2, -1}, {-4, 2}});
    CHECK(d.standard[0][0] * d.standard[1][1] - d.standard[0][1] * d.standard[1][0] == 0);
    CHECK(d.extended_inverse == RatMatrix{{0, 1, 2}, {1, 0, 0}, {2, 0, 1}});
    RatMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(product(d.extended, d.extended_inverse) == id);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(d.standard[i][j] == 2 * d.symmetric[i][j] / d.symmetric[i][i]);
  }

  TEST_CASE("cartan matrices under another normalization") {
    ScopedAlphaSq scope(mpq_class(3, 2));
    CartanData d = cartan_data();
    CHECK(d.standard == RatMatrix{{2, -1}, {-4, 2}});
    RatMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(product(d.extended, d.extended_inverse) == id);
    CHECK(d.extended_inverse[2][2] == mpq_class(2, 3));
  }

  TEST_CASE("pairing") {
    CHECK(pairing(kAlpha, kAlpha) == 1);
    CHECK(pairing(kDelta, kDelta) == 0);
    CHECK(pairing(kAlpha, kAlpha0) == -2);
    CHECK(pairing(kDelta, kAlpha) == 0);
    CHECK(pairing(kD, kAlpha) == 0);
    CHECK(pairing(kDelta, kD) == 1);
    CHECK_THROWS_AS(pairing(kD, kD), DomainError);
  }

  TEST_CASE("delta pairs to zero with every root") {
    for (int n = -4; n <= 4; ++n)
      for (int m = -2; m <= 2; ++m)
        if (RootLabel::is_root(n, m)) CHECK(pairing(kDelta, RootLabel(n, m).weight()) == 0);
  }

  TEST_CASE("parity") {
    CHECK(parity(RootLabel(0, 1)) == 1);
    CHECK(parity(RootLabel(1, -2)) == 0);
    CHECK(parity(RootLabel(3, 0)) == 0);
    CHECK_THROWS_AS(parity(0, 0), DomainError);
    CHECK_THROWS_AS(parity(1, 3), DomainError);
    for (int n = -3; n <= 3; ++n)
      for (int m = -2; m <= 2; ++m)
        if (RootLabel::is_root(n, m)) CHECK(parity(n, m) == ((m == 1 || m == -1) ? 1 : 0));
  }

  TEST_CASE("root labels") {
    CHECK(RootLabel(2, -1).to_string() == "2d-a");
    CHECK(RootLabel::parse("2d-a") == RootLabel(2, -1));
    CHECK(RootLabel::parse("-d+2a") == RootLabel(-1, 2));
    CHECK(RootLabel::parse("a") == RootLabel(0, 1));
    CHECK(!RootLabel::parse("x"));
    CHECK(RootLabel(2, 2).is_double());
    CHECK(!RootLabel(1, 2).is_double());
  }

  TEST_CASE("positive roots, golden lists") {
    CHECK(names(enumerate_positive(0, false)) == std::vector<std::string>{"a", "2a"});
    CHECK(names(enumerate_positive(1, false)) ==
          std::vector<std::string>{"a", "2a", "d-2a", "d-a", "d", "d+a", "d+2a"});
    CHECK(names(enumerate_positive(2, true)) ==
          std::vector<std::string>{"a", "d-2a", "d-a", "d", "d+a", "d+2a", "2d-a", "2d", "2d+a"});
    CHECK(names(enumerate_positive(3, true)) ==
          std::vector<std::string>{"a", "d-2a", "d-a", "d", "d+a", "d+2a", "2d-a", "2d", "2d+a", "3d-2a", "3d-a",
                                   "3d", "3d+a", "3d+2a"});
    CHECK(names(enumerate_positive(4, true)) ==
          std::vector<std::string>{"a", "d-2a", "d-a", "d", "d+a", "d+2a", "2d-a", "2d", "2d+a", "3d-2a", "3d-a",
                                   "3d", "3d+a", "3d+2a", "4d-a", "4d", "4d+a"});
  }

  TEST_CASE("reduced and double roots make up the full system") {
    for (int c = 0; c <= 5; ++c) {
      auto full = enumerate_positive(c, false), red = enumerate_positive(c, true);
      std::set<RootLabel> joined(red.begin(), red.end());
      for (int n = 0; n <= c; n += 2)
        for (int m : {-2, 2})
          if (RootLabel::is_root(n, m) && RootLabel(n, m).is_positive()) joined.insert(RootLabel(n, m));
      CHECK(joined == std::set<RootLabel>(full.begin(), full.end()));
      CHECK(full.size() == static_cast<std::size_t>(2 + 5 * c));
    }
  }

  TEST_CASE("normal orderings") {
    auto cw = names(normal_order(3, Direction::clockwise));
    CHECK(std::vector<std::string>(cw.begin(), cw.begin() + 5) ==
          std::vector<std::string>{"a", "d+2a", "d+a", "3d+2a", "2d+a"});
    CHECK(std::vector<std::string>(cw.end() - 2, cw.end()) == std::vector<std::string>{"d-a", "d-2a"});
    auto acw = names(normal_order(3, Direction::anticlockwise));
    CHECK(std::vector<std::string>(acw.begin(), acw.begin() + 5) ==
          std::vector<std::string>{"d-2a", "d-a", "3d-2a", "2d-a", "3d-a"});
  }

  TEST_CASE("normal orderings are valid and cover the reduced system") {
    for (int c = 1; c <= 6; ++c)
      for (Direction d : {Direction::clockwise, Direction::anticlockwise}) {
        auto seq = normal_order(c, d);
        CHECK(validate_normal_order(seq).valid);
        CHECK(brute_valid(seq));
        auto red = enumerate_positive(c, true);
        CHECK(std::set<RootLabel>(seq.begin(), seq.end()) == std::set<RootLabel>(red.begin(), red.end()));
      }
  }

  TEST_CASE("validation finds violations") {
    auto seq = normal_order(2, Direction::clockwise);
    CHECK(validate_normal_order({RootLabel(0, 1)}).valid);
    auto a = std::find(seq.begin(), seq.end(), RootLabel(0, 1));
    auto d = std::find(seq.begin(), seq.end(), RootLabel(1, 0));
    std::iter_swap(a, d);
    OrderCheck chk = validate_normal_order(seq);
    CHECK(!chk.valid);
    CHECK(!brute_valid(seq));
    REQUIRE(chk.violation);
    CHECK_THROWS_AS(validate_normal_order({RootLabel(0, 1), RootLabel(0, 1)}), DomainError);
    CHECK_THROWS_AS(validate_normal_order({RootLabel(0, -1)}), DomainError);
  }

  TEST_CASE("two imaginary summands are exempt") {
    CHECK(validate_normal_order({RootLabel(1, 0), RootLabel(2, 0), RootLabel(3, 0)}).valid);
    CHECK(!validate_normal_order({RootLabel(1, 1), RootLabel(0, 1), RootLabel(1, 0)}).valid);
  }
}
