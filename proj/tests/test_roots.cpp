#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "gammasym/report.hpp"
#include "gammasym/roots.hpp"
#include "oracles.hpp"

using namespace gammasym;

namespace {

std::set<std::vector<int>> coeff_set(const RootSystem& s) {
  std::set<std::vector<int>> out;
  for (const Root& r : s.positive_roots()) out.insert(r.coeffs);
  return out;
}

struct Case {
  const char* family;
  Family f;
  int min_rank, max_rank;
};

const Case kCases[] = {
    {"A", Family::A, 1, 8}, {"B", Family::B, 2, 8}, {"C", Family::C, 2, 8}, {"D", Family::D, 4, 8},
    {"BC", Family::BC, 1, 8}, {"E", Family::E, 6, 8}, {"F", Family::F, 4, 4}, {"G", Family::G, 2, 2},
};

std::size_t expected_count(Family f, int r) {
  switch (f) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::BC: return r * r + r;
    case Family::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace

TEST_CASE("rank constraints") {
  CHECK_THROWS_AS(RootSystemType(Family::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemType(Family::E, 5), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemType(Family::G, 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemType(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_WITH_AS(RootSystemType(Family::F, 3), doctest::Contains("F"), std::invalid_argument);
  CHECK_NOTHROW(RootSystemType(Family::BC, 1));
  CHECK(parse_family("bc") == Family::BC);
  CHECK_THROWS_AS(parse_family("H"), std::invalid_argument);
  CHECK(RootSystemType(Family::E, 6).name() == "E6");
}

TEST_CASE("root lists agree with the vector models") {
  for (const auto& c : kCases) {
    for (int r = c.min_rank; r <= c.max_rank; ++r) {
      CAPTURE(c.family);
      CAPTURE(r);
      const auto s = build(RootSystemType(c.f, r));
      const auto o = oracle::make(c.family, r);
      CHECK(s.size() == expected_count(c.f, r));
      CHECK(coeff_set(s) == o.roots);
      CHECK(s.highest_root().coeffs == oracle::highest(o));
      CHECK(s.cartan_matrix() == o.cartan);
    }
  }
}

TEST_CASE("G2 roots") {
  const auto s = build(RootSystemType(Family::G, 2));
  const std::set<std::vector<int>> want{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  CHECK(coeff_set(s) == want);
  CHECK(coefficient(Root{{3, 2}}, 1) == 3);
}

TEST_CASE("small systems") {
  CHECK(coeff_set(build(RootSystemType(Family::A, 1))) == std::set<std::vector<int>>{{1}});
  const auto bc2 = build(RootSystemType(Family::BC, 2));
  CHECK(bc2.size() == 6);
  CHECK(bc2.contains(Root{{0, 1}}));
  CHECK(bc2.contains(Root{{0, 2}}));
  const auto bc1 = build(RootSystemType(Family::BC, 1));
  CHECK(coeff_set(bc1) == std::set<std::vector<int>>{{1}, {2}});
}

TEST_CASE("highest roots") {
  CHECK(build(RootSystemType(Family::E, 8)).highest_root().coeffs == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(build(RootSystemType(Family::B, 5)).highest_root().coeffs == std::vector<int>{1, 2, 2, 2, 2});
  CHECK(build(RootSystemType(Family::C, 5)).highest_root().coeffs == std::vector<int>{2, 2, 2, 2, 1});
  CHECK(build(RootSystemType(Family::A, 4)).highest_root().coeffs == std::vector<int>{1, 1, 1, 1});
  CHECK(build(RootSystemType(Family::F, 4)).highest_root().coeffs == std::vector<int>{2, 3, 4, 2});
}

TEST_CASE("coefficients and xi sums") {
  CHECK(coefficient(Root{{1, 2, 2}}, 3) == 2);
  CHECK_THROWS_AS(coefficient(Root{{1, 2, 2}}, 4), std::out_of_range);
  CHECK_THROWS_AS(coefficient(Root{{1, 2, 2}}, 0), std::out_of_range);
  CHECK(evaluate_on_xi_sum(Root{{1, 1, 1}}, IndexSet::of({1, 3})) == 2);
  CHECK(evaluate_on_xi_sum(Root{{2, 3, 4, 2}}, IndexSet::of({1, 2})) == 5);
  CHECK(evaluate_on_xi_sum(Root{{2, 3, 4, 2}}, IndexSet{}) == 0);

  const auto e7 = build(RootSystemType(Family::E, 7));
  for (const Root& a : e7.simple_roots()) {
    for (int k = 1; k <= 7; ++k) CHECK(coefficient(a, k) == (a.coeffs[k - 1] == 1 ? 1 : 0));
    CHECK(a.height() == 1);
  }
}

TEST_CASE("structural invariants") {
  for (const auto& c : kCases) {
    for (int r = c.min_rank; r <= c.max_rank; ++r) {
      const auto s = build(RootSystemType(c.f, r));
      const auto& h = s.highest_root();
      int multiples = 0;
      for (const Root& a : s.positive_roots()) {
        for (int j = 0; j < r; ++j) CHECK(a.coeffs[j] <= h.coeffs[j]);
        for (const Root& b : s.positive_roots()) {
          Root twice{b.coeffs};
          for (int& x : twice.coeffs) x *= 2;
          if (a == twice) ++multiples;
        }
      }
      CHECK(multiples == (c.f == Family::BC ? r : 0));
      for (const Root& a : s.simple_roots()) CHECK(s.contains(a));
    }
  }
}

TEST_CASE("golden root fixtures") {
  for (const char* name : {"G2", "F4", "BC3", "E6"}) {
    CAPTURE(name);
    std::ifstream in(std::string(GAMMASYM_FIXTURES) + "/roots/" + name + ".json");
    REQUIRE(in.good());
    std::stringstream text;
    text << in.rdbuf();
    const std::string n = name;
    const Family f = parse_family(n.substr(0, n.size() - 1));
    const auto s = build(RootSystemType(f, n.back() - '0'));
    CHECK(Json::parse(text.str()) == to_json(s));
  }
}
