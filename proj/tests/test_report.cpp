#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gammasym/report.hpp"

using namespace gammasym;

namespace {

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST_CASE("root system json") {
  const auto g2 = build(RootSystemType(Family::G, 2));
  const Json j = to_json(g2);
  CHECK(keys(j) == std::vector<std::string>{"family", "rank", "positive_roots", "highest_root", "cartan"});
  CHECK(j["family"] == "G");
  CHECK(j["positive_roots"].size() == 6);
  CHECK(j["highest_root"] == Json::array({3, 2}));
}

TEST_CASE("classification json and markdown") {
  const auto a2 = build(RootSystemType(Family::A, 2));
  const auto report = verify_classification(a2);
  const Json j = to_json(report, a2);
  CHECK(j["closed_form_agrees"] == true);
  CHECK(j["admissible_sets"].size() == 3);
  CHECK(j["admissible_sets"][0]["two_number"] == 3);

  const std::string md = to_markdown(report, a2);
  CHECK(md.find("## A2") != std::string::npos);
  CHECK(md.find("| I | extrinsic symmetric | 2-number |") != std::string::npos);
  CHECK(md.find("| {1,2} |") != std::string::npos);

  const auto bc2 = build(RootSystemType(Family::BC, 2));
  CHECK(to_json(verify_classification(bc2), bc2)["admissible_sets"].empty());
}

TEST_CASE("orbit json") {
  const auto a4 = build(RootSystemType(Family::A, 4));
  OrbitOptions opts;
  opts.enumerate = true;
  const auto I = IndexSet::of({2});
  const Json j = to_json(orbit(a4, I, opts), a4, I);
  CHECK(j["two_number"] == 10);
  CHECK(j["orbit_size"] == 10);
  CHECK(j["method"] == "both");
  CHECK(j["elements"].size() == 10);
  CHECK(j["elements"][0].size() == 4);
}

TEST_CASE("triple json") {
  const auto a4 = build(RootSystemType(Family::A, 4));
  const auto g = subgroup_span({IndexSet::of({1, 3}), IndexSet::of({2})}, 4);
  const Json j = triple_json(a4, IndexSet::of({1, 2, 3}), g);
  CHECK(j["is_triple"] == true);
  CHECK(j["subgroup_order"] == 4);
  CHECK_FALSE(j.contains("witness"));
}

TEST_CASE("classification document matches the checked-in copy") {
  std::ifstream in(std::string(GAMMASYM_FIXTURES) + "/classification.md");
  REQUIRE(in.good());
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == classification_document(8));
}
