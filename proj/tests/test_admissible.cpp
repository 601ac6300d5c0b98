#include <doctest.h>

#include <algorithm>

#include "gammasym/admissible.hpp"
#include "oracles.hpp"

using namespace gammasym;

namespace {

RootSystem sys(Family f, int r) { return build(RootSystemType(f, r)); }

bool adm(Family f, int r, std::initializer_list<int> I) { return is_admissible(sys(f, r), IndexSet::of(I)); }

std::vector<oracle::Mask> masks(const std::vector<IndexSet>& sets) {
  std::vector<oracle::Mask> out;
  for (IndexSet s : sets) out.push_back(s.mask());
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

}  // namespace

TEST_CASE("single verdicts") {
  CHECK(adm(Family::B, 3, {1, 2}));
  CHECK_FALSE(adm(Family::B, 3, {2, 3}));
  CHECK(adm(Family::C, 4, {2, 4}));
  CHECK_FALSE(adm(Family::G, 2, {1}));
  CHECK_FALSE(adm(Family::E, 6, {1, 4}));
  CHECK(adm(Family::E, 6, {1, 3}));
  for (int r = 1; r <= 5; ++r) CHECK_FALSE(is_admissible(sys(Family::BC, r), IndexSet::full(r)));
}

TEST_CASE("preconditions") {
  const auto a3 = sys(Family::A, 3);
  CHECK_THROWS_AS(is_admissible(a3, IndexSet{}), std::invalid_argument);
  CHECK_THROWS_AS(is_admissible(a3, IndexSet::of({4})), std::invalid_argument);
}

TEST_CASE("brute force agrees with the vector-model oracle") {
  for (const auto& c : kCases) {
    for (int r = c.min_rank; r <= c.max_rank; ++r) {
      CAPTURE(c.family);
      CAPTURE(r);
      const auto s = sys(c.f, r);
      const auto o = oracle::make(c.family, r);
      CHECK(masks(enumerate_admissible(s)) == oracle::admissible_sets(o));
      for (oracle::Mask I = 1; I < (1u << r); ++I) {
        CHECK(closed_form(s.type(), IndexSet::from_mask(I)) == oracle::admissible(o, I));
      }
    }
  }
}

TEST_CASE("enumerations") {
  CHECK(enumerate_admissible(sys(Family::A, 3)).size() == 7);
  const auto g2 = enumerate_admissible(sys(Family::G, 2));
  REQUIRE(g2.size() == 1);
  CHECK(g2.front() == IndexSet::of({1, 2}));
  CHECK(enumerate_admissible(sys(Family::BC, 3)).empty());

  const auto d5 = enumerate_admissible(sys(Family::D, 5));
  auto has = [&](IndexSet I) { return std::find(d5.begin(), d5.end(), I) != d5.end(); };
  for (auto I : {IndexSet::of({2}), IndexSet::of({3}), IndexSet::of({2, 3})}) CHECK_FALSE(has(I));
  for (oracle::Mask m = 1; m < 32; ++m) {
    const auto I = IndexSet::from_mask(m);
    if (I.contains(4) || I.contains(5)) CHECK(has(I));
  }
}

TEST_CASE("closed forms") {
  CHECK(closed_form(RootSystemType(Family::F, 4), IndexSet::of({1, 2, 4})));
  CHECK(closed_form(RootSystemType(Family::E, 7), IndexSet::of({7})));
  CHECK_FALSE(closed_form(RootSystemType(Family::E, 7), IndexSet::of({1, 4, 6})));
  CHECK_FALSE(closed_form(RootSystemType(Family::E, 8), IndexSet::of({2, 3, 5})));
}

TEST_CASE("classification reports") {
  const auto b6 = verify_classification(RootSystemType(Family::B, 6));
  CHECK(b6.closed_form_agrees);
  REQUIRE(b6.admissible_sets.size() == 6);
  for (int k = 1; k <= 6; ++k) {
    std::vector<int> chain;
    for (int i = 1; i <= k; ++i) chain.push_back(i);
    CHECK(b6.admissible_sets[k - 1] == IndexSet::of(chain));
  }
  const auto c5 = verify_classification(RootSystemType(Family::C, 5));
  CHECK(c5.closed_form_agrees);
  CHECK(c5.admissible_sets.size() == 16);
  for (IndexSet I : c5.admissible_sets) CHECK(I.contains(5));
  CHECK(verify_classification(RootSystemType(Family::E, 6)).closed_form_agrees);
  CHECK(verify_classification(RootSystemType(Family::E, 6)).witness_discrepancies.empty());
}

TEST_CASE("counts per family") {
  for (int r = 1; r <= 8; ++r) {
    CHECK(enumerate_admissible(sys(Family::A, r)).size() == (1u << r) - 1);
    CHECK(enumerate_admissible(sys(Family::BC, r)).empty());
    if (r >= 2) {
      CHECK(enumerate_admissible(sys(Family::B, r)).size() == static_cast<std::size_t>(r));
      CHECK(enumerate_admissible(sys(Family::C, r)).size() == (1u << (r - 1)));
    }
  }
}

TEST_CASE("union closure") {
  CHECK(is_union_closed(sys(Family::G, 2)));
  CHECK(is_union_closed(sys(Family::D, 6)));
  CHECK(is_union_closed(sys(Family::BC, 4)));
  CHECK(is_union_closed(sys(Family::E, 8)));
}

TEST_CASE("not monotone under inclusion") {
  // Found by scanning E6 with the oracle: a subset of an admissible set that is not admissible.
  const auto o = oracle::make("E", 6);
  const auto s = sys(Family::E, 6);
  bool found = false;
  for (oracle::Mask big : oracle::admissible_sets(o)) {
    for (oracle::Mask small = (big - 1) & big; small && !found; small = (small - 1) & big) {
      if (!oracle::admissible(o, small)) {
        found = true;
        CHECK(is_admissible(s, IndexSet::from_mask(big)));
        CHECK_FALSE(is_admissible(s, IndexSet::from_mask(small)));
      }
    }
  }
  CHECK(found);
  CHECK(is_admissible(s, IndexSet::of({1, 3})));
  CHECK_FALSE(is_admissible(s, IndexSet::of({1, 4})));
}

TEST_CASE("witnesses") {
  const auto bc3 = sys(Family::BC, 3);
  const auto w = admissibility_witness(bc3, IndexSet::full(3));
  REQUIRE(w);
  CHECK(w->coeffs == std::vector<int>{2, 2, 2});
  CHECK_FALSE(admissibility_witness(sys(Family::A, 3), IndexSet::of({2})));

  const auto b3 = sys(Family::B, 3);
  const auto wb = admissibility_witness(b3, IndexSet::of({2, 3}));
  REQUIRE(wb);
  CHECK(b3.contains(*wb));
  CHECK(wb->coeffs[1] % 2 == 0);
  CHECK(wb->coeffs[2] % 2 == 0);
}

TEST_CASE("full set and reduced systems") {
  const auto e8 = full_set_admissible_iff_reduced(RootSystemType(Family::E, 8));
  CHECK(e8.full_set_admissible);
  CHECK_FALSE(e8.all_even_root);
  CHECK(full_set_admissible_iff_reduced(RootSystemType(Family::A, 1)).full_set_admissible);
  const auto bc2 = full_set_admissible_iff_reduced(RootSystemType(Family::BC, 2));
  CHECK_FALSE(bc2.full_set_admissible);
  REQUIRE(bc2.all_even_root);
  CHECK(bc2.all_even_root->coeffs == std::vector<int>{2, 2});
}

TEST_CASE("extrinsic symmetric indices") {
  CHECK(extrinsic_symmetric_indices(sys(Family::A, 5)) == IndexSet::full(5));
  CHECK(extrinsic_symmetric_indices(sys(Family::B, 5)) == IndexSet::of({1}));
  CHECK(extrinsic_symmetric_indices(sys(Family::E, 7)) == IndexSet::of({7}));
  for (const auto& c : kCases) {
    const auto s = sys(c.f, c.max_rank);
    const auto ext = extrinsic_symmetric_indices(s);
    for (oracle::Mask m = ext.mask(); m; m = (m - 1) & ext.mask()) {
      CHECK(is_admissible(s, IndexSet::from_mask(m)));
    }
  }
}

TEST_CASE("zero roots") {
  const auto a4 = sys(Family::A, 4);
  const auto z = zero_root_indices(a4, IndexSet::of({1, 2, 3}));
  REQUIRE(z.size() == 1);
  CHECK(a4.positive_roots()[z[0]].coeffs == std::vector<int>{0, 0, 0, 1});
}
