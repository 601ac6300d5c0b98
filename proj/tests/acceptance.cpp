// One line per acceptance criterion. A criterion passes only when the
// library's own check passes and the independent oracle agrees with it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "gammasym/admissible.hpp"
#include "gammasym/antipodal.hpp"
#include "gammasym/gamma.hpp"
#include "gammasym/suite.hpp"
#include "oracles.hpp"

using namespace gammasym;

namespace {

struct OracleResult {
  bool ok = true;
  std::string detail;
};

struct Named {
  const char* family;
  Family f;
  int rank;
};

std::vector<Named> types_within(int max_classical) {
  std::vector<Named> out;
  for (int r = 1; r <= max_classical; ++r) out.push_back({"A", Family::A, r});
  for (int r = 2; r <= max_classical; ++r) out.push_back({"B", Family::B, r});
  for (int r = 2; r <= max_classical; ++r) out.push_back({"C", Family::C, r});
  for (int r = 4; r <= max_classical; ++r) out.push_back({"D", Family::D, r});
  for (int r = 1; r <= max_classical; ++r) out.push_back({"BC", Family::BC, r});
  if (max_classical >= 8) {
    for (int r = 6; r <= 8; ++r) out.push_back({"E", Family::E, r});
  }
  if (max_classical >= 4) out.push_back({"F", Family::F, 4});
  if (max_classical >= 2) out.push_back({"G", Family::G, 2});
  return out;
}

RootSystem sys(const Named& n) { return build(RootSystemType(n.f, n.rank)); }

std::string name(const Named& n) { return n.family + std::to_string(n.rank); }

OracleResult fail(const std::string& what) { return {false, what}; }

std::vector<oracle::Mask> masks(const std::vector<IndexSet>& sets) {
  std::vector<oracle::Mask> out;
  for (IndexSet s : sets) out.push_back(s.mask());
  return out;
}

OracleResult oracle_1() {
  int subsets = 0;
  for (const auto& n : types_within(8)) {
    const auto o = oracle::make(n.family, n.rank);
    const auto type = RootSystemType(n.f, n.rank);
    for (oracle::Mask I = 1; I < (1u << n.rank); ++I, ++subsets) {
      if (closed_form(type, IndexSet::from_mask(I)) != oracle::admissible(o, I)) {
        return fail(name(n) + " " + IndexSet::from_mask(I).to_string());
      }
    }
  }
  return {true, std::to_string(subsets) + " subsets"};
}

OracleResult oracle_2() {
  for (int r = 1; r <= 8; ++r) {
    const std::pair<const char*, std::size_t> want[] = {
        {"A", (1u << r) - 1}, {"B", static_cast<std::size_t>(r)}, {"C", 1u << (r - 1)}, {"BC", 0}};
    for (const auto& [f, count] : want) {
      if (r == 1 && (std::string(f) == "B" || std::string(f) == "C")) continue;
      if (oracle::admissible_sets(oracle::make(f, r)).size() != count) return fail(f + std::to_string(r));
    }
  }
  if (oracle::admissible_sets(oracle::make("G", 2)).size() != 1) return fail("G2");
  return {true, "counts"};
}

OracleResult oracle_3() {
  for (const auto& n : types_within(8)) {
    const auto o = oracle::make(n.family, n.rank);
    const auto sets = oracle::admissible_sets(o);
    for (auto a : sets) {
      for (auto b : sets) {
        if (!oracle::admissible(o, a | b)) return fail(name(n));
      }
    }
    if (masks(enumerate_admissible(sys(n))) != sets) return fail(name(n) + " list");
  }
  return {true, "unions"};
}

OracleResult oracle_4() {
  for (const auto& n : types_within(8)) {
    const auto o = oracle::make(n.family, n.rank);
    bool even_root = false;
    for (const auto& v : o.roots) {
      bool all_even = true;
      for (int c : v) all_even = all_even && c % 2 == 0;
      even_root = even_root || all_even;
    }
    if (even_root != (n.f == Family::BC)) return fail(name(n));
    if (n.f == Family::BC) {
      const auto check = full_set_admissible_iff_reduced(sys(n));
      if (!check.all_even_root || check.all_even_root->coeffs != oracle::Vec(n.rank, 2)) return fail(name(n) + " witness");
    }
  }
  return {true, "2e_1 witnessed for BC"};
}

OracleResult oracle_5() {
  for (const auto& n : types_within(8)) {
    const auto o = oracle::make(n.family, n.rank);
    const auto h = oracle::highest(o);
    oracle::Mask ones = 0;
    for (int j = 0; j < n.rank; ++j) {
      if (h[j] == 1) ones |= 1u << j;
    }
    if (extrinsic_symmetric_indices(sys(n)).mask() != ones) return fail(name(n) + " index set");
    for (oracle::Mask m = ones; m; m = (m - 1) & ones) {
      if (!oracle::admissible(o, m)) return fail(name(n));
    }
  }
  return {true, "subsets"};
}

OracleResult oracle_6() {
  int orbits = 0;
  for (const auto& n : types_within(8)) {
    if (oracle::weyl_order(n.family, n.rank) > 50'000) continue;
    const auto o = oracle::make(n.family, n.rank);
    const auto s = sys(n);
    for (auto I : oracle::admissible_sets(o)) {
      ++orbits;
      if (two_number(s, IndexSet::from_mask(I)) != oracle::orbit(o, I).size()) {
        return fail(name(n) + " " + IndexSet::from_mask(I).to_string());
      }
    }
  }
  for (int n = 2; n <= 8; ++n) {
    const auto o = oracle::make("A", n - 1);
    for (int k = 1; k < n; ++k) {
      if (oracle::orbit(o, 1u << (k - 1)).size() != oracle::binomial(n, k)) return fail("binomial " + std::to_string(n));
    }
  }
  return {true, std::to_string(orbits) + " orbits by std::set search (|W| <= 5e4)"};
}

OracleResult oracle_7() {
  for (const auto& n : types_within(8)) {
    if (weyl_group_order(RootSystemType(n.f, n.rank)) != oracle::weyl_order(n.family, n.rank)) return fail(name(n));
  }
  for (const Named& n : {Named{"E", Family::E, 6}, Named{"F", Family::F, 4}, Named{"B", Family::B, 5}}) {
    const auto o = oracle::make(n.family, n.rank);
    if (oracle::orbit(o, (1u << n.rank) - 1).size() != oracle::weyl_order(n.family, n.rank)) {
      return fail(name(n) + " regular orbit");
    }
  }
  return {true, "orders from degrees; E6, F4, B5 regular orbits searched"};
}

OracleResult oracle_8() {
  std::size_t triples = 0;
  for (const auto& n : types_within(4)) {
    const auto o = oracle::make(n.family, n.rank);
    std::vector<int> coords;
    for (int i = 1; i <= n.rank; ++i) coords.push_back(i);
    std::size_t here = 0;
    for (const auto& sub : oracle::subspaces(n.rank)) {
      const auto elems = oracle::embed(sub, coords);
      for (oracle::Mask I = 1; I < (1u << n.rank); ++I) {
        if (!oracle::triple(o, I, elems)) continue;
        ++here;
        for (auto J : elems) {
          if (J & ~I) return fail(name(n) + " subgroup outside");
        }
        if (!oracle::admissible(o, I)) return fail(name(n) + " not admissible");
      }
    }
    if (verify_maximality_proposition(sys(n)).triples_found != here) return fail(name(n) + " triple count");
    triples += here;
  }
  return {true, std::to_string(triples) + " triples"};
}

OracleResult oracle_9() {
  for (int r = 3; r <= 6; ++r) {
    const auto o = oracle::make("A", r);
    for (int a = 1; a <= r; ++a) {
      for (int b = a + 1; b <= r; ++b) {
        for (int c = b + 1; c <= r; ++c) {
          const auto elems = oracle::closure({oracle::mask_of({a, c}), oracle::mask_of({b})});
          if (elems.size() != 4 || !oracle::triple(o, oracle::mask_of({a, b, c}), elems)) {
            return fail("A" + std::to_string(r));
          }
        }
      }
    }
  }
  return {true, "order 4 of 8"};
}

OracleResult oracle_10() {
  std::mt19937_64 rng(20240615);
  std::size_t cases = 0;
  const Named big[] = {{"A", Family::A, 8}, {"B", Family::B, 6}, {"D", Family::D, 7}, {"E", Family::E, 8},
                       {"C", Family::C, 5}, {"BC", Family::BC, 7}};
  for (const auto& n : big) {
    const auto o = oracle::make(n.family, n.rank);
    const auto s = sys(n);
    for (int t = 0; t < 2000; ++t, ++cases) {
      oracle::Vec v(n.rank);
      for (int& x : v) x = static_cast<int>(rng() % 9) - 4;
      const int j = static_cast<int>(rng() % n.rank);
      if (reflect(CoweightVector{v}, j + 1, s).coords != oracle::reflect(o, v, j)) return fail(name(n) + " reflect");
      const oracle::Mask I = 1 + static_cast<oracle::Mask>(rng() % ((1u << n.rank) - 1));
      const auto elems = oracle::closure({static_cast<oracle::Mask>(rng() % (1u << n.rank)),
                                          static_cast<oracle::Mask>(rng() % (1u << n.rank))});
      std::vector<IndexSet> gens;
      for (auto e : elems) gens.push_back(IndexSet::from_mask(e));
      const auto g = GammaSubgroup::span(gens, n.rank);
      if (is_triple(s, IndexSet::from_mask(I), g) != oracle::triple(o, I, elems)) return fail(name(n) + " triple");
      std::vector<oracle::Mask> singles;
      for (int i : oracle::indices_of(I)) singles.push_back(1u << (i - 1));
      if (oracle::triple(o, I, oracle::closure(singles)) != oracle::admissible(o, I)) return fail(name(n) + " gamma I");
    }
  }
  return {true, std::to_string(cases) + " random cases at rank 5-8"};
}

const std::function<OracleResult()> kOracles[kCriterionCount] = {oracle_1, oracle_2, oracle_3, oracle_4, oracle_5,
                                                                 oracle_6, oracle_7, oracle_8, oracle_9, oracle_10};
const char* const kLimits[kCriterionCount] = {"5 s",  "exact", "exact", "exact", "exact",
                                              "60 s", "120 s, 1 GiB", "10 s", "exact", "exact"};

}  // namespace

int main() {
  int failures = 0;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const auto lib = run_criterion(id);
    const auto start = std::chrono::steady_clock::now();
    OracleResult orc;
    try {
      orc = kOracles[id - 1]();
    } catch (const std::exception& e) {
      orc = fail(std::string("exception: ") + e.what());
    }
    const double oracle_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool passed = lib.passed && orc.ok;
    failures += passed ? 0 : 1;
    std::printf("criterion %2d %s  %-40s %7.2f s (limit %s) | %s | oracle %s, %.2f s\n", id,
                passed ? "PASS" : "FAIL", lib.title.c_str(), lib.seconds, kLimits[id - 1], lib.detail.c_str(),
                orc.detail.c_str(), oracle_seconds);
  }
  std::printf("%d of %d criteria passed; peak RSS %llu MiB\n", kCriterionCount - failures, kCriterionCount,
              static_cast<unsigned long long>(peak_rss_bytes() >> 20));
  return failures == 0 ? 0 : 1;
}
