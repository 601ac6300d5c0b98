#include "gammasym/suite.hpp"

#include <sys/resource.h>

#include <chrono>
#include <random>
#include <sstream>

#include "gammasym/admissible.hpp"
#include "gammasym/antipodal.hpp"
#include "gammasym/gamma.hpp"

namespace gammasym {

std::vector<RootSystemType> classification_types(int max_classical_rank) {
  std::vector<RootSystemType> out;
  for (int r = 1; r <= max_classical_rank; ++r) out.emplace_back(Family::A, r);
  for (int r = 2; r <= max_classical_rank; ++r) out.emplace_back(Family::B, r);
  for (int r = 2; r <= max_classical_rank; ++r) out.emplace_back(Family::C, r);
  for (int r = 4; r <= max_classical_rank; ++r) out.emplace_back(Family::D, r);
  for (int r = 1; r <= max_classical_rank; ++r) out.emplace_back(Family::BC, r);
  for (int r = 6; r <= 8; ++r) out.emplace_back(Family::E, r);
  out.emplace_back(Family::F, 4);
  out.emplace_back(Family::G, 2);
  return out;
}

std::vector<RootSystemType> types_up_to_rank(int max_rank) {
  std::vector<RootSystemType> out;
  for (const auto& t : classification_types(max_rank)) {
    if (t.rank() <= max_rank) out.push_back(t);
  }
  return out;
}

std::uint64_t peak_rss_bytes() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;  // Linux reports KiB
}

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;
  int failures = 0;

  void fail(const std::string& what) {
    ok = false;
    if (failures++ < 5) detail << what << "; ";
  }
};

std::vector<RootSystem> build_all(const std::vector<RootSystemType>& types) {
  std::vector<RootSystem> out;
  out.reserve(types.size());
  for (const auto& t : types) out.push_back(build(t));
  return out;
}

std::uint64_t binomial(int n, int k) {
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n + 1), 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j > 0; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  }
  return row[static_cast<std::size_t>(k)];
}

Check classification_reproduction() {
  Check c;
  int systems = 0;
  for (const auto& type : classification_types(8)) {
    const auto report = verify_classification(type);
    ++systems;
    for (const auto& d : report.witness_discrepancies) {
      c.fail(type.name() + " " + d.set.to_string() + " closed form " + (d.expected ? "yes" : "no") +
             ", brute force " + (d.got ? "yes" : "no"));
    }
  }
  c.detail << systems << " systems compared";
  return c;
}

Check type_specific_counts() {
  Check c;
  auto expect = [&](RootSystemType t, std::size_t want) {
    const auto got = enumerate_admissible(build(t)).size();
    if (got != want) c.fail(t.name() + " has " + std::to_string(got) + ", want " + std::to_string(want));
  };
  for (int r = 1; r <= 8; ++r) expect({Family::A, r}, (std::size_t{1} << r) - 1);
  for (int r = 2; r <= 8; ++r) expect({Family::B, r}, static_cast<std::size_t>(r));
  for (int r = 2; r <= 8; ++r) expect({Family::C, r}, std::size_t{1} << (r - 1));
  expect({Family::G, 2}, 1);
  for (int r = 1; r <= 8; ++r) expect({Family::BC, r}, 0);
  // B_r admissible sets are exactly the chains.
  for (int r = 2; r <= 8; ++r) {
    const auto sets = enumerate_admissible(build({Family::B, r}));
    for (std::size_t k = 0; k < sets.size(); ++k) {
      if (sets[k] != IndexSet::full(static_cast<int>(k) + 1)) c.fail("B" + std::to_string(r) + " non-chain set");
    }
  }
  return c;
}

Check union_closure() {
  Check c;
  for (const auto& type : classification_types(8)) {
    if (!is_union_closed(build(type))) c.fail(type.name() + " not closed under union");
  }
  return c;
}

Check all_even_scan() {
  Check c;
  for (const auto& type : classification_types(8)) {
    const auto check = full_set_admissible_iff_reduced(type);
    if (type.reduced()) {
      if (!check.full_set_admissible) c.fail(type.name() + " full set not admissible");
      if (check.all_even_root) c.fail(type.name() + " has all-even root " + check.all_even_root->to_string());
    } else {
      const Root two_e1{std::vector<int>(static_cast<std::size_t>(type.rank()), 2)};
      if (check.full_set_admissible) c.fail(type.name() + " full set admissible");
      if (!check.all_even_root || *check.all_even_root != two_e1) c.fail(type.name() + " witness is not 2e_1");
    }
  }
  return c;
}

Check extrinsic_symmetric() {
  Check c;
  for (const auto& type : classification_types(8)) {
    const auto system = build(type);
    const auto ext = extrinsic_symmetric_indices(system).mask();
    // Walk the non-empty submasks of ext.
    for (IndexSet::Mask m = ext; m != 0; m = (m - 1) & ext) {
      if (!is_admissible(system, IndexSet::from_mask(m))) {
        c.fail(type.name() + " " + IndexSet::from_mask(m).to_string() + " not admissible");
      }
    }
  }
  return c;
}

Check antipodal_orbits() {
  Check c;
  std::size_t orbits = 0;
  std::uint64_t points = 0;
  for (const auto& type : classification_types(8)) {
    if (weyl_group_order(type) > 1'000'000) continue;
    const auto system = build(type);
    const std::uint64_t w = weyl_group_order(type);
    for (IndexSet I : enumerate_admissible(system)) {
      const std::uint64_t walked = enumerate_orbit_size(system, I);
      const std::uint64_t formula = w / stabilizer_order(system, I);
      ++orbits;
      points += walked;
      if (walked != formula || w % stabilizer_order(system, I) != 0) {
        c.fail(type.name() + " " + I.to_string() + ": walked " + std::to_string(walked) + ", formula " +
               std::to_string(formula));
      }
    }
  }
  for (int n = 2; n <= 8; ++n) {
    const auto system = build({Family::A, n - 1});
    for (int k = 1; k < n; ++k) {
      const auto got = two_number(system, IndexSet::of({k}));
      if (got != binomial(n, k)) {
        c.fail("two_number(A" + std::to_string(n - 1) + ", {" + std::to_string(k) + "}) = " + std::to_string(got));
      }
    }
  }
  c.detail << orbits << " orbits, " << points << " points walked";
  return c;
}

Check weyl_orders() {
  Check c;
  std::vector<RootSystemType> types;
  for (int r = 1; r <= 8; ++r) types.emplace_back(Family::A, r);
  for (int r = 2; r <= 7; ++r) types.emplace_back(Family::B, r);
  for (int r = 2; r <= 7; ++r) types.emplace_back(Family::C, r);
  for (int r = 4; r <= 7; ++r) types.emplace_back(Family::D, r);
  types.emplace_back(Family::F, 4);
  types.emplace_back(Family::G, 2);
  types.emplace_back(Family::E, 6);
  for (const auto& type : types) {
    const auto system = build(type);
    const auto walked = enumerate_orbit_size(system, IndexSet::full(type.rank()));
    if (walked != weyl_group_order(type)) {
      c.fail(type.name() + " regular orbit " + std::to_string(walked) + " vs |W| " +
             std::to_string(weyl_group_order(type)));
    }
    if (type == RootSystemType(Family::E, 6) && walked != 51'840) c.fail("E6 regular orbit is not 51840");
  }
  const auto rss = peak_rss_bytes();
  if (rss >= (std::uint64_t{1} << 30)) c.fail("peak RSS " + std::to_string(rss) + " bytes");
  c.detail << types.size() << " regular orbits; peak RSS " << rss / (1024 * 1024) << " MiB";
  return c;
}

Check maximality() {
  Check c;
  std::size_t triples = 0;
  for (const auto& type : types_up_to_rank(4)) {
    const auto report = verify_maximality_proposition(build(type), 4);
    triples += report.triples_found;
    for (const auto& ce : report.counterexamples) {
      c.fail(type.name() + " I=" + ce.I.to_string() + " subgroup support " + ce.subgroup.support().to_string());
    }
  }
  c.detail << triples << " triples found";
  return c;
}

Check flag_example() {
  Check c;
  std::size_t cases = 0;
  for (int r = 3; r <= 6; ++r) {
    const auto system = build({Family::A, r});
    for (int i1 = 1; i1 <= r; ++i1) {
      for (int i2 = i1 + 1; i2 <= r; ++i2) {
        for (int i3 = i2 + 1; i3 <= r; ++i3) {
          ++cases;
          const IndexSet I = IndexSet::of({i1, i2, i3});
          const auto sub = GammaSubgroup::span({IndexSet::of({i1, i3}), IndexSet::of({i2})}, r);
          const auto full = GammaSubgroup::of_index_set(I, r);
          const std::string tag = "A" + std::to_string(r) + " " + I.to_string();
          if (!is_triple(system, I, sub)) c.fail(tag + " not a triple");
          if (sub.order() != 4 || full.order() != 8) c.fail(tag + " wrong orders");
          if (!sub.subgroup_of(full) || sub == full) c.fail(tag + " not a proper subgroup");
        }
      }
    }
  }
  c.detail << cases << " index triples";
  return c;
}

// Property helpers shared by the exhaustive and randomized halves.
bool generator_sufficiency_holds(const RootSystem& s, std::size_t root, const std::vector<IndexSet>& gens) {
  const auto g = GammaSubgroup::span(gens, s.rank());
  bool all = true;
  for (IndexSet J : g.elements()) all = all && xi_sum_is_even(s, root, J);
  bool on_gens = true;
  for (IndexSet J : gens) on_gens = on_gens && xi_sum_is_even(s, root, J);
  return all == on_gens;
}

Check property_suite(const SuiteOptions& options) {
  Check c;
  std::size_t exhaustive = 0;

  for (const auto& type : types_up_to_rank(4)) {
    const auto s = build(type);
    const int r = s.rank();
    // Involution over the box [-2,2]^r.
    std::vector<int> v(static_cast<std::size_t>(r), -2);
    for (bool more = true; more;) {
      for (int j = 1; j <= r; ++j) {
        const CoweightVector x{v};
        ++exhaustive;
        if (reflect(reflect(x, j, s), j, s) != x) c.fail(type.name() + " involution at " + x.to_string());
      }
      more = false;
      for (auto& x : v) {
        if (++x <= 2) { more = true; break; }
        x = -2;
      }
    }
    const auto subgroups = all_subgroups(IndexSet::full(r), r);
    std::vector<FixedRootSet> fixed;
    for (const auto& g : subgroups) fixed.push_back(fixed_root_set(s, g));
    for (std::size_t a = 0; a < subgroups.size(); ++a) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        ++exhaustive;
        if (!generator_sufficiency_holds(s, i, subgroups[a].basis())) c.fail(type.name() + " generator sufficiency");
      }
      for (std::size_t b = 0; b < subgroups.size(); ++b) {
        if (!subgroups[a].subgroup_of(subgroups[b])) continue;
        ++exhaustive;
        if (!fixed[b].subset_of(fixed[a])) c.fail(type.name() + " anti-monotonicity");
      }
    }
    for (IndexSet::Mask m = 1; m <= IndexSet::full(r).mask(); ++m) {
      const IndexSet I = IndexSet::from_mask(m);
      ++exhaustive;
      if (is_triple(s, I, GammaSubgroup::of_index_set(I, r)) != is_admissible(s, I)) {
        c.fail(type.name() + " triple/admissible mismatch at " + I.to_string());
      }
    }
  }

  std::vector<RootSystemType> big;
  for (const auto& t : classification_types(8)) {
    if (t.rank() >= 5) big.push_back(t);
  }
  const auto systems = build_all(big);
  std::mt19937_64 rng(options.seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto random_mask = [&](int r) {
    return IndexSet::from_mask(static_cast<IndexSet::Mask>(pick(std::size_t{1} << r)));
  };

  for (std::size_t n = 0; n < options.random_cases; ++n) {
    const auto& s = systems[pick(systems.size())];
    const int r = s.rank();

    CoweightVector x{std::vector<int>(static_cast<std::size_t>(r))};
    for (auto& e : x.coords) e = static_cast<int>(pick(21)) - 10;
    const int j = static_cast<int>(pick(static_cast<std::size_t>(r))) + 1;
    if (reflect(reflect(x, j, s), j, s) != x) c.fail(s.type().name() + " involution at " + x.to_string());

    std::vector<IndexSet> gens(pick(4) + 1);
    for (auto& g : gens) g = random_mask(r);
    if (!generator_sufficiency_holds(s, pick(s.size()), gens)) c.fail(s.type().name() + " generator sufficiency");

    const auto small = GammaSubgroup::span(gens, r);
    auto more = gens;
    more.push_back(random_mask(r));
    const auto large = GammaSubgroup::span(more, r);
    if (!fixed_root_set(s, large).subset_of(fixed_root_set(s, small))) c.fail(s.type().name() + " anti-monotonicity");

    IndexSet I;
    while (I.empty()) I = random_mask(r);
    if (is_triple(s, I, GammaSubgroup::of_index_set(I, r)) != is_admissible(s, I)) {
      c.fail(s.type().name() + " triple/admissible mismatch at " + I.to_string());
    }
  }
  c.detail << exhaustive << " exhaustive checks, " << options.random_cases
           << " random cases per property (seed " << options.seed << ")";
  return c;
}

struct Criterion {
  const char* title;
  double time_limit;  // seconds; 0 means no limit
};

constexpr Criterion kCriteria[kCriterionCount] = {
    {"classification reproduction", 5.0},
    {"type-specific counts", 0.0},
    {"union closure", 0.0},
    {"no all-even root in reduced systems", 0.0},
    {"extrinsic symmetric subsets admissible", 0.0},
    {"antipodal orbit agreement", 60.0},
    {"Weyl order cross-validation", 120.0},
    {"subgroup maximality", 10.0},
    {"flag manifold proper subgroup example", 0.0},
    {"property suite", 0.0},
};

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id out of range");
  CriterionResult result;
  result.id = id;
  result.title = kCriteria[id - 1].title;
  const auto start = std::chrono::steady_clock::now();
  try {
    Check c;
    switch (id) {
      case 1: c = classification_reproduction(); break;
      case 2: c = type_specific_counts(); break;
      case 3: c = union_closure(); break;
      case 4: c = all_even_scan(); break;
      case 5: c = extrinsic_symmetric(); break;
      case 6: c = antipodal_orbits(); break;
      case 7: c = weyl_orders(); break;
      case 8: c = maximality(); break;
      case 9: c = flag_example(); break;
      case 10: c = property_suite(options); break;
    }
    result.passed = c.ok;
    result.detail = c.detail.str();
    if (c.failures > 5) result.detail += " (" + std::to_string(c.failures) + " failures in total)";
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double limit = kCriteria[id - 1].time_limit;
  if (limit > 0 && result.seconds >= limit) {
    result.passed = false;
    result.detail += " exceeded the " + std::to_string(static_cast<int>(limit)) + " s limit";
  }
  return result;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace gammasym
