#include "gammasym/admissible.hpp"

#include <algorithm>
#include <stdexcept>

namespace gammasym {

namespace {

void require_query_set(const RootSystem& system, IndexSet I) {
  if (I.empty()) {
    throw std::invalid_argument("admissibility is defined for non-empty index sets only");
  }
  if (!I.fits(system.rank())) {
    throw std::invalid_argument("index set " + I.to_string() + " exceeds rank " +
                                std::to_string(system.rank()) + " of " + system.type().name());
  }
}

// Parity violation: every I-coefficient even, some I-coefficient nonzero.
bool violates(const RootSystem& system, std::size_t i, IndexSet::Mask I) {
  return (system.odd_support(i).mask() & I) == 0 && (system.support(i).mask() & I) != 0;
}

bool is_chain(IndexSet I) {
  // {1,...,k} for some k >= 1
  const auto m = I.mask();
  return m != 0 && (m & (m + 1)) == 0;
}

bool equals_any(IndexSet I, std::initializer_list<IndexSet> sets) {
  return std::find(sets.begin(), sets.end(), I) != sets.end();
}

bool subset_of_any(IndexSet I, std::initializer_list<IndexSet> sets) {
  return std::any_of(sets.begin(), sets.end(), [&](IndexSet s) { return I.subset_of(s); });
}

bool closed_form_e6(IndexSet I) {
  if (!I.contains(1) && !I.contains(2) && !I.contains(6)) return false;
  if (I.contains(1) &&
      equals_any(I, {IndexSet::of({1, 4}), IndexSet::of({1, 5}), IndexSet::of({1, 4, 5}),
                     IndexSet::of({1, 4, 6})})) {
    return false;
  }
  if (I.contains(2) && I.subset_of(IndexSet::of({2, 3, 5}))) return false;
  if (I.contains(6) &&
      equals_any(I, {IndexSet::of({3, 6}), IndexSet::of({4, 6}), IndexSet::of({1, 4, 6}),
                     IndexSet::of({3, 4, 6})})) {
    return false;
  }
  return true;
}

bool closed_form_e7(IndexSet I) {
  if (I.contains(7)) {
    const IndexSet rest = I.without(7);
    return rest.empty() || closed_form_e6(rest);
  }
  if (!I.contains(1) && !I.contains(2)) return false;
  if (I.contains(1)) {
    return !subset_of_any(I, {IndexSet::of({1, 2, 4, 6}), IndexSet::of({1, 4, 5, 6})});
  }
  return !subset_of_any(I, {IndexSet::of({2, 3, 4, 6}), IndexSet::of({2, 3, 5, 6})});
}

bool closed_form_e8(IndexSet I) {
  if (I.contains(8)) {
    if (I.subset_of(IndexSet::of({1, 3, 4, 6, 8}))) return false;
    return closed_form_e7(I.without(8));
  }
  if (!I.contains(1) && !I.contains(2)) return false;
  if (I.contains(1)) {
    return !subset_of_any(I, {IndexSet::of({1, 2, 3, 5, 7}), IndexSet::of({1, 2, 4, 5, 7}),
                              IndexSet::of({1, 2, 4, 6, 7}), IndexSet::of({1, 3, 4, 5, 7}),
                              IndexSet::of({1, 3, 4, 6, 7}), IndexSet::of({1, 4, 5, 6, 7})});
  }
  return !subset_of_any(I, {IndexSet::of({2, 3, 4, 5, 7}), IndexSet::of({2, 3, 4, 6, 7}),
                            IndexSet::of({2, 3, 5, 6, 7})});
}

}  // namespace

bool is_admissible(const RootSystem& system, IndexSet I) {
  require_query_set(system, I);
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (violates(system, i, I.mask())) return false;
  }
  return true;
}

std::optional<Root> admissibility_witness(const RootSystem& system, IndexSet I) {
  require_query_set(system, I);
  for (std::size_t i = system.size(); i-- > 0;) {
    if (violates(system, i, I.mask())) return system.positive_roots()[i];
  }
  return std::nullopt;
}

std::vector<IndexSet> enumerate_admissible(const RootSystem& system) {
  std::vector<IndexSet> out;
  const IndexSet::Mask limit = IndexSet::full(system.rank()).mask();
  for (IndexSet::Mask m = 1; m != 0 && m <= limit; ++m) {
    if (is_admissible(system, IndexSet::from_mask(m))) out.push_back(IndexSet::from_mask(m));
  }
  return out;
}

bool closed_form(const RootSystemType& type, IndexSet I) {
  if (I.empty() || !I.fits(type.rank())) {
    throw std::invalid_argument("closed form needs a non-empty subset of {1,...," +
                                std::to_string(type.rank()) + "}");
  }
  const int r = type.rank();
  switch (type.family()) {
    case Family::A:
      return true;
    case Family::B:
      return is_chain(I);
    case Family::C:
      return I.contains(r);
    case Family::D:
      if (I.contains(r - 1) || I.contains(r)) return true;
      return is_chain(I);
    case Family::E:
      if (r == 6) return closed_form_e6(I);
      if (r == 7) return closed_form_e7(I);
      return closed_form_e8(I);
    case Family::F:
      return IndexSet::of({1, 2}).subset_of(I);
    case Family::G:
      return I == IndexSet::of({1, 2});
    case Family::BC:
      return false;
  }
  return false;
}

ClassificationReport verify_classification(const RootSystemType& type) {
  return verify_classification(build(type));
}

ClassificationReport verify_classification(const RootSystem& system) {
  ClassificationReport report{system.type(), {}, true, {}};
  const IndexSet::Mask limit = IndexSet::full(system.rank()).mask();
  for (IndexSet::Mask m = 1; m != 0 && m <= limit; ++m) {
    const IndexSet I = IndexSet::from_mask(m);
    const bool got = is_admissible(system, I);
    const bool expected = closed_form(system.type(), I);
    if (got) report.admissible_sets.push_back(I);
    if (got != expected) report.witness_discrepancies.push_back({I, expected, got});
  }
  report.closed_form_agrees = report.witness_discrepancies.empty();
  return report;
}

bool is_union_closed(const RootSystem& system) {
  const auto sets = enumerate_admissible(system);
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      if (!is_admissible(system, sets[a] | sets[b])) return false;
    }
  }
  return true;
}

ReducedCheck full_set_admissible_iff_reduced(const RootSystemType& type) {
  return full_set_admissible_iff_reduced(build(type));
}

ReducedCheck full_set_admissible_iff_reduced(const RootSystem& system) {
  ReducedCheck check;
  check.full_set_admissible = is_admissible(system, IndexSet::full(system.rank()));
  // Greatest first, so BC reports 2e_1 rather than 2e_r.
  auto roots = system.positive_roots();
  for (std::size_t i = roots.size(); i-- > 0;) {
    if (system.odd_support(i).empty()) {
      check.all_even_root = roots[i];
      break;
    }
  }
  return check;
}

IndexSet extrinsic_symmetric_indices(const RootSystem& system) {
  const Root& top = system.highest_root();
  IndexSet::Mask m = 0;
  for (int j = 0; j < system.rank(); ++j) {
    if (top.coeffs[static_cast<std::size_t>(j)] == 1) m |= IndexSet::Mask{1} << j;
  }
  return IndexSet::from_mask(m);
}

std::vector<std::size_t> zero_root_indices(const RootSystem& system, IndexSet I) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if ((system.support(i).mask() & I.mask()) == 0) out.push_back(i);
  }
  return out;
}

}  // namespace gammasym
