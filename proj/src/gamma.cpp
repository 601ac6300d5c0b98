#include "gammasym/gamma.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "gammasym/admissible.hpp"
#include "gammasym/errors.hpp"

namespace gammasym {

namespace {

IndexSet::Mask lowest_bit(IndexSet::Mask m) { return m & (~m + 1); }

}  // namespace

GammaSubgroup::GammaSubgroup(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("subgroup rank outside [1, 32]");
}

GammaSubgroup GammaSubgroup::span(const std::vector<IndexSet>& generators, int rank) {
  GammaSubgroup g(rank);
  for (IndexSet J : generators) {
    if (!J.fits(rank)) {
      throw std::invalid_argument("generator " + J.to_string() + " exceeds rank " + std::to_string(rank));
    }
    g.insert(J.mask());
  }
  return g;
}

GammaSubgroup GammaSubgroup::of_index_set(IndexSet I, int rank) {
  std::vector<IndexSet> gens;
  for (int i : I.indices()) gens.push_back(IndexSet::of({i}));
  return span(gens, rank);
}

IndexSet::Mask GammaSubgroup::reduce(IndexSet::Mask J) const {
  for (IndexSet b : basis_) {
    if (J & lowest_bit(b.mask())) J ^= b.mask();
  }
  return J;
}

void GammaSubgroup::insert(IndexSet::Mask J) {
  J = reduce(J);
  if (J == 0) return;
  const IndexSet::Mask pivot = lowest_bit(J);
  for (IndexSet& b : basis_) {
    if (b.mask() & pivot) b = IndexSet::from_mask(b.mask() ^ J);
  }
  auto pos = std::find_if(basis_.begin(), basis_.end(),
                          [&](IndexSet b) { return lowest_bit(b.mask()) > pivot; });
  basis_.insert(pos, IndexSet::from_mask(J));
}

std::vector<IndexSet> GammaSubgroup::elements() const {
  std::vector<IndexSet> out;
  out.reserve(order());
  for (std::size_t combo = 0; combo < order(); ++combo) {
    IndexSet::Mask m = 0;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if ((combo >> k) & 1u) m ^= basis_[k].mask();
    }
    out.push_back(IndexSet::from_mask(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool GammaSubgroup::contains(IndexSet J) const { return J.fits(rank_) && reduce(J.mask()) == 0; }

bool GammaSubgroup::subgroup_of(const GammaSubgroup& other) const {
  return rank_ == other.rank_ &&
         std::all_of(basis_.begin(), basis_.end(), [&](IndexSet b) { return other.contains(b); });
}

IndexSet GammaSubgroup::support() const {
  IndexSet::Mask m = 0;
  for (IndexSet b : basis_) m |= b.mask();
  return IndexSet::from_mask(m);
}

bool operator<(const GammaSubgroup& a, const GammaSubgroup& b) {
  if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
  return a.basis_ < b.basis_;
}

std::vector<GammaSubgroup> all_subgroups(IndexSet coordinates, int rank) {
  if (!coordinates.fits(rank)) throw std::invalid_argument("coordinates exceed rank");
  const std::vector<int> coords = coordinates.indices();
  const int d = static_cast<int>(coords.size());
  if (d > 8) throw std::invalid_argument("subspace enumeration above dimension 8 is not supported");

  auto to_global = [&](unsigned local) {
    IndexSet::Mask m = 0;
    for (int q = 0; q < d; ++q) {
      if ((local >> q) & 1u) m |= IndexSet::Mask{1} << (coords[static_cast<std::size_t>(q)] - 1);
    }
    return IndexSet::from_mask(m);
  };

  // One reduced echelon form per subspace: choose the pivot positions, then
  // fill each row's free entries, which sit right of its pivot and off every
  // pivot column.
  std::vector<GammaSubgroup> out;
  for (unsigned pivots = 0; pivots < (1u << d); ++pivots) {
    std::vector<std::pair<int, std::vector<int>>> rows;
    std::size_t free_count = 0;
    for (int p = 0; p < d; ++p) {
      if (!((pivots >> p) & 1u)) continue;
      std::vector<int> free;
      for (int q = p + 1; q < d; ++q) {
        if (!((pivots >> q) & 1u)) free.push_back(q);
      }
      free_count += free.size();
      rows.emplace_back(p, std::move(free));
    }
    for (unsigned long fill = 0; fill < (1ul << free_count); ++fill) {
      std::vector<IndexSet> gens;
      std::size_t bit = 0;
      for (const auto& [p, free] : rows) {
        unsigned local = 1u << p;
        for (int q : free) {
          if ((fill >> bit++) & 1ul) local |= 1u << q;
        }
        gens.push_back(to_global(local));
      }
      out.push_back(GammaSubgroup::span(gens, rank));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool xi_sum_is_even(const RootSystem& system, std::size_t root, IndexSet J) {
  return std::popcount(system.odd_support(root).mask() & J.mask()) % 2 == 0;
}

bool FixedRootSet::subset_of(const FixedRootSet& other) const {
  return std::includes(other.roots.begin(), other.roots.end(), roots.begin(), roots.end());
}

FixedRootSet fixed_root_set(const RootSystem& system, const GammaSubgroup& subgroup) {
  if (subgroup.rank() != system.rank()) throw std::invalid_argument("subgroup rank differs from system rank");
  const auto elements = subgroup.elements();
  FixedRootSet out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (std::all_of(elements.begin(), elements.end(),
                    [&](IndexSet J) { return xi_sum_is_even(system, i, J); })) {
      out.roots.push_back(i);
    }
  }
  return out;
}

std::optional<Root> triple_witness(const RootSystem& system, IndexSet I, const GammaSubgroup& subgroup) {
  if (I.empty()) throw std::invalid_argument("triple test needs a non-empty index set");
  if (!I.fits(system.rank())) throw std::invalid_argument("index set exceeds rank");
  const auto fixed = fixed_root_set(system, subgroup).roots;
  const auto zero = zero_root_indices(system, I);
  std::vector<std::size_t> diff;
  std::set_symmetric_difference(fixed.begin(), fixed.end(), zero.begin(), zero.end(),
                                std::back_inserter(diff));
  if (diff.empty()) return std::nullopt;
  return system.positive_roots()[diff.front()];
}

bool is_triple(const RootSystem& system, IndexSet I, const GammaSubgroup& subgroup) {
  return !triple_witness(system, I, subgroup).has_value();
}

MaximalityReport verify_maximality_proposition(const RootSystem& system, int max_rank) {
  const int r = system.rank();
  if (r > max_rank) {
    throw std::invalid_argument("exhaustive subgroup scan is bounded to rank " + std::to_string(max_rank) +
                                "; " + system.type().name() + " has rank " + std::to_string(r));
  }
  MaximalityReport report;
  const auto subgroups = all_subgroups(IndexSet::full(r), r);
  std::vector<FixedRootSet> fixed;
  fixed.reserve(subgroups.size());
  for (const auto& g : subgroups) fixed.push_back(fixed_root_set(system, g));
  report.subgroups_scanned = subgroups.size();

  const IndexSet::Mask limit = IndexSet::full(r).mask();
  for (IndexSet::Mask m = 1; m <= limit; ++m) {
    const IndexSet I = IndexSet::from_mask(m);
    ++report.index_sets_scanned;
    const FixedRootSet zero{zero_root_indices(system, I)};
    const bool admissible = is_admissible(system, I);
    for (std::size_t k = 0; k < subgroups.size(); ++k) {
      if (fixed[k] != zero) continue;
      ++report.triples_found;
      if (!subgroups[k].support().subset_of(I) || !admissible) {
        report.counterexamples.push_back({I, subgroups[k]});
      }
    }
  }
  return report;
}

std::vector<GammaSubgroup> minimal_triple_subgroups(const RootSystem& system, IndexSet I, int max_size) {
  if (!is_admissible(system, I)) {
    throw NotAdmissibleError("index set " + I.to_string() + " is not admissible for " + system.type().name());
  }
  if (I.size() > max_size) {
    throw std::invalid_argument("subgroup enumeration is bounded to |I| <= " + std::to_string(max_size));
  }
  std::vector<GammaSubgroup> triples;
  for (auto& g : all_subgroups(I, system.rank())) {
    if (is_triple(system, I, g)) triples.push_back(std::move(g));
  }
  std::vector<GammaSubgroup> out;
  for (const auto& g : triples) {
    const bool has_smaller = std::any_of(triples.begin(), triples.end(), [&](const GammaSubgroup& h) {
      return h.dimension() < g.dimension() && h.subgroup_of(g);
    });
    if (!has_smaller) out.push_back(g);
  }
  return out;
}

}  // namespace gammasym
