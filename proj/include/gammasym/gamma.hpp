#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gammasym/index_set.hpp"
#include "gammasym/roots.hpp"

namespace gammasym {

/// A subgroup of (Z_2)^r, the group generated by the involutions attached to
/// the simple roots. An element is named by the index set J of the involutions
/// it multiplies; the group law is symmetric difference.
///
/// Stored as an F_2 subspace with a reduced echelon basis: each basis vector's
/// pivot is its smallest index, no other basis vector contains that index,
/// and vectors are ordered by pivot. Equal subgroups have equal bases.
class GammaSubgroup {
 public:
  /// The trivial subgroup of (Z_2)^rank.
  explicit GammaSubgroup(int rank);

  /// Span of the generators. Throws std::invalid_argument if one exceeds the
  /// rank.
  static GammaSubgroup span(const std::vector<IndexSet>& generators, int rank);

  /// Gamma^I, generated by the single involutions indexed by I.
  static GammaSubgroup of_index_set(IndexSet I, int rank);

  int rank() const { return rank_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  std::size_t order() const { return std::size_t{1} << basis_.size(); }
  const std::vector<IndexSet>& basis() const { return basis_; }

  /// All 2^dim elements, ascending by bitmask; the identity (empty set) first.
  std::vector<IndexSet> elements() const;

  bool contains(IndexSet J) const;
  bool subgroup_of(const GammaSubgroup& other) const;

  /// Union of all elements. Gamma-hat lies in Gamma^I iff support() is a
  /// subset of I.
  IndexSet support() const;

  friend bool operator==(const GammaSubgroup& a, const GammaSubgroup& b) = default;
  /// Orders by dimension, then basis.
  friend bool operator<(const GammaSubgroup& a, const GammaSubgroup& b);

 private:
  /// Reduces J against the basis; zero iff J is in the span.
  IndexSet::Mask reduce(IndexSet::Mask J) const;
  void insert(IndexSet::Mask J);

  int rank_;
  std::vector<IndexSet> basis_;
};

inline GammaSubgroup subgroup_span(const std::vector<IndexSet>& generators, int rank) {
  return GammaSubgroup::span(generators, rank);
}

/// Every subspace of F_2^dim, embedded into the coordinates listed in
/// `coordinates` (dim = coordinates.size()). Ascending by (dimension, basis).
std::vector<GammaSubgroup> all_subgroups(IndexSet coordinates, int rank);

/// Parity of alpha(xi_J).
bool xi_sum_is_even(const RootSystem& system, std::size_t root, IndexSet J);

/// Positive roots alpha with alpha(xi_J) even for every J in the subgroup,
/// as ascending indices into positive_roots().
struct FixedRootSet {
  std::vector<std::size_t> roots;

  friend bool operator==(const FixedRootSet&, const FixedRootSet&) = default;
  /// Set inclusion.
  bool subset_of(const FixedRootSet& other) const;
};

FixedRootSet fixed_root_set(const RootSystem& system, const GammaSubgroup& subgroup);

/// True iff the fixed root set equals the roots vanishing on xi_I. Throws
/// std::invalid_argument for empty I.
bool is_triple(const RootSystem& system, IndexSet I, const GammaSubgroup& subgroup);

/// A positive root on which the two sets differ, or nullopt for a triple.
std::optional<Root> triple_witness(const RootSystem& system, IndexSet I, const GammaSubgroup& subgroup);

struct MaximalityCounterexample {
  IndexSet I;
  GammaSubgroup subgroup;
};

struct MaximalityReport {
  std::size_t subgroups_scanned = 0;
  std::size_t index_sets_scanned = 0;
  std::size_t triples_found = 0;
  std::vector<MaximalityCounterexample> counterexamples;

  bool holds() const { return counterexamples.empty(); }
};

inline constexpr int kDefaultExhaustiveRank = 4;

/// Scans every non-empty I and every subgroup of (Z_2)^r: each triple must
/// have its subgroup inside Gamma^I and I admissible. Throws
/// std::invalid_argument when the rank exceeds max_rank.
MaximalityReport verify_maximality_proposition(const RootSystem& system,
                                               int max_rank = kDefaultExhaustiveRank);

inline constexpr int kDefaultMinimalSubgroupBound = 6;

/// Subgroups of Gamma^I that give a triple while none of their proper
/// subgroups does, ascending by (dimension, basis). Exploratory. Throws
/// NotAdmissibleError for non-admissible I and std::invalid_argument when
/// |I| exceeds max_size.
std::vector<GammaSubgroup> minimal_triple_subgroups(const RootSystem& system, IndexSet I,
                                                    int max_size = kDefaultMinimalSubgroupBound);

}  // namespace gammasym
