#pragma once

#include <optional>
#include <vector>

#include "gammasym/index_set.hpp"
#include "gammasym/roots.hpp"

namespace gammasym {

/// A non-empty I is admissible iff no positive root has all of its
/// I-coefficients even while being nonzero somewhere on I.
///
/// Throws std::invalid_argument for an empty I or one exceeding the rank.
bool is_admissible(const RootSystem& system, IndexSet I);

/// The lexicographically greatest positive root that violates the parity
/// condition for I, or nullopt when I is admissible. Same preconditions as
/// is_admissible.
std::optional<Root> admissibility_witness(const RootSystem& system, IndexSet I);

/// All non-empty admissible subsets, sorted by bitmask.
std::vector<IndexSet> enumerate_admissible(const RootSystem& system);

/// Per-type classification written out case by case, with no reference to
/// the root data. Used as the independent check on is_admissible.
bool closed_form(const RootSystemType& type, IndexSet I);

struct Discrepancy {
  IndexSet set;
  bool expected;  // closed form
  bool got;       // brute force
};

struct ClassificationReport {
  RootSystemType type;
  std::vector<IndexSet> admissible_sets;
  bool closed_form_agrees = true;
  std::vector<Discrepancy> witness_discrepancies;
};

/// Brute force against closed form over every non-empty subset. Disagreements
/// are listed, never dropped.
ClassificationReport verify_classification(const RootSystemType& type);
ClassificationReport verify_classification(const RootSystem& system);

/// True iff the union of any two admissible sets is admissible.
bool is_union_closed(const RootSystem& system);

struct ReducedCheck {
  bool full_set_admissible = false;
  /// A positive root with every coefficient even, if one exists.
  std::optional<Root> all_even_root;
};

/// Checks {1,...,r} for admissibility and scans for an all-even positive
/// root. For reduced types the first holds and no such root exists; for BC
/// the witness is 2e_1.
ReducedCheck full_set_admissible_iff_reduced(const RootSystemType& type);
ReducedCheck full_set_admissible_iff_reduced(const RootSystem& system);

/// Indices whose simple root has coefficient one in the highest root.
IndexSet extrinsic_symmetric_indices(const RootSystem& system);

/// Positive roots vanishing on xi_I, as indices into positive_roots().
std::vector<std::size_t> zero_root_indices(const RootSystem& system, IndexSet I);

}  // namespace gammasym
