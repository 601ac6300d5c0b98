#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gammasym/errors.hpp"
#include "gammasym/index_set.hpp"
#include "gammasym/roots.hpp"

namespace gammasym {

/// Default cap on the number of orbit elements held in memory.
inline constexpr std::uint64_t kDefaultOrbitBudget = 50'000'000;

/// A vector of the maximal abelian subspace in coordinates dual to the simple
/// roots: coords[j-1] is alpha_j applied to the vector.
struct CoweightVector {
  std::vector<int> coords;

  /// xi_I: the indicator vector of I.
  static CoweightVector xi(IndexSet I, int rank);

  bool dominant() const;
  std::string to_string() const;

  auto operator<=>(const CoweightVector&) const = default;
};

/// Simple reflection s_j in coweight coordinates:
/// s_j(v)_k = v_k - v_j * <alpha_k, alpha_j^vee>. j is 1-indexed.
CoweightVector reflect(const CoweightVector& v, int j, const RootSystem& system);

/// |W|. BC_r shares the Weyl group of B_r. Throws std::overflow_error when
/// the order does not fit in 64 bits.
std::uint64_t weyl_group_order(const RootSystemType& type);

/// Irreducible types of the connected components of the Dynkin subdiagram on
/// `nodes`, ordered by smallest node. Types are read off node degrees and
/// bond multiplicities; B_2 and C_2 are reported as B_2.
std::vector<RootSystemType> dynkin_components(const RootSystem& system, IndexSet nodes);

/// Order of the parabolic subgroup generated by s_j, j not in I, which is the
/// stabilizer of the dominant vector xi_I.
std::uint64_t stabilizer_order(const RootSystem& system, IndexSet I);

enum class OrbitMethod { enumeration, order_formula, both };

std::string_view to_string(OrbitMethod method);

struct OrbitOptions {
  bool enumerate = false;
  /// Keep the sorted element list when enumerating. Off gives a count-only
  /// walk whose memory is bounded by the widest level.
  bool keep_elements = true;
  std::uint64_t budget = kDefaultOrbitBudget;
};

struct OrbitResult {
  std::uint64_t size = 0;
  std::optional<std::vector<CoweightVector>> elements;
  OrbitMethod method = OrbitMethod::order_formula;
  std::uint64_t weyl_order = 0;
  std::uint64_t stabilizer_order = 0;
  bool budget_exceeded = false;
  std::string note;
};

/// The Weyl orbit of xi_I. With enumerate set, the orbit is walked level by
/// level and checked against |W| / |W_I|; a mismatch throws DiscrepancyError.
/// If the predicted size exceeds the budget, enumeration is skipped and the
/// result carries budget_exceeded with an explanatory note.
OrbitResult orbit(const RootSystem& system, IndexSet I, const OrbitOptions& options = {});

/// Size of the Weyl orbit of xi_I by explicit enumeration alone, without
/// consulting the order formula. Memory is bounded by the widest level.
std::uint64_t enumerate_orbit_size(const RootSystem& system, IndexSet I);

/// Cardinality of a maximal antipodal set of the R-space of xi_I, i.e. the
/// orbit size. Throws NotAdmissibleError unless I is admissible.
std::uint64_t two_number(const RootSystem& system, IndexSet I);

/// Flat dump: per element, rank little-endian int16 values.
void write_orbit_dump(std::ostream& out, std::span<const CoweightVector> elements);
std::vector<CoweightVector> read_orbit_dump(std::istream& in, int rank);

}  // namespace gammasym
