#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gammasym/index_set.hpp"

namespace gammasym {

enum class Family { A, B, C, D, E, F, G, BC };

std::string_view to_string(Family family);

/// Case-insensitive; accepts "A".."G" and "BC". Throws std::invalid_argument.
Family parse_family(std::string_view text);

/// Family and rank of an irreducible root system. The constructor enforces
/// the rank constraints (A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F=4, G=2,
/// BC>=1) and throws std::invalid_argument naming the violated one.
class RootSystemType {
 public:
  RootSystemType(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool reduced() const { return family_ != Family::BC; }

  /// "A4", "BC3", "E8", ...
  std::string name() const;

  auto operator<=>(const RootSystemType&) const = default;

 private:
  Family family_;
  int rank_;
};

/// A positive root written in the simple-root basis: coeffs[j-1] is the
/// coefficient of alpha_j, equivalently the value of the root on xi_j.
struct Root {
  std::vector<int> coeffs;

  int rank() const { return static_cast<int>(coeffs.size()); }
  int height() const;
  std::string to_string() const;

  auto operator<=>(const Root&) const = default;
};

/// An irreducible root system as exact integer data in the simple-root
/// basis, Bourbaki numbering. Immutable once built.
///
/// E-type numbering: 1-3-4-5-6(-7(-8)) is the long chain and node 2 hangs
/// off node 4.
///
/// For BC_r the simple roots are e_1-e_2, ..., e_{r-1}-e_r, e_r and the
/// positive roots are e_i, 2e_i, e_i +- e_j (multiplicities ignored).
class RootSystem {
 public:
  const RootSystemType& type() const { return type_; }
  int rank() const { return type_.rank(); }

  /// Sorted lexicographically by coefficient vector.
  std::span<const Root> positive_roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }

  /// Cartan integer <alpha_k, alpha_j^vee>, 1-indexed. BC_r carries the
  /// B_r matrix: both share the simple roots and hence the Weyl group.
  int cartan(int k, int j) const;
  std::vector<std::vector<int>> cartan_matrix() const;

  const Root& highest_root() const { return roots_[highest_]; }
  std::vector<Root> simple_roots() const;

  bool contains(const Root& root) const;
  std::optional<std::size_t> index_of(const Root& root) const;

  /// Bitmask shadows of root i: indices with nonzero, respectively odd,
  /// coefficient. These drive every parity test downstream.
  IndexSet support(std::size_t i) const { return IndexSet::from_mask(support_[i]); }
  IndexSet odd_support(std::size_t i) const { return IndexSet::from_mask(odd_[i]); }

 private:
  friend RootSystem build(RootSystemType type);

  RootSystem(RootSystemType type, std::vector<int> cartan, std::vector<Root> roots);

  RootSystemType type_;
  std::vector<int> cartan_;  // row-major, cartan_[k*r + j] = <alpha_k, alpha_j^vee>
  std::vector<Root> roots_;
  std::vector<IndexSet::Mask> support_;
  std::vector<IndexSet::Mask> odd_;
  std::size_t highest_ = 0;
};

/// Reduced types are generated from the Cartan matrix by root-string
/// closure; BC_r is the union of the B_r and C_r lists in shared
/// coordinates.
RootSystem build(RootSystemType type);

/// Cartan matrix of a reduced type (row-major r*r), Bourbaki numbering.
/// BC maps to B.
std::vector<int> cartan_matrix(RootSystemType type);

/// c_j of the root, i.e. the root evaluated on xi_j. 1-indexed; throws
/// std::out_of_range.
int coefficient(const Root& root, int j);

/// The root evaluated on xi_J = sum of xi_j over J. Zero for the empty set.
int evaluate_on_xi_sum(const Root& root, IndexSet J);

inline const Root& highest_root(const RootSystem& system) { return system.highest_root(); }

}  // namespace gammasym
