#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace gammasym {

/// Largest rank representable by an IndexSet bitmask.
inline constexpr int kMaxRank = 32;

/// A subset of the simple-root indices {1,...,r}, 1-indexed (Bourbaki
/// numbering). Index i is stored in bit i-1.
class IndexSet {
 public:
  using Mask = std::uint32_t;

  constexpr IndexSet() = default;

  static constexpr IndexSet from_mask(Mask mask) {
    IndexSet s;
    s.mask_ = mask;
    return s;
  }

  /// Throws std::invalid_argument for indices outside [1, kMaxRank].
  static IndexSet of(std::initializer_list<int> indices);
  static IndexSet of(const std::vector<int>& indices);

  /// {1,...,rank}
  static IndexSet full(int rank);

  /// Parses a comma list such as "1,3,4". Whitespace is ignored; an empty
  /// string yields the empty set.
  static IndexSet parse(std::string_view text);

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int i) const {
    return i >= 1 && i <= kMaxRank && ((mask_ >> (i - 1)) & 1u) != 0;
  }
  constexpr bool subset_of(IndexSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  /// True when every index lies in {1,...,rank}.
  constexpr bool fits(int rank) const {
    return rank >= kMaxRank || (mask_ >> rank) == 0;
  }
  /// Largest index, 0 for the empty set.
  constexpr int max_index() const { return std::bit_width(mask_); }

  std::vector<int> indices() const;
  std::string to_string() const;

  constexpr IndexSet operator|(IndexSet o) const { return from_mask(mask_ | o.mask_); }
  constexpr IndexSet operator&(IndexSet o) const { return from_mask(mask_ & o.mask_); }
  constexpr IndexSet operator^(IndexSet o) const { return from_mask(mask_ ^ o.mask_); }
  IndexSet without(int i) const;

  constexpr auto operator<=>(const IndexSet&) const = default;

 private:
  Mask mask_ = 0;
};

}  // namespace gammasym
