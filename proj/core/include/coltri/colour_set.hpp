#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "coltri/errors.hpp"

namespace coltri {

/// Subset of the colours [1..d+1], stored as a bitmask (bit c-1 <-> colour c).
class ColourSet {
public:
  static constexpr int kMaxColours = 31;

  constexpr ColourSet() = default;
  constexpr explicit ColourSet(std::uint32_t bits) : bits_(bits) {}

  /// Builds a set from 1-based colours. Throws InvalidColourSet on 0 or overflow.
  static ColourSet of(std::initializer_list<int> colours);
  static ColourSet of(const std::vector<int>& colours);
  /// The full set [1..count].
  static constexpr ColourSet all(int count) {
    return ColourSet(count >= 32 ? ~0u : ((1u << count) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int colour) const {
    return colour >= 1 && colour <= kMaxColours && (bits_ >> (colour - 1)) & 1u;
  }
  constexpr bool subset_of(ColourSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// True iff every colour lies in [1..colours].
  constexpr bool within(int colours) const { return subset_of(all(colours)); }

  constexpr ColourSet with(int colour) const { return ColourSet(bits_ | (1u << (colour - 1))); }
  constexpr ColourSet without(int colour) const { return ColourSet(bits_ & ~(1u << (colour - 1))); }

  /// Colours in increasing order.
  std::vector<int> colours() const;
  /// "{1,2,4}"
  std::string to_string() const;

  friend constexpr bool operator==(ColourSet, ColourSet) = default;
  friend constexpr auto operator<=>(ColourSet, ColourSet) = default;

private:
  std::uint32_t bits_ = 0;
};

/// All subsets of `universe` with exactly `size` elements, in increasing bitmask order.
std::vector<ColourSet> subsets_of_size(ColourSet universe, int size);

/// All subsets of `universe` (including the empty set and `universe`), increasing bitmask order.
std::vector<ColourSet> all_subsets(ColourSet universe);

}  // namespace coltri
