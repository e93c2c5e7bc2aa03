#pragma once

#include "fragqsp/fock.hpp"

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace fragqsp {

inline constexpr std::size_t kDefaultCapacity = std::size_t{1} << 24;

// Krylov fragment: the closure of a seed configuration under pair hopping.
// `states` is sorted ascending by bit pattern; `index` inverts it.
struct FragmentBasis {
    std::vector<FockState> states;
    std::unordered_map<std::uint64_t, std::int32_t> index;
    int length = 0;
    ConservedCharges seed_charges;

    std::size_t dim() const { return states.size(); }
    std::int32_t index_of(const FockState& s) const;
};

// Breadth-first closure of `seed`. Throws CapacityError if more than
// `capacity` states are discovered.
FragmentBasis build_fragment(const FockState& seed, std::size_t capacity = kDefaultCapacity);
FragmentBasis build_fragment(const PseudospinString& seed, std::size_t capacity = kDefaultCapacity);

enum class RegionKind {
    FrozenWall,     // uniform fracton run of length >= 2: dynamically inert
    Integrable,     // pure spin content, maps to free fermions
    Nonintegrable,  // mixed spin/fracton content
};

// Half-open is not used: cells first..last inclusive, 1-based.
struct Region {
    int first = 0;
    int last = 0;
    RegionKind kind = RegionKind::Integrable;

    int size() const { return last - first + 1; }
    friend bool operator==(const Region&, const Region&) = default;
};

// Cut a pseudospin string at frozen walls. A wall is a maximal run of
// consecutive fracton cells that is uniform (all '+' or all '-') and at
// least two cells long; every other maximal stretch between walls is one
// active region, Integrable when it contains no fracton.
std::vector<Region> partition_regions(const PseudospinString& text);

// Check dim(fragment(text)) == product of standalone active-region
// dimensions (walls contribute 1). Requires at least two active regions.
bool verify_factorization(const PseudospinString& text, std::size_t capacity = kDefaultCapacity);

} // namespace fragqsp
