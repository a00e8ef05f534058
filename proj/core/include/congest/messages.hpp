#pragma once

#include <cstdint>

namespace congest {

// Message tags used by the distributed phases. Values are stable because they
// appear in exported traces.
enum class Tag : std::uint8_t {
  kDistances = 1,        // (dist_odd, dist_even)
  kChild = 2,            // ()
  kAncestor = 3,         // (ancestor id)
  kHeightUp = 4,         // (subtree height)
  kHeightDown = 5,       // (tree height)
  kAncestorExchange = 6, // (index, ancestor id)
  kCandidate = 7,        // (lca depth, inner endpoint, outer endpoint, sum, max, parity)
  kParentTrigger = 8,    // (s, theta, orientation)
  kMoeRoute = 9,         // (s, t, z_t, lca depth, orientation)
  kMoeCross = 10,        // (s, t, orientation)
  kFlip = 11,            // (new matched bit)
};

constexpr std::uint8_t tag_code(Tag t) noexcept { return static_cast<std::uint8_t>(t); }

}  // namespace congest
