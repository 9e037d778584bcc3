#pragma once

#include <string>
#include <vector>

#include "orbiknot/montesinos.hpp"

namespace orbiknot {

/// Canonical tangle sequences with fractions b/a, 0 < b < a <= alpha_max,
/// gcd(a,b) = 1, and 3 <= r <= r_max tangles, one per dihedral class.
/// Each link carries e0 equal to the sum of its fractions.
std::vector<MontesinosLink> normalized_montesinos_classes(int alpha_max, int r_max);

struct PosetEdge {
  std::size_t src = 0;
  std::size_t dst = 0;
  DominationVerdict verdict;
};

struct Poset {
  std::vector<MontesinosLink> nodes;
  // Every ordered pair of distinct nodes, filtered by domination_filter.
  std::vector<PosetEdge> edges;
};

Poset build_poset(int alpha_max, int r_max);

/// Excluded edges dashed, consistent edges solid, certified edges bold.
std::string to_dot(Poset const &poset);

}  // namespace orbiknot
