#pragma once

#include <utility>
#include <vector>

#include "wonderful/rootsys.hpp"

namespace wonderful {

/// Data of one group-pair orbit of the compactification, indexed by a subset
/// I of {1..l}.  Convention (easy to get backwards): Delta_I is the set of
/// simple roots NOT indexed by I, and Phi_I the roots supported on Delta_I.
struct OrbitDatum {
  std::vector<int> I;       // 1-based, sorted
  std::vector<int> deltaI;  // complement, 1-based, sorted
  Int phiICount = 0;        // |Phi_I|
  Int phiIPositive = 0;     // |Phi_I^+|
  Int dimLevi = 0;          // l + |Phi_I|
  Int dimUnipotent = 0;     // N - |Phi_I^+|
  Int dimParabolic = 0;     // dimLevi + dimUnipotent
  Int dimFlag = 0;          // dimG - dimParabolic
  Int dimFiber = 0;         // dimLevi - |I|
  Int dimOrbit = 0;         // dimG - |I|
  Int dimStabilizer = 0;    // dimG + |I|
};

/// All 2^l orbits with the closure order (reverse inclusion of subsets).
struct OrbitPoset {
  std::vector<OrbitDatum> nodes;             // sorted by (|I|, lexicographic)
  std::vector<std::pair<int, int>> hasse;    // (node index of I, node index of I + {j})
};

/// Levi/parabolic/orbit dimension data for one subset.  Throws
/// ValidationError on an out-of-range index.
OrbitDatum levi_data(const RootSystem& rs, const std::vector<int>& I);

/// The full orbit lattice.  Throws ValidationError for rank > 20 (2^l nodes).
OrbitPoset orbit_poset(const RootSystem& rs);

}  // namespace wonderful
