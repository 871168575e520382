#pragma once

#include <cstdint>
#include <vector>

#include "wonderful/weyl.hpp"

namespace wonderful {

/// One maximal chamber cone.  Halfspace data lives in the character lattice
/// (row i = image of the i-th simple functional), generator data in the dual
/// cocharacter lattice (column j = image of the j-th fundamental generator).
struct Cone {
  int wIndex = 0;
  IntMat halfspaces;  // l x l, rows
  IntMat generators;  // l x l, columns
  std::vector<int> rayIndices;  // into Fan::rays, sorted
};

/// Chamber fan: one maximal cone per group element, rays deduplicated as
/// primitive integer vectors, sorted lexicographically.
struct Fan {
  int dim = 0;
  std::vector<IntVec> rays;
  std::vector<Cone> cones;
};

/// Core builder shared by the Weyl-chamber fan and the restricted chamber
/// fan: one cone per character-side matrix M (halfspaces = rows of M^T,
/// generators = columns of (M^T)^{-1}).
Fan build_chamber_fan(const std::vector<IntMat>& characterMatrices);

/// The Weyl chamber fan: cone_w has halfspaces {w a_i} and generators
/// {w omega_j^vee}.
Fan build_fan(const RootSystem& rs, const WeylGroup& W);

/// True iff every maximal cone has |det(generators)| = 1 over the
/// cocharacter lattice.
bool check_smooth(const Fan& fan);

/// Seeded sampling certificate of completeness: every accepted sample point
/// must lie weakly in at least one cone and strictly inside exactly one;
/// points that hit a wall of a containing cone are re-drawn (with a retry
/// cap).  Deterministic for a fixed seed.  Completeness is certified by this
/// sampling contract together with the exact facet pairing below, not by an
/// exact polyhedral volume computation.
bool check_complete(const Fan& fan, int samples, std::uint64_t seed);

/// Exact facet pairing: every facet (a cone with one halfspace dropped) must
/// be shared by exactly two maximal cones.
bool check_walls_paired(const Fan& fan);

}  // namespace wonderful
