#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wonderful/toricfan.hpp"

namespace wonderful {

/// Satake diagram: a Cartan type, a black (imaginary) subset of simple-root
/// indices, and an arrow involution on the white indices.
struct SatakeDiagram {
  CartanType ctype;
  std::vector<int> black;                     // 1-based, sorted
  std::vector<std::pair<int, int>> arrows;    // 1-based, a < b, sorted
};

/// Parse `TYPE;black=i,j,...;arrows=(a,b)(c,d)...` (black/arrows optional).
/// Structural validation only; semantic validity is gated by
/// build_involution.
SatakeDiagram parse_satake(const std::string& text);

/// Involution of the root lattice adapted to the standard positive system.
struct Involution {
  IntMat matrix;           // l x l, acts on simple-root coordinates
  std::vector<int> black;  // fixed simple roots, 1-based, sorted
  std::vector<int> tau;    // 1-based involution on simple indices (identity on blacks)
};

/// Synthesize sigma = -w_S . tau-hat, where w_S is the longest element of the
/// black subsystem's Weyl group and tau-hat permutes simples by the arrows on
/// whites and by the opposition involution of the black subsystem on blacks.
/// Every Involution invariant is verified post-construction; a failure
/// rejects the diagram with the failing check named.
Involution build_involution(const RootSystem& rs, const SatakeDiagram& sd);

/// Validate a raw matrix as an adapted involution (same checks as
/// build_involution, with black set and arrow pairing derived from the
/// matrix).
Involution make_involution(const RootSystem& rs, const IntMat& matrix);

/// Roots fixed by sigma.  Hard postcondition: the fixed set equals the roots
/// supported on the black simples; anything else aborts.
std::vector<RootVector> imaginary_roots(const RootSystem& rs, const Involution& sigma);

/// One restricted root, written in the basis of the simple restricted roots.
struct RestrictedRoot {
  IntVec coords;
  int multiplicity = 0;
};

/// Restricted root system of (rs, sigma): images (a - sigma a)/2 of the
/// non-imaginary roots, with fiber-count multiplicities.  Positives first by
/// (height, lexicographic), mirrored negatives after.
struct RestrictedRootSystem {
  int splitRank = 0;
  std::vector<int> simpleSources;      // 1-based white representative per tau-orbit
  std::vector<RatVec> simplesAmbient;  // simple restricted roots in ambient coords
  std::vector<RestrictedRoot> roots;
  bool reduced = true;
  RatMat gram;  // invariant form on the restricted space in the simple basis
};

RestrictedRootSystem restricted_roots(const RootSystem& rs, const Involution& sigma);

/// Reflection closure of the indivisible restricted roots, acting on the
/// restricted space by integer matrices in the simple restricted basis.
/// Order: identity first, then lexicographic by matrix entries.
struct LittleWeylGroup {
  std::vector<IntMat> elements;
  std::size_t order() const { return elements.size(); }
};

LittleWeylGroup little_weyl_group(const RestrictedRootSystem& rrs, std::size_t cap = 1000000);

/// Orbit-closure count 2^r of the symmetric-space compactification, the
/// Boolean closure lattice on subsets of {1..r}, and the restricted chamber
/// fan over the little Weyl group.
struct SymmetricOrbits {
  int splitRank = 0;
  Int orbitCount = 0;
  std::vector<std::vector<int>> subsets;           // (size, lex)-sorted
  std::vector<std::pair<int, int>> hasse;          // covering pairs
  Fan restrictedFan;
};

SymmetricOrbits symmetric_orbit_count(const RestrictedRootSystem& rrs,
                                      const LittleWeylGroup& littleWeyl);
SymmetricOrbits symmetric_orbit_count(const RestrictedRootSystem& rrs);

}  // namespace wonderful
