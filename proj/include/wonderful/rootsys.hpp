#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wonderful/rational.hpp"

namespace wonderful {

struct CartanFactor {
  char family = 'A';  // one of A B C D E F G
  int rank = 1;
};

/// A product of simple Cartan types, e.g. "A2", "G2", "B3xA1".
struct CartanType {
  std::vector<CartanFactor> factors;

  int rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.rank;
    return r;
  }
  std::string name() const;
};

/// Parse the grammar `A2`, `G2`, `A1xA1`, `B3xA1` (case-insensitive, `x`
/// separates factors).  Rejects invalid family/rank combinations, naming the
/// offending factor.
CartanType parse_cartan_type(std::string_view text);

/// Lattice vector written in the simple-root basis (alpha_1..alpha_l).
struct RootVector {
  IntVec c;

  RootVector() = default;
  explicit RootVector(IntVec coords) : c(std::move(coords)) {}

  friend RootVector operator+(const RootVector& a, const RootVector& b) {
    return RootVector(a.c + b.c);
  }
  friend RootVector operator-(const RootVector& a, const RootVector& b) {
    return RootVector(a.c - b.c);
  }
  RootVector operator-() const { return RootVector(-c); }
  friend bool operator==(const RootVector& a, const RootVector& b) {
    return exact_eq(a.c, b.c);
  }
  friend bool operator!=(const RootVector& a, const RootVector& b) { return !(a == b); }
};

/// Vector written in the fundamental-coweight basis (the basis dual to the
/// simple roots); rational coordinates.  Keeping character and cocharacter
/// coordinates in distinct types makes mixing them a compile error.
struct Coweight {
  RatVec c;

  Coweight() = default;
  explicit Coweight(RatVec coords) : c(std::move(coords)) {}
};

/// Sum of simple-root coordinates.
inline Int height(const RootVector& v) { return v.c.sum(); }

/// Dominance order of the root lattice: mu <= lam iff lam - mu has all
/// coordinates >= 0.
inline bool dominance_leq(const RootVector& mu, const RootVector& lam) {
  IntVec d = lam.c - mu.c;
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (d(i) < 0) return false;
  return true;
}

/// Dual pairing of a root-lattice vector against a cocharacter vector; the
/// two bases are dual, so this is the plain dot product.
inline Rational pairing(const RootVector& root, const Coweight& cw) {
  Rational s(0);
  for (Eigen::Index i = 0; i < root.c.size(); ++i)
    s += Rational(root.c(i)) * cw.c(i);
  return s;
}

/// Finite crystallographic root system with exact integer coordinates.
/// Immutable after construction.  Roots are ordered positives first by
/// (height, lexicographic); roots[N + i] = -roots[i].
class RootSystem {
public:
  static RootSystem build(const CartanType& ctype);

  const CartanType& ctype() const { return ctype_; }
  int rank() const { return rank_; }
  Int positiveCount() const { return n_; }
  Int dimG() const { return rank_ + 2 * n_; }
  const IntMat& cartan() const { return cartan_; }

  const std::vector<RootVector>& roots() const { return roots_; }
  const RootVector& root(int idx) const { return roots_[static_cast<std::size_t>(idx)]; }
  int rootCount() const { return static_cast<int>(roots_.size()); }

  /// Index of v in the root list, or -1 if v is not a root.
  int rootIndex(const RootVector& v) const;
  bool isRoot(const RootVector& v) const { return rootIndex(v) >= 0; }

  int negateIndex(int idx) const {
    return idx < static_cast<int>(n_) ? idx + static_cast<int>(n_) : idx - static_cast<int>(n_);
  }

  /// Index of alpha_i (0-based i) in the root list.
  int simpleRootIndex(int i) const { return simpleIdx_[static_cast<std::size_t>(i)]; }
  RootVector simpleRoot(int i) const;

  /// Highest root of each irreducible factor.
  const std::vector<RootVector>& highestRoots() const { return highest_; }
  Int maxHeight() const { return maxHeight_; }

  /// Which factor the coordinate (0-based) belongs to.
  int factorOfCoordinate(int i) const { return factorOf_[static_cast<std::size_t>(i)]; }

  /// s_i applied to an arbitrary lattice vector:  v - <v, alpha_i^vee> alpha_i.
  RootVector simpleReflect(int i, const RootVector& v) const;

  /// Coordinates of the fundamental coweight omega_i^vee (a standard basis
  /// vector in this basis).
  Coweight fundamentalCoweight(int i) const;

  /// Symmetric invariant form on the root lattice, normalized so short roots
  /// in each factor have squared length 2.  Gram(i,j) = (alpha_i, alpha_j).
  RatMat invariantGram() const;

private:
  RootSystem() = default;

  CartanType ctype_;
  int rank_ = 0;
  Int n_ = 0;  // number of positive roots
  IntMat cartan_;
  std::vector<RootVector> roots_;
  std::vector<int> simpleIdx_;
  std::vector<RootVector> highest_;
  Int maxHeight_ = 0;
  std::vector<int> factorOf_;
  std::map<std::vector<Int>, int> index_;
};

/// Build the full root system for a valid Cartan type.
inline RootSystem build_root_system(const CartanType& ctype) { return RootSystem::build(ctype); }

}  // namespace wonderful
