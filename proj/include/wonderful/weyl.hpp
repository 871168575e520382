#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "wonderful/polynomial.hpp"
#include "wonderful/rootsys.hpp"

namespace wonderful {

/// One Weyl group element, stored as the permutation it induces on the root
/// index list.  `word` is the breadth-first-search word (one reduced word;
/// word identity is not an API contract).
struct WeylElement {
  std::vector<std::int32_t> perm;  // image index of every root
  int length = 0;                  // #{positive roots sent negative}
  int descents = 0;                // #{simple roots sent negative}
  std::vector<std::int8_t> word;   // 0-based simple reflection indices
};

/// The full Weyl group, enumerated as the closure of the simple reflections.
/// Elements are ordered by (length, lexicographic word); index 0 is the
/// identity.  Immutable after enumeration.
class WeylGroup {
public:
  /// Breadth-first closure of the simple reflections.  Throws ValidationError
  /// if more than `cap` elements are found, naming the partial count.
  static WeylGroup enumerate(const RootSystem& rs, std::size_t cap = 1000000);

  const RootSystem& rootSystem() const { return *rs_; }
  std::size_t size() const { return elems_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elems_[i]; }
  std::size_t identityIndex() const { return 0; }
  std::size_t longestIndex() const { return longest_; }

  /// Image of a root under an element, at index level.
  int actIndex(const WeylElement& w, int rootIdx) const {
    return w.perm[static_cast<std::size_t>(rootIdx)];
  }

  /// Matrix of an element in the simple-root basis (an element of GL_l(Z)).
  IntMat matrix(const WeylElement& w) const;

  /// Matrix of the contragredient action on the cocharacter lattice in
  /// fundamental-coweight coordinates: the inverse transpose of matrix(w).
  IntMat coweightMatrix(const WeylElement& w) const;

  /// Index of the inverse element.
  std::size_t inverseIndex(std::size_t i) const;

  /// Index of the product w_i * w_j (w_j applied first).
  std::size_t composeIndex(std::size_t i, std::size_t j) const;

  Polynomial poincare() const;

private:
  const RootSystem* rs_ = nullptr;
  std::vector<WeylElement> elems_;
  std::size_t longest_ = 0;
  // Keyed by the images of the simple roots, which determine the element.
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> lookup_;

  std::uint64_t keyOf(const WeylElement& w) const;
  std::size_t findByPerm(const std::vector<std::int32_t>& perm) const;
};

/// Linear action of an element on an arbitrary lattice vector.
RootVector act_on_root(const RootSystem& rs, const WeylElement& w, const RootVector& v);

/// Length generating polynomial sum_w t^{l(w)}.
inline Polynomial poincare_polynomial_W(const WeylGroup& W) { return W.poincare(); }

}  // namespace wonderful
