#pragma once

#include <stdexcept>
#include <vector>

#include "wonderful/rational.hpp"

namespace wonderful {

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
/// Exact for every matrix this library produces; overflow throws.
Int det_integer(const IntMat& m);

/// Rank of a rational matrix by Gaussian elimination.
int rank_rational(RatMat a);

/// Columns spanning the kernel of a (returned as an n x k matrix, k = nullity).
RatMat kernel_basis(const RatMat& a);

/// Exact inverse; throws InvariantViolation if singular.
RatMat invert_rational(const RatMat& a);

/// Inverse of a matrix in GL(Z); throws InvariantViolation if the inverse is
/// not integral (i.e. det != +-1).
IntMat invert_unimodular(const IntMat& m);

/// Solve a x = b exactly.  Returns false if the system is inconsistent.
bool solve_exact(const RatMat& a, const RatVec& b, RatVec& x);

/// Row-echelon data reused for repeated span-membership tests against a
/// fixed set of column vectors.
class SpanChecker {
public:
  explicit SpanChecker(const RatMat& columns);
  int rank() const { return rank_; }
  bool contains(const RatVec& v) const;

private:
  RatMat echelon_;             // reduced rows of columns^T
  std::vector<int> pivotCol_;  // pivot column per echelon row
  int rank_ = 0;
};

}  // namespace wonderful
