#pragma once

#include <vector>

#include "wonderful/polynomial.hpp"
#include "wonderful/weyl.hpp"

namespace wonderful {

/// Additive character of the doubled torus: value on (t1, t2) is
/// first(t1) + second(t2) in additive notation.
struct TangentWeight {
  RootVector first;
  RootVector second;
};

/// The fixed one-parameter direction used for the cell decomposition:
/// H pairs to 1 with every simple root, and n exceeds every root height, so
/// the generator (nH, -H) has no zero eigenvalue at any fixed point.
struct OneParamChoice {
  Coweight H;
  Int n = 0;
};

struct FixedPointDatum {
  std::size_t y = 0;
  std::size_t w = 0;
  std::vector<TangentWeight> weights;
  Int cellDim = 0;
};

/// The dim(G) tangent weights at the fixed point indexed by (y, w):
/// (-y a, 0) and (0, w a) over positive roots a, then (-y a_i, w a_i) over
/// simple roots, each family in canonical root order.
std::vector<TangentWeight> tangent_weights(const RootSystem& rs, const WeylGroup& W,
                                           std::size_t y, std::size_t w);

/// H = sum of fundamental coweights, n = 1 + max root height.  Verifies that
/// the induced functional n*height(first) - height(second) is nonzero on
/// every tangent weight at every fixed point; the check factorizes over
/// single group elements (see the implementation) so it stays cheap for
/// large groups.  A failure is an InvariantViolation.
OneParamChoice choose_one_param(const RootSystem& rs, const WeylGroup& W);

/// Number of tangent weights with positive pairing against the one-parameter
/// direction.  Must equal l(y) + l(w) + descents(y); a mismatch aborts with
/// InvariantViolation (this equality is the module's self-oracle).
Int cell_dimension(const RootSystem& rs, const WeylGroup& W, const OneParamChoice& choice,
                   std::size_t y, std::size_t w);

/// Poincare polynomial of the compactification:
/// sum over pairs (y, w) of t^{2(l(y)+l(w)+descents(y))}.  Computed both as
/// the direct double sum and as the product A(t^2) * B(t^2) with
/// A = sum_y t^{l(y)+descents(y)}, B = sum_w t^{l(w)}; the two routes must
/// agree coefficientwise.
Polynomial poincare_polynomial_X(const RootSystem& rs, const WeylGroup& W);

/// The y-side factor A(t) = sum_y t^{l(y)+descents(y)}.
Polynomial cell_statistic_polynomial(const WeylGroup& W);

/// All |W|^2 fixed points with weights and cell dimensions, ordered by
/// (y index, w index).  Intended for small ranks; the count is |W|^2.
std::vector<FixedPointDatum> fixed_point_data(const RootSystem& rs, const WeylGroup& W);

}  // namespace wonderful
