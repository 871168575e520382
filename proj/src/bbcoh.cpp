#include "wonderful/bbcoh.hpp"

#include <string>

#include "wonderful/errors.hpp"

namespace wonderful {

namespace {

std::string word_str(const WeylElement& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.word.size(); ++k) {
    if (k) s += " ";
    s += std::to_string(static_cast<int>(w.word[k]) + 1);
  }
  return s + "]";
}

}  // namespace

std::vector<TangentWeight> tangent_weights(const RootSystem& rs, const WeylGroup& W,
                                           std::size_t y, std::size_t w) {
  const WeylElement& ey = W[y];
  const WeylElement& ew = W[w];
  const int l = rs.rank();
  const Int n = rs.positiveCount();
  std::vector<TangentWeight> out;
  out.reserve(static_cast<std::size_t>(rs.dimG()));
  RootVector zero(IntVec::Zero(l));
  for (Int a = 0; a < n; ++a)
    out.push_back({-rs.root(W.actIndex(ey, static_cast<int>(a))), zero});
  for (Int a = 0; a < n; ++a)
    out.push_back({zero, rs.root(W.actIndex(ew, static_cast<int>(a)))});
  for (int i = 0; i < l; ++i) {
    int s = rs.simpleRootIndex(i);
    out.push_back({-rs.root(W.actIndex(ey, s)), rs.root(W.actIndex(ew, s))});
  }
  return out;
}

OneParamChoice choose_one_param(const RootSystem& rs, const WeylGroup& W) {
  OneParamChoice choice;
  choice.H = Coweight(RatVec::Constant(rs.rank(), Rational(1)));
  choice.n = 1 + rs.maxHeight();

  // The eigenvalue of (nH, -H) at the fixed point (y, w) is
  //   -n*ht(y a)               on the first weight family,
  //   -ht(w a)                 on the second,
  //   -(n*ht(y a_i) + ht(w a_i)) on the third.
  // Nonvanishing over all |W|^2 points therefore reduces to: ht(u a) != 0 and
  // n > |ht(u a)| for every single element u and root a.
  for (std::size_t u = 0; u < W.size(); ++u) {
    for (int r = 0; r < rs.rootCount(); ++r) {
      Int h = height(rs.root(W.actIndex(W[u], r)));
      if (h == 0)
        throw InvariantViolation("choose_one_param: zero-height root image at element " +
                                 word_str(W[u]));
      if (h >= choice.n || -h >= choice.n)
        throw InvariantViolation("choose_one_param: n=" + std::to_string(choice.n) +
                                 " does not dominate height " + std::to_string(h));
    }
  }
  return choice;
}

Int cell_dimension(const RootSystem& rs, const WeylGroup& W, const OneParamChoice& choice,
                   std::size_t y, std::size_t w) {
  Int count = 0;
  for (const TangentWeight& tw : tangent_weights(rs, W, y, w)) {
    Int eig = choice.n * height(tw.first) - height(tw.second);
    if (eig == 0)
      throw InvariantViolation("cell_dimension: zero eigenvalue at (y,w) = (" + word_str(W[y]) +
                               ", " + word_str(W[w]) + ")");
    if (eig > 0) ++count;
  }
  Int expected = W[y].length + W[w].length + W[y].descents;
  if (count != expected)
    throw InvariantViolation("cell_dimension: eigenvalue count " + std::to_string(count) +
                             " != l(y)+l(w)+L(y) = " + std::to_string(expected) + " at (y,w) = (" +
                             word_str(W[y]) + ", " + word_str(W[w]) + ")");
  return count;
}

Polynomial cell_statistic_polynomial(const WeylGroup& W) {
  Polynomial a;
  for (std::size_t y = 0; y < W.size(); ++y)
    a.add_term(static_cast<std::size_t>(W[y].length + W[y].descents), 1);
  return a;
}

Polynomial poincare_polynomial_X(const RootSystem& rs, const WeylGroup& W) {
  const std::size_t order = W.size();
  std::vector<Int> degY(order), degW(order);
  for (std::size_t i = 0; i < order; ++i) {
    degY[i] = W[i].length + W[i].descents;
    degW[i] = W[i].length;
  }

  // Route 1: literal double sum over all |W|^2 fixed points.
  std::vector<Int> hist(static_cast<std::size_t>(2 * rs.dimG()) + 1, 0);
  for (std::size_t y = 0; y < order; ++y) {
    const Int off = degY[y];
    for (std::size_t w = 0; w < order; ++w)
      ++hist[static_cast<std::size_t>(2 * (off + degW[w]))];
  }
  Polynomial direct;
  for (std::size_t d = 0; d < hist.size(); ++d)
    if (hist[d] != 0) direct.add_term(d, hist[d]);

  // Route 2: product of the one-variable censuses.
  Polynomial a = cell_statistic_polynomial(W);
  Polynomial b = W.poincare();
  Polynomial product = a.stretch(2) * b.stretch(2);

  if (direct != product)
    throw InvariantViolation("poincare_polynomial_X: double sum and product form disagree");
  return direct;
}

std::vector<FixedPointDatum> fixed_point_data(const RootSystem& rs, const WeylGroup& W) {
  OneParamChoice choice = choose_one_param(rs, W);
  std::vector<FixedPointDatum> out;
  out.reserve(W.size() * W.size());
  for (std::size_t y = 0; y < W.size(); ++y)
    for (std::size_t w = 0; w < W.size(); ++w) {
      FixedPointDatum d;
      d.y = y;
      d.w = w;
      d.weights = tangent_weights(rs, W, y, w);
      d.cellDim = cell_dimension(rs, W, choice, y, w);
      out.push_back(std::move(d));
    }
  return out;
}

}  // namespace wonderful
