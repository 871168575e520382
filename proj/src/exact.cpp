#include "wonderful/exact.hpp"

#include <ostream>

#include "wonderful/errors.hpp"

namespace wonderful {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Int det_integer(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_integer: matrix not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  using Wide = __int128;
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = m(i, j);

  int sign = 1;
  Wide prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  Wide d = a[n - 1][n - 1] * sign;
  if (d > static_cast<Wide>(INT64_MAX) || d < static_cast<Wide>(INT64_MIN))
    throw std::overflow_error("det_integer: 64-bit overflow");
  return static_cast<Int>(d);
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rowReduce(RatMat& a) {
  std::vector<int> pivots;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    Rational inv = Rational(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rank_rational(RatMat a) { return static_cast<int>(rowReduce(a).size()); }

RatMat kernel_basis(const RatMat& a) {
  RatMat e = a;
  std::vector<int> pivots = rowReduce(e);
  const Eigen::Index cols = a.cols();
  std::vector<bool> isPivot(cols, false);
  for (int c : pivots) isPivot[c] = true;

  std::vector<int> freeCols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!isPivot[c]) freeCols.push_back(static_cast<int>(c));

  RatMat basis = RatMat::Constant(cols, static_cast<Eigen::Index>(freeCols.size()), Rational(0));
  for (std::size_t k = 0; k < freeCols.size(); ++k) {
    int f = freeCols[k];
    basis(f, static_cast<Eigen::Index>(k)) = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], static_cast<Eigen::Index>(k)) = -e(static_cast<Eigen::Index>(r), f);
  }
  return basis;
}

RatMat invert_rational(const RatMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("invert_rational: matrix not square");
  const Eigen::Index n = a.rows();
  RatMat aug = RatMat::Constant(n, 2 * n, Rational(0));
  aug.block(0, 0, n, n) = a;
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = Rational(1);
  std::vector<int> pivots = rowReduce(aug);
  // A singular left block pushes pivots into the identity half.
  Eigen::Index leftPivots = 0;
  for (int p : pivots)
    if (p < n) ++leftPivots;
  if (leftPivots != n) throw InvariantViolation("invert_rational: singular matrix");
  return aug.block(0, n, n, n);
}

IntMat invert_unimodular(const IntMat& m) {
  RatMat inv = invert_rational(toRational(m));
  IntMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!inv(i, j).is_integer())
        throw InvariantViolation("invert_unimodular: inverse is not integral");
      out(i, j) = inv(i, j).num();
    }
  return out;
}

bool solve_exact(const RatMat& a, const RatVec& b, RatVec& x) {
  const Eigen::Index cols = a.cols();
  RatMat aug = RatMat::Constant(a.rows(), cols + 1, Rational(0));
  aug.block(0, 0, a.rows(), cols) = a;
  aug.col(cols) = b;
  std::vector<int> pivots = rowReduce(aug);
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return false;  // inconsistent
  x = RatVec::Constant(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), cols);
  return true;
}

SpanChecker::SpanChecker(const RatMat& columns) {
  echelon_ = columns.transpose();
  pivotCol_ = rowReduce(echelon_);
  rank_ = static_cast<int>(pivotCol_.size());
}

bool SpanChecker::contains(const RatVec& v) const {
  RatVec w = v;
  for (int r = 0; r < rank_; ++r) {
    Rational f = w(pivotCol_[static_cast<std::size_t>(r)]);
    if (f.is_zero()) continue;
    for (Eigen::Index j = 0; j < w.size(); ++j) w(j) = w(j) - f * echelon_(r, j);
  }
  for (Eigen::Index j = 0; j < w.size(); ++j)
    if (!w(j).is_zero()) return false;
  return true;
}

}  // namespace wonderful
