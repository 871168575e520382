#include "wonderful/realization.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "wonderful/errors.hpp"

namespace wonderful {

namespace {

// Node interval (i, j) of the type-A root e_i - e_j encoded by a coordinate
// vector with a consecutive run of +-1s.
std::pair<int, int> type_a_nodes(const IntVec& c) {
  int first = -1, last = -1;
  bool negative = false;
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    if (c(k) == 0) continue;
    if (first < 0) first = static_cast<int>(k);
    last = static_cast<int>(k);
    negative = c(k) < 0;
  }
  if (negative) return {last + 1, first};
  return {first, last + 1};
}

}  // namespace

ChevalleyAlgebra ChevalleyAlgebra::build(const RootSystem& rs) {
  if (rs.ctype().factors.size() != 1 || rs.ctype().factors[0].family != 'A' ||
      rs.ctype().factors[0].rank > 2)
    throw ValidationError("ChevalleyAlgebra: matrix realization supports types A1 and A2 only");

  ChevalleyAlgebra alg;
  alg.rs_ = &rs;
  const int l = rs.rank();
  const int m = rs.rootCount();
  alg.dim_ = m + l;
  const int n1 = l + 1;  // matrices act on C^{l+1}

  // Defining-representation matrices of the basis.
  std::vector<IntMat> rep(static_cast<std::size_t>(alg.dim_), IntMat::Zero(n1, n1));
  for (int r = 0; r < m; ++r) {
    auto [i, j] = type_a_nodes(rs.root(r).c);
    rep[static_cast<std::size_t>(r)](i, j) = 1;
  }
  for (int i = 0; i < l; ++i) {
    rep[static_cast<std::size_t>(m + i)](i, i) = 1;
    rep[static_cast<std::size_t>(m + i)](i + 1, i + 1) = -1;
  }

  // Decompose a traceless matrix in the basis: off-diagonal entries feed the
  // root generators, partial sums of the diagonal feed the coroots.
  auto decompose = [&](const IntMat& x) {
    IntVec coords = IntVec::Zero(alg.dim_);
    IntMat rem = x;
    for (int r = 0; r < m; ++r) {
      auto [i, j] = type_a_nodes(rs.root(r).c);
      coords(r) = rem(i, j);
      rem(i, j) = 0;
    }
    Int partial = 0;
    for (int i = 0; i < l; ++i) {
      partial += rem(i, i);
      coords(m + i) = partial;
    }
    // Reconstruction check guards the decomposition itself.
    IntMat back = IntMat::Zero(n1, n1);
    for (int k = 0; k < alg.dim_; ++k) back += coords(k) * rep[static_cast<std::size_t>(k)];
    if (!exact_eq(back, x))
      throw InvariantViolation("ChevalleyAlgebra: bracket left the integer span of the basis");
    return coords;
  };

  alg.table_.resize(static_cast<std::size_t>(alg.dim_) * static_cast<std::size_t>(alg.dim_));
  for (int i = 0; i < alg.dim_; ++i)
    for (int j = 0; j < alg.dim_; ++j) {
      IntMat br = rep[static_cast<std::size_t>(i)] * rep[static_cast<std::size_t>(j)] -
                  rep[static_cast<std::size_t>(j)] * rep[static_cast<std::size_t>(i)];
      alg.table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(alg.dim_) +
                 static_cast<std::size_t>(j)] = decompose(br);
    }

  alg.ad_.resize(static_cast<std::size_t>(alg.dim_));
  for (int k = 0; k < alg.dim_; ++k) {
    IntMat a(alg.dim_, alg.dim_);
    for (int j = 0; j < alg.dim_; ++j) a.col(j) = alg.bracket(k, j);
    alg.ad_[static_cast<std::size_t>(k)] = std::move(a);
  }

  // Build-time identities; any failure is a table bug, not user error.
  for (int i = 0; i < alg.dim_; ++i)
    for (int j = 0; j < alg.dim_; ++j)
      if (!exact_eq(IntVec(alg.bracket(i, j) + alg.bracket(j, i)), IntVec(IntVec::Zero(alg.dim_))))
        throw InvariantViolation("ChevalleyAlgebra: antisymmetry failed");
  for (int i = 0; i < alg.dim_; ++i)
    for (int j = 0; j < alg.dim_; ++j)
      for (int k = 0; k < alg.dim_; ++k) {
        IntVec s = alg.bracket(alg.bracket(i, j), IntVec(IntVec::Unit(alg.dim_, k))) +
                   alg.bracket(alg.bracket(j, k), IntVec(IntVec::Unit(alg.dim_, i))) +
                   alg.bracket(alg.bracket(k, i), IntVec(IntVec::Unit(alg.dim_, j)));
        if (!exact_eq(s, IntVec(IntVec::Zero(alg.dim_))))
          throw InvariantViolation("ChevalleyAlgebra: Jacobi identity failed");
      }
  for (int i = 0; i < alg.dim_; ++i)
    for (int j = 0; j < alg.dim_; ++j) {
      IntMat lhs = IntMat::Zero(alg.dim_, alg.dim_);
      const IntVec& b = alg.bracket(i, j);
      for (int k = 0; k < alg.dim_; ++k) lhs += b(k) * alg.adjoint(k);
      IntMat rhs = alg.adjoint(i) * alg.adjoint(j) - alg.adjoint(j) * alg.adjoint(i);
      if (!exact_eq(lhs, rhs))
        throw InvariantViolation("ChevalleyAlgebra: adjoint map is not a homomorphism");
    }
  // Regularity of the highest weight of the adjoint module.
  const RootVector& theta = rs.highestRoots()[0];
  for (int i = 0; i < l; ++i)
    if (rs.cartan().row(i).dot(theta.c) <= 0)
      throw InvariantViolation("ChevalleyAlgebra: highest root is not regular");
  return alg;
}

RootVector ChevalleyAlgebra::weight(int k) const {
  if (isRootElement(k)) return rs_->root(k);
  return RootVector(IntVec::Zero(rs_->rank()));
}

IntVec ChevalleyAlgebra::bracket(const IntVec& x, const IntVec& y) const {
  IntVec out = IntVec::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i) == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y(j) == 0) continue;
      out += x(i) * y(j) * bracket(i, j);
    }
  }
  return out;
}

bool projectively_equal(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  // Locate the first nonzero entry of a; the ratio there fixes the scalar.
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero() && b(i, j).is_zero()) continue;
      if (a(i, j).is_zero() || b(i, j).is_zero()) return false;
      // Cross-multiplication: a = c b with c = a(i,j)/b(i,j).
      RatMat lhs = a * b(i, j);
      RatMat rhs = b * a(i, j);
      return exact_eq(lhs, rhs);
    }
  return true;  // both zero
}

namespace {

std::vector<int> checked_subset(const RootSystem& rs, const std::vector<int>& I) {
  std::vector<int> s;
  for (int i : I) {
    if (i < 1 || i > rs.rank())
      throw ValidationError("subset index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(rs.rank()));
    s.push_back(i);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string subset_str(const std::vector<int>& I) {
  std::string s = "{";
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(I[k]);
  }
  return s + "}";
}

}  // namespace

RatMat z_matrix(const ChevalleyAlgebra& alg, const std::vector<int>& I) {
  const RootSystem& rs = alg.rootSystem();
  std::vector<int> s = checked_subset(rs, I);
  const RootVector& theta = rs.highestRoots()[0];
  RatMat p = RatMat::Constant(alg.dim(), alg.dim(), Rational(0));
  for (int k = 0; k < alg.dim(); ++k) {
    IntVec diff = theta.c - alg.weight(k).c;
    bool inCone = true;
    for (int j = 0; j < rs.rank(); ++j) {
      if (diff(j) < 0) { inCone = false; break; }
      if (diff(j) > 0 && std::binary_search(s.begin(), s.end(), j + 1)) { inCone = false; break; }
    }
    if (inCone) p(k, k) = Rational(1);
  }
  return p;
}

Int stabilizer_lie_dim(const ChevalleyAlgebra& alg, const std::vector<int>& I) {
  std::vector<int> s = checked_subset(alg.rootSystem(), I);
  const int d = alg.dim();
  RatMat p = z_matrix(alg, s);

  // Columns: ad(x_k) P for the left copy, -P ad(y_k) for the right copy, -P
  // for the scalar direction; rows: entries of End(V).
  RatMat sys = RatMat::Constant(static_cast<Eigen::Index>(d) * d, 2 * d + 1, Rational(0));
  for (int k = 0; k < d; ++k) {
    RatMat left = toRational(alg.adjoint(k)) * p;
    RatMat right = p * toRational(alg.adjoint(k));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        sys(static_cast<Eigen::Index>(i) * d + j, k) = left(i, j);
        sys(static_cast<Eigen::Index>(i) * d + j, d + k) = -right(i, j);
      }
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      sys(static_cast<Eigen::Index>(i) * d + j, 2 * d) = -p(i, j);

  Int kernelDim = 2 * d + 1 - rank_rational(sys);
  Int expected = alg.rootSystem().dimG() + static_cast<Int>(s.size());
  if (kernelDim != expected)
    throw InvariantViolation("stabilizer_lie_dim: kernel dimension " + std::to_string(kernelDim) +
                             " != dimG + |I| = " + std::to_string(expected) + " for I = " +
                             subset_str(s));
  return kernelDim;
}

SubalgebraMI build_mI(const ChevalleyAlgebra& alg, const std::vector<int>& I) {
  const RootSystem& rs = alg.rootSystem();
  std::vector<int> s = checked_subset(rs, I);
  const int d = alg.dim();
  const int l = rs.rank();
  const Int n = rs.positiveCount();

  auto inPhiI = [&](const IntVec& c) {
    for (int i : s)
      if (c(i - 1) != 0) return false;
    return true;
  };

  std::vector<IntVec> cols;
  // (e_b, 0) and (0, e_{-b}) for positive roots b outside Phi_I.
  for (Int b = 0; b < n; ++b) {
    if (inPhiI(rs.root(static_cast<int>(b)).c)) continue;
    IntVec v = IntVec::Zero(2 * d);
    v(static_cast<int>(b)) = 1;
    cols.push_back(v);
    IntVec w = IntVec::Zero(2 * d);
    w(d + rs.negateIndex(static_cast<int>(b))) = 1;
    cols.push_back(w);
  }
  // Diagonal copy of the Levi: coroots and the Phi_I root generators.
  for (int i = 0; i < l; ++i) {
    IntVec v = IntVec::Zero(2 * d);
    v(rs.rootCount() + i) = 1;
    v(d + rs.rootCount() + i) = 1;
    cols.push_back(v);
  }
  for (int r = 0; r < rs.rootCount(); ++r) {
    if (!inPhiI(rs.root(r).c)) continue;
    IntVec v = IntVec::Zero(2 * d);
    v(r) = 1;
    v(d + r) = 1;
    cols.push_back(v);
  }

  SubalgebraMI mi;
  mi.I = s;
  mi.basis = RatMat::Constant(2 * d, static_cast<Eigen::Index>(cols.size()), Rational(0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    mi.basis.col(static_cast<Eigen::Index>(c)) = toRational(cols[c]);

  if (static_cast<Int>(cols.size()) != rs.dimG())
    throw InvariantViolation("build_mI: basis size " + std::to_string(cols.size()) +
                             " != dimG for I = " + subset_str(s));
  SpanChecker span(mi.basis);
  if (span.rank() != rs.dimG())
    throw InvariantViolation("build_mI: basis is not independent for I = " + subset_str(s));

  // Componentwise bracket closure over all basis pairs.
  for (std::size_t aIdx = 0; aIdx < cols.size(); ++aIdx)
    for (std::size_t bIdx = 0; bIdx < cols.size(); ++bIdx) {
      IntVec left = alg.bracket(IntVec(cols[aIdx].head(d)), IntVec(cols[bIdx].head(d)));
      IntVec right = alg.bracket(IntVec(cols[aIdx].tail(d)), IntVec(cols[bIdx].tail(d)));
      IntVec both(2 * d);
      both << left, right;
      if (!span.contains(toRational(both)))
        throw InvariantViolation("build_mI: bracket escaped the span for I = " + subset_str(s));
    }
  return mi;
}

namespace {

// Sparse exact vector in a wedge power: sorted index tuple -> coefficient.
using WedgeVec = std::map<std::vector<int>, Int>;

void add_wedge(WedgeVec& acc, std::vector<int> idx, Int coeff) {
  // Insertion sort with sign tracking; repeated indices kill the term.
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return;
  acc[idx] += sign * coeff;
  if (acc[idx] == 0) acc.erase(idx);
}

std::string wedge_str(const WedgeVec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << c << "*e[";
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) os << ",";
      os << idx[k];
    }
    os << "]";
  }
  return os.str();
}

bool wedge_proportional(const WedgeVec& a, const WedgeVec& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  if (a.size() != b.size()) return false;
  auto ia = a.begin();
  auto ib = b.begin();
  Int pa = ia->second, pb = ib->second;
  for (; ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (ia->second * pb != ib->second * pa) return false;
  }
  return true;
}

}  // namespace

PlueckerReport pluecker_limit(const ChevalleyAlgebra& alg) {
  const RootSystem& rs = alg.rootSystem();
  const int d = alg.dim();
  const Int n = rs.positiveCount();
  const int m = rs.rootCount();
  const int l = rs.rank();

  PlueckerReport report;
  auto check = [&](const std::string& claim, const std::string& computed,
                   const std::string& expected) {
    RealizationCheck c{claim, computed, expected, computed == expected};
    report.allPass = report.allPass && c.pass;
    report.checks.push_back(std::move(c));
  };

  // Basis of g + g: index p = left copy of basis element p, d + p = right copy.
  // Wedge factors of the diagonal subalgebra's top form, one per root
  // (e_a, e_a) plus the l diagonal Cartan vectors (h_i, h_i).
  //
  // Sweeping the left factor by the one-parameter subgroup scales the left
  // half of the root factor by z^{ht(root)}; expanding every root factor into
  // left + right choices indexes the terms by subsets A of the root set.
  std::map<Int, WedgeVec> laurent;        // z-degree -> wedge coefficient
  std::map<Int, Int> subsetCountByDegree; // z-degree -> number of subsets A
  Int topDegree = 0;
  std::vector<bool> topChoice;            // the A attaining the top degree
  bool topUnique = true;
  bool first = true;

  const std::uint64_t total = 1ull << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Int deg = 0;
    for (int r = 0; r < m; ++r)
      if (mask & (1ull << r)) deg += height(rs.root(r));
    ++subsetCountByDegree[deg];

    // Expand the term: fixed left/right choices on root factors, the l
    // diagonal Cartan factors each split into left + right.
    WedgeVec term;
    std::vector<int> base;
    base.reserve(static_cast<std::size_t>(rs.dimG()));
    for (int r = 0; r < m; ++r)
      base.push_back((mask & (1ull << r)) ? r : d + r);
    for (std::uint32_t hmask = 0; hmask < (1u << l); ++hmask) {
      std::vector<int> idx = base;
      for (int i = 0; i < l; ++i)
        idx.push_back((hmask & (1u << i)) ? (m + i) : (d + m + i));
      add_wedge(term, std::move(idx), 1);
    }
    if (term.empty()) continue;

    WedgeVec& slot = laurent[deg];
    for (const auto& [idx, c] : term) {
      slot[idx] += c;
      if (slot[idx] == 0) slot.erase(idx);
    }

    if (first || deg > topDegree) {
      first = false;
      topUnique = true;
      topDegree = deg;
      topChoice.assign(static_cast<std::size_t>(m), false);
      for (int r = 0; r < m; ++r) topChoice[static_cast<std::size_t>(r)] = (mask & (1ull << r)) != 0;
    } else if (deg == topDegree) {
      topUnique = false;
    }
  }

  Int heightSum = 0;
  for (Int r = 0; r < n; ++r) heightSum += height(rs.root(static_cast<int>(r)));

  if (!topUnique)
    throw InvariantViolation("pluecker_limit: top z-degree attained by more than one subset");

  check("top z-degree equals the positive-root height sum", std::to_string(topDegree),
        std::to_string(heightSum));

  bool topIsPositives = true;
  for (int r = 0; r < m; ++r) {
    bool want = r < n;
    if (topChoice[static_cast<std::size_t>(r)] != want) { topIsPositives = false; break; }
  }
  check("unique top subset is the positive system", topIsPositives ? "yes" : "no", "yes");

  // Expected leading vector: left positives, diagonal Cartan, right negatives.
  WedgeVec expectedTop;
  {
    std::vector<int> base;
    for (Int r = 0; r < n; ++r) base.push_back(static_cast<int>(r));
    for (Int r = n; r < m; ++r) base.push_back(d + static_cast<int>(r));
    for (std::uint32_t hmask = 0; hmask < (1u << l); ++hmask) {
      std::vector<int> idx = base;
      for (int i = 0; i < l; ++i)
        idx.push_back((hmask & (1u << i)) ? (m + i) : (d + m + i));
      add_wedge(expectedTop, std::move(idx), 1);
    }
  }
  const WedgeVec& topCoeff = laurent[topDegree];
  check("leading coefficient is nonzero", topCoeff.empty() ? "zero" : "nonzero", "nonzero");
  check("leading coefficient equals the diagonal-Cartan wedge", wedge_str(topCoeff),
        wedge_str(expectedTop));
  check("leading line equals the limit line (projective)",
        wedge_proportional(topCoeff, expectedTop) ? "yes" : "no", "yes");

  // Weight of the leading coefficient: every monomial must sit in weight
  // (sum of positive roots, minus that sum).
  IntVec twoRho = IntVec::Zero(l);
  for (Int r = 0; r < n; ++r) twoRho += rs.root(static_cast<int>(r)).c;
  bool weightOk = true;
  for (const auto& [idx, c] : topCoeff) {
    IntVec first = IntVec::Zero(l), second = IntVec::Zero(l);
    for (int p : idx) {
      if (p < d) first += alg.weight(p).c;
      else second += alg.weight(p - d).c;
    }
    if (!exact_eq(first, twoRho) || !exact_eq(second, IntVec(-twoRho))) { weightOk = false; break; }
  }
  check("leading coefficient has weight (2rho, -2rho)", weightOk ? "yes" : "no", "yes");

  // Degree census over subsets, lowest to highest.
  {
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, count] : subsetCountByDegree) {
      for (Int k = 0; k < count; ++k) {
        if (!first) os << ",";
        first = false;
        os << deg;
      }
    }
    std::ostringstream expect;
    // Independent census: iterate heights h_1..h_m and convolve signs.
    std::map<Int, Int> conv{{0, 1}};
    for (int r = 0; r < m; ++r) {
      std::map<Int, Int> next;
      for (const auto& [deg, count] : conv) {
        next[deg] += count;
        next[deg + height(rs.root(r))] += count;
      }
      conv = std::move(next);
    }
    bool first2 = true;
    for (const auto& [deg, count] : conv) {
      for (Int k = 0; k < count; ++k) {
        if (!first2) expect << ",";
        first2 = false;
        expect << deg;
      }
    }
    check("subset degree census", os.str(), expect.str());
  }

  return report;
}

}  // namespace wonderful
