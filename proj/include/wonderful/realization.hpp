#pragma once

#include <string>
#include <vector>

#include "wonderful/exact.hpp"
#include "wonderful/rootsys.hpp"

namespace wonderful {

/// Exact Chevalley basis of sl_2 or sl_3 (types A1 and A2): one generator
/// e_a per root (canonical root order) followed by the simple coroots
/// h_1..h_l.  Structure constants are read off from honest matrix
/// commutators in the defining representation, so antisymmetry, Jacobi and
/// the adjoint-homomorphism identities hold by construction; they are still
/// verified at build time and any failure aborts.
class ChevalleyAlgebra {
public:
  static ChevalleyAlgebra build(const RootSystem& rs);

  const RootSystem& rootSystem() const { return *rs_; }
  int dim() const { return dim_; }

  /// Index layout: [0, 2N) roots in canonical order, [2N, 2N+l) coroots.
  bool isRootElement(int k) const { return k < rs_->rootCount(); }
  RootVector weight(int k) const;

  /// Bracket of two basis elements, as coordinates in the basis.
  const IntVec& bracket(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                  static_cast<std::size_t>(j)];
  }
  /// Bracket extended bilinearly to coordinate vectors.
  IntVec bracket(const IntVec& x, const IntVec& y) const;

  /// Matrix of ad(basis element k) in the Chevalley basis.
  const IntMat& adjoint(int k) const { return ad_[static_cast<std::size_t>(k)]; }

private:
  ChevalleyAlgebra() = default;

  const RootSystem* rs_ = nullptr;
  int dim_ = 0;
  std::vector<IntVec> table_;
  std::vector<IntMat> ad_;
};

/// Projective equality of nonzero matrices: A ~ B iff A = cB, tested by
/// cross-multiplication (no normalization).
bool projectively_equal(const RatMat& a, const RatMat& b);

/// Diagonal idempotent projecting onto the span of the basis vectors whose
/// weight differs from the highest root by a nonnegative combination of the
/// simple roots NOT indexed by I.  I = {} gives the identity.
RatMat z_matrix(const ChevalleyAlgebra& alg, const std::vector<int>& I);

/// Dimension of { (x, y) : ad(x) P - P ad(y) is a multiple of P } computed
/// as an exact kernel.  Must equal dimG + |I| (the closed-form count from
/// the orbit module); a mismatch aborts.
Int stabilizer_lie_dim(const ChevalleyAlgebra& alg, const std::vector<int>& I);

/// The boundary subalgebra attached to I inside g + g, spanned by
/// (e_b, 0) and (0, e_{-b}) over the unipotent-radical roots b together with
/// the diagonal copy of the Levi.  Bracket closure and dimension dimG are
/// verified; failure aborts.
struct SubalgebraMI {
  std::vector<int> I;
  RatMat basis;  // 2*dimG x dimG, columns
};
SubalgebraMI build_mI(const ChevalleyAlgebra& alg, const std::vector<int>& I);

/// One verification line of the degeneration report.
struct RealizationCheck {
  std::string claim;
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct PlueckerReport {
  std::vector<RealizationCheck> checks;
  bool allPass = true;
};

/// Expand the one-parameter sweep of the diagonal subalgebra's top wedge
/// exactly as a Laurent polynomial in z and verify the degeneration data:
/// the top z-degree equals the positive-root height sum, it is attained by
/// the unique all-positive choice, and the leading coefficient is the wedge
/// of the diagonal Cartan with the two opposite unipotent radicals.
/// Exponential in |roots|; intended for A1 (and A2 behind an opt-in flag).
PlueckerReport pluecker_limit(const ChevalleyAlgebra& alg);

}  // namespace wonderful
