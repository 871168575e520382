#include "wonderful/orbits.hpp"

#include <algorithm>
#include <map>

#include "wonderful/errors.hpp"

namespace wonderful {

OrbitDatum levi_data(const RootSystem& rs, const std::vector<int>& I) {
  const int l = rs.rank();
  std::vector<bool> inI(static_cast<std::size_t>(l) + 1, false);
  OrbitDatum d;
  for (int i : I) {
    if (i < 1 || i > l)
      throw ValidationError("subset index " + std::to_string(i) + " out of range 1.." + std::to_string(l));
    if (!inI[static_cast<std::size_t>(i)]) d.I.push_back(i);
    inI[static_cast<std::size_t>(i)] = true;
  }
  std::sort(d.I.begin(), d.I.end());
  for (int i = 1; i <= l; ++i)
    if (!inI[static_cast<std::size_t>(i)]) d.deltaI.push_back(i);

  // Phi_I = roots whose support avoids every coordinate indexed by I.
  for (int r = 0; r < rs.rootCount(); ++r) {
    const IntVec& c = rs.root(r).c;
    bool supported = true;
    for (int i : d.I)
      if (c(i - 1) != 0) { supported = false; break; }
    if (!supported) continue;
    ++d.phiICount;
    if (r < rs.positiveCount()) ++d.phiIPositive;
  }

  const Int sz = static_cast<Int>(d.I.size());
  d.dimLevi = l + d.phiICount;
  d.dimUnipotent = rs.positiveCount() - d.phiIPositive;
  d.dimParabolic = d.dimLevi + d.dimUnipotent;
  d.dimFlag = rs.dimG() - d.dimParabolic;
  d.dimFiber = d.dimLevi - sz;
  d.dimOrbit = rs.dimG() - sz;
  // Stabilizer of the base point: dim U_I + dim U_I^- + dim L_I + dim Z(L_I).
  d.dimStabilizer = 2 * d.dimUnipotent + d.dimLevi + sz;

  if (d.dimStabilizer != rs.dimG() + sz)
    throw InvariantViolation("levi_data: stabilizer dimension mismatch for subset of size " +
                             std::to_string(sz));
  if (d.dimOrbit != 2 * d.dimFlag + d.dimFiber)
    throw InvariantViolation("levi_data: fibration identity failed for subset of size " +
                             std::to_string(sz));
  return d;
}

OrbitPoset orbit_poset(const RootSystem& rs) {
  const int l = rs.rank();
  if (l > 20) throw ValidationError("orbit_poset: rank " + std::to_string(l) + " exceeds the 2^l budget");

  std::vector<std::vector<int>> subsets;
  subsets.reserve(1u << l);
  for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < l; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  OrbitPoset poset;
  std::map<std::vector<int>, int> indexOf;
  for (const auto& s : subsets) {
    indexOf[s] = static_cast<int>(poset.nodes.size());
    poset.nodes.push_back(levi_data(rs, s));
  }
  for (const auto& s : subsets) {
    for (int j = 1; j <= l; ++j) {
      if (std::binary_search(s.begin(), s.end(), j)) continue;
      std::vector<int> t = s;
      t.insert(std::upper_bound(t.begin(), t.end(), j), j);
      poset.hasse.emplace_back(indexOf[s], indexOf[t]);
    }
  }
  std::sort(poset.hasse.begin(), poset.hasse.end());
  return poset;
}

}  // namespace wonderful
