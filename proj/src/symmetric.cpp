#include "wonderful/symmetric.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wonderful/errors.hpp"
#include "wonderful/exact.hpp"

namespace wonderful {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

int parse_index(const std::string& tok, int l, const std::string& what) {
  std::string t = strip(tok);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError("Satake " + what + ": \"" + tok + "\" is not an index");
  int v = std::stoi(t);
  if (v < 1 || v > l)
    throw ValidationError("Satake " + what + ": index " + std::to_string(v) +
                          " out of range 1.." + std::to_string(l));
  return v;
}

}  // namespace

SatakeDiagram parse_satake(const std::string& text) {
  std::vector<std::string> sections = split(text, ';');
  if (sections.empty() || strip(sections[0]).empty())
    throw ValidationError("Satake diagram: missing Cartan type");
  SatakeDiagram sd;
  sd.ctype = parse_cartan_type(strip(sections[0]));
  const int l = sd.ctype.rank();

  std::set<int> blackSet;
  std::set<int> arrowTouched;
  for (std::size_t k = 1; k < sections.size(); ++k) {
    std::string sec = strip(sections[k]);
    if (sec.empty()) continue;
    std::size_t eq = sec.find('=');
    if (eq == std::string::npos)
      throw ValidationError("Satake diagram: section \"" + sec + "\" is not key=value");
    std::string key = strip(sec.substr(0, eq));
    std::string val = strip(sec.substr(eq + 1));
    if (key == "black") {
      if (val.empty()) continue;
      for (const std::string& tok : split(val, ',')) {
        int v = parse_index(tok, l, "black list");
        if (!blackSet.insert(v).second)
          throw ValidationError("Satake black list: index " + std::to_string(v) + " repeated");
      }
    } else if (key == "arrows") {
      std::size_t pos = 0;
      while (pos < val.size()) {
        if (val[pos] != '(')
          throw ValidationError("Satake arrows: expected '(' in \"" + val + "\"");
        std::size_t close = val.find(')', pos);
        if (close == std::string::npos)
          throw ValidationError("Satake arrows: unterminated pair in \"" + val + "\"");
        std::vector<std::string> pair = split(val.substr(pos + 1, close - pos - 1), ',');
        if (pair.size() != 2)
          throw ValidationError("Satake arrows: each arrow needs exactly two indices");
        int a = parse_index(pair[0], l, "arrow");
        int b = parse_index(pair[1], l, "arrow");
        if (a == b) throw ValidationError("Satake arrows: arrow (" + std::to_string(a) +
                                          "," + std::to_string(b) + ") pairs a node with itself");
        if (!arrowTouched.insert(a).second || !arrowTouched.insert(b).second)
          throw ValidationError("Satake arrows: non-involutive pairing (node repeated)");
        sd.arrows.emplace_back(std::min(a, b), std::max(a, b));
        pos = close + 1;
      }
    } else {
      throw ValidationError("Satake diagram: unknown section \"" + key + "\"");
    }
  }
  for (int b : blackSet)
    if (arrowTouched.count(b))
      throw ValidationError("Satake arrows: arrow touches black node " + std::to_string(b));
  sd.black.assign(blackSet.begin(), blackSet.end());
  std::sort(sd.arrows.begin(), sd.arrows.end());
  return sd;
}

namespace {

// Longest element of the reflection subgroup generated by the black simple
// reflections, built greedily: right-multiply by a black reflection while
// some black simple root is still sent positive.
IntMat longest_black_element(const RootSystem& rs, const std::vector<int>& black) {
  const int l = rs.rank();
  IntMat w = IntMat::Identity(l, l);
  auto isPositiveRoot = [&](const IntVec& v) {
    int idx = rs.rootIndex(RootVector(v));
    return idx >= 0 && idx < rs.positiveCount();
  };
  for (;;) {
    bool moved = false;
    for (int b : black) {
      IntVec img = w.col(b - 1);
      if (!isPositiveRoot(img)) continue;
      // w := w . s_b, column by column: s_b(alpha_j) = alpha_j - C(b,j) alpha_b.
      IntMat next = w;
      for (int j = 0; j < l; ++j)
        next.col(j) = w.col(j) - rs.cartan()(b - 1, j) * w.col(b - 1);
      w = next;
      moved = true;
      break;
    }
    if (!moved) break;
  }
  return w;
}

// Shared invariant suite.  Throws ValidationError naming the failed check.
void validate_involution(const RootSystem& rs, const Involution& inv) {
  const int l = rs.rank();
  const IntMat& s = inv.matrix;
  auto fail = [](const std::string& why) {
    throw ValidationError("involution rejected: " + why);
  };

  if (s.rows() != l || s.cols() != l) fail("matrix has the wrong size");
  if (!exact_eq(IntMat(s * s), IntMat(IntMat::Identity(l, l)))) fail("sigma^2 != identity");

  for (int r = 0; r < rs.rootCount(); ++r) {
    IntVec img = s * rs.root(r).c;
    if (!rs.isRoot(RootVector(img))) fail("sigma does not preserve the root set");
  }

  std::vector<bool> isBlack(static_cast<std::size_t>(l) + 1, false);
  for (int b : inv.black) isBlack[static_cast<std::size_t>(b)] = true;

  // sigma fixes every root supported on the black simples.
  for (int r = 0; r < rs.rootCount(); ++r) {
    const IntVec& c = rs.root(r).c;
    bool inSpan = true;
    for (int j = 0; j < l; ++j)
      if (c(j) != 0 && !isBlack[static_cast<std::size_t>(j) + 1]) { inSpan = false; break; }
    if (!inSpan) continue;
    if (!exact_eq(IntVec(s * c), c)) fail("sigma moves a root in the span of the black simples");
  }

  // White constraint: sigma(alpha_i) = -alpha_tau(i) - (nonnegative black part).
  for (int i = 1; i <= l; ++i) {
    if (isBlack[static_cast<std::size_t>(i)]) {
      if (inv.tau[static_cast<std::size_t>(i - 1)] != i) fail("tau must fix black indices");
      continue;
    }
    int ti = inv.tau[static_cast<std::size_t>(i - 1)];
    if (ti < 1 || ti > l || isBlack[static_cast<std::size_t>(ti)])
      fail("tau image of a white node must be white");
    if (inv.tau[static_cast<std::size_t>(ti - 1)] != i) fail("tau is not an involution");
    IntVec rem = -(s.col(i - 1));  // -sigma(alpha_i)
    rem(ti - 1) -= 1;              // minus alpha_tau(i)
    for (int j = 0; j < l; ++j) {
      if (rem(j) == 0) continue;
      if (!isBlack[static_cast<std::size_t>(j) + 1])
        fail("sigma(alpha_" + std::to_string(i) + ") has white support beyond -alpha_" +
             std::to_string(ti));
      if (rem(j) < 0)
        fail("sigma(alpha_" + std::to_string(i) + ") has a positive black coefficient");
    }
  }

  // Adapted positivity: a positive root with positive image must be fixed.
  for (Int r = 0; r < rs.positiveCount(); ++r) {
    IntVec img = s * rs.root(static_cast<int>(r)).c;
    int idx = rs.rootIndex(RootVector(img));
    if (idx >= 0 && idx < rs.positiveCount() && !exact_eq(img, rs.root(static_cast<int>(r)).c))
      fail("positive system is not adapted: a non-imaginary positive root has positive image");
  }
}

}  // namespace

Involution build_involution(const RootSystem& rs, const SatakeDiagram& sd) {
  if (rs.ctype().name() != sd.ctype.name())
    throw ValidationError("Satake diagram type " + sd.ctype.name() +
                          " does not match root system " + rs.ctype().name());
  const int l = rs.rank();
  std::vector<bool> isBlack(static_cast<std::size_t>(l) + 1, false);
  for (int b : sd.black) isBlack[static_cast<std::size_t>(b)] = true;

  IntMat wS = longest_black_element(rs, sd.black);

  Involution inv;
  inv.black = sd.black;
  inv.tau.assign(static_cast<std::size_t>(l), 0);
  for (int i = 1; i <= l; ++i) inv.tau[static_cast<std::size_t>(i - 1)] = i;
  for (auto [a, b] : sd.arrows) {
    inv.tau[static_cast<std::size_t>(a - 1)] = b;
    inv.tau[static_cast<std::size_t>(b - 1)] = a;
  }
  // On blacks, tau-hat is the opposition involution of the black subsystem:
  // beta_j -> -w_S(beta_j), which must again be a black simple root.
  for (int b : sd.black) {
    IntVec img = -wS.col(b - 1);
    int target = -1;
    for (int j = 1; j <= l; ++j) {
      IntVec e = IntVec::Zero(l);
      e(j - 1) = 1;
      if (exact_eq(img, e)) { target = j; break; }
    }
    if (target < 0 || !isBlack[static_cast<std::size_t>(target)])
      throw ValidationError("involution rejected: -w_S does not permute the black simple roots");
    inv.tau[static_cast<std::size_t>(b - 1)] = target;
  }

  IntMat sigma(l, l);
  for (int i = 0; i < l; ++i)
    sigma.col(i) = -wS.col(inv.tau[static_cast<std::size_t>(i)] - 1);
  inv.matrix = sigma;

  validate_involution(rs, inv);
  return inv;
}

Involution make_involution(const RootSystem& rs, const IntMat& matrix) {
  const int l = rs.rank();
  if (matrix.rows() != l || matrix.cols() != l)
    throw ValidationError("involution rejected: matrix size does not match the rank");
  Involution inv;
  inv.matrix = matrix;
  inv.tau.assign(static_cast<std::size_t>(l), 0);
  std::vector<bool> isBlack(static_cast<std::size_t>(l) + 1, false);
  for (int i = 1; i <= l; ++i) {
    IntVec e = IntVec::Zero(l);
    e(i - 1) = 1;
    if (exact_eq(IntVec(matrix.col(i - 1)), e)) {
      inv.black.push_back(i);
      isBlack[static_cast<std::size_t>(i)] = true;
      inv.tau[static_cast<std::size_t>(i - 1)] = i;
    }
  }
  // Derive the arrow pairing: tau(i) is the unique white index carrying
  // coefficient 1 in -sigma(alpha_i).
  for (int i = 1; i <= l; ++i) {
    if (isBlack[static_cast<std::size_t>(i)]) continue;
    IntVec v = -matrix.col(i - 1);
    int target = -1;
    for (int j = 1; j <= l; ++j) {
      if (isBlack[static_cast<std::size_t>(j)] || v(j - 1) == 0) continue;
      if (v(j - 1) != 1 || target >= 0)
        throw ValidationError("involution rejected: -sigma(alpha_" + std::to_string(i) +
                              ") is not a white simple plus a black combination");
      target = j;
    }
    if (target < 0)
      throw ValidationError("involution rejected: sigma fixes no white partner for alpha_" +
                            std::to_string(i));
    inv.tau[static_cast<std::size_t>(i - 1)] = target;
  }
  validate_involution(rs, inv);
  return inv;
}

std::vector<RootVector> imaginary_roots(const RootSystem& rs, const Involution& sigma) {
  const int l = rs.rank();
  std::vector<bool> isBlack(static_cast<std::size_t>(l) + 1, false);
  for (int b : sigma.black) isBlack[static_cast<std::size_t>(b)] = true;

  std::vector<RootVector> fixed;
  for (int r = 0; r < rs.rootCount(); ++r) {
    const IntVec& c = rs.root(r).c;
    if (exact_eq(IntVec(sigma.matrix * c), c)) fixed.push_back(rs.root(r));
  }
  for (const RootVector& v : fixed) {
    for (int j = 0; j < l; ++j)
      if (v.c(j) != 0 && !isBlack[static_cast<std::size_t>(j) + 1])
        throw InvariantViolation("imaginary root outside the span of the black simples");
  }
  // Conversely every root in the black span must be fixed; validate_involution
  // checked that, so the two sets coincide.
  return fixed;
}

RestrictedRootSystem restricted_roots(const RootSystem& rs, const Involution& sigma) {
  const int l = rs.rank();
  std::vector<bool> isBlack(static_cast<std::size_t>(l) + 1, false);
  for (int b : sigma.black) isBlack[static_cast<std::size_t>(b)] = true;

  RestrictedRootSystem rrs;

  // tau-orbits on white indices, sorted by smallest member; the first
  // representative of each orbit contributes a simple restricted root.
  std::vector<bool> used(static_cast<std::size_t>(l) + 1, false);
  for (int i = 1; i <= l; ++i) {
    if (isBlack[static_cast<std::size_t>(i)] || used[static_cast<std::size_t>(i)]) continue;
    used[static_cast<std::size_t>(i)] = true;
    used[static_cast<std::size_t>(sigma.tau[static_cast<std::size_t>(i - 1)])] = true;
    rrs.simpleSources.push_back(i);
  }
  rrs.splitRank = static_cast<int>(rrs.simpleSources.size());
  const int r = rrs.splitRank;
  if (r == 0) throw ValidationError("restricted_roots: no white simple roots (sigma has no split part)");

  // Doubled restriction 2*(a - sigma a)/2 = a - sigma a keeps everything integral.
  auto doubledRestriction = [&](const IntVec& c) -> IntVec { return c - sigma.matrix * c; };

  IntMat basisDoubled(l, r);
  for (int k = 0; k < r; ++k) {
    IntVec e = IntVec::Zero(l);
    e(rrs.simpleSources[static_cast<std::size_t>(k)] - 1) = 1;
    basisDoubled.col(k) = doubledRestriction(e);
    RatVec half(l);
    for (int j = 0; j < l; ++j) half(j) = Rational(basisDoubled(j, k), 2);
    rrs.simplesAmbient.push_back(half);
  }

  // The (-1)-eigenspace of sigma must have dimension r and contain the basis.
  {
    RatMat sPlus = toRational(IntMat(sigma.matrix + IntMat::Identity(l, l)));
    RatMat ker = kernel_basis(sPlus);
    if (static_cast<int>(ker.cols()) != r)
      throw InvariantViolation("restricted_roots: (-1)-eigenspace dimension " +
                               std::to_string(ker.cols()) + " != split rank " + std::to_string(r));
    if (rank_rational(toRational(basisDoubled)) != r)
      throw InvariantViolation("restricted_roots: simple restricted roots are dependent");
  }

  // Group the non-imaginary roots by their doubled restriction.
  std::map<std::vector<Int>, int> fibers;
  Int imaginaryCount = 0;
  for (int idx = 0; idx < rs.rootCount(); ++idx) {
    const IntVec& c = rs.root(idx).c;
    IntVec d = doubledRestriction(c);
    if (d.isZero()) { ++imaginaryCount; continue; }
    ++fibers[std::vector<Int>(d.data(), d.data() + l)];
  }

  Int multSum = 0;
  std::set<std::vector<Int>> doubledSet;
  for (const auto& [key, mult] : fibers) doubledSet.insert(key);

  std::vector<RestrictedRoot> positives, negatives;
  for (const auto& [key, mult] : fibers) {
    multSum += mult;
    IntVec d(l);
    for (int j = 0; j < l; ++j) d(j) = key[static_cast<std::size_t>(j)];
    // Coordinates in the simple restricted basis must be integral with a
    // uniform sign.
    RatVec sol;
    if (!solve_exact(toRational(basisDoubled), toRational(d), sol))
      throw InvariantViolation("restricted_roots: restriction outside the simple span");
    IntVec coords(r);
    bool pos = false, neg = false;
    for (int k = 0; k < r; ++k) {
      if (!sol(k).is_integer())
        throw InvariantViolation("restricted_roots: non-integral coordinate in the simple basis");
      coords(k) = sol(k).num();
      if (coords(k) > 0) pos = true;
      if (coords(k) < 0) neg = true;
    }
    if (pos && neg)
      throw InvariantViolation("restricted_roots: mixed-sign coordinates in the simple basis");
    RestrictedRoot rr;
    rr.coords = coords;
    rr.multiplicity = mult;
    (pos ? positives : negatives).push_back(std::move(rr));
  }
  if (multSum != static_cast<Int>(rs.rootCount()) - imaginaryCount)
    throw InvariantViolation("restricted_roots: multiplicity sum mismatch");

  auto byHeightLex = [](const RestrictedRoot& a, const RestrictedRoot& b) {
    Int ha = a.coords.sum(), hb = b.coords.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(a.coords.data(), a.coords.data() + a.coords.size(),
                                        b.coords.data(), b.coords.data() + b.coords.size());
  };
  std::sort(positives.begin(), positives.end(), byHeightLex);
  // The restriction commutes with negation, so the negative half must be the
  // exact mirror of the positive half, multiplicities included.
  std::map<std::vector<Int>, int> negByCoords;
  for (const RestrictedRoot& n : negatives)
    negByCoords[std::vector<Int>(n.coords.data(), n.coords.data() + r)] = n.multiplicity;
  if (negatives.size() != positives.size())
    throw InvariantViolation("restricted_roots: restriction set is not symmetric under negation");
  rrs.roots = positives;
  for (const RestrictedRoot& p : positives) {
    RestrictedRoot m;
    m.coords = -p.coords;
    m.multiplicity = p.multiplicity;
    auto it = negByCoords.find(std::vector<Int>(m.coords.data(), m.coords.data() + r));
    if (it == negByCoords.end() || it->second != p.multiplicity)
      throw InvariantViolation("restricted_roots: restriction set is not symmetric under negation");
    rrs.roots.push_back(std::move(m));
  }

  // Non-reduced (BC) detection: some restricted root has twice itself
  // restricted as well.
  std::set<std::vector<Int>> coordSet;
  for (const RestrictedRoot& rr : rrs.roots)
    coordSet.insert(std::vector<Int>(rr.coords.data(), rr.coords.data() + r));
  rrs.reduced = true;
  for (const RestrictedRoot& rr : rrs.roots) {
    IntVec twice = 2 * rr.coords;
    if (coordSet.count(std::vector<Int>(twice.data(), twice.data() + r))) {
      rrs.reduced = false;
      break;
    }
  }

  // Invariant form on the restricted space, from the ambient form:
  // gram(a,b) = (lambda_a, lambda_b) = (1/4) * doubled_a^T G doubled_b.
  RatMat ambient = rs.invariantGram();
  RatMat bd = toRational(basisDoubled);
  rrs.gram = (bd.transpose() * ambient * bd) * Rational(1, 4);
  return rrs;
}

LittleWeylGroup little_weyl_group(const RestrictedRootSystem& rrs, std::size_t cap) {
  const int r = rrs.splitRank;
  if (rrs.roots.empty()) throw ValidationError("little_weyl_group: empty restricted system");

  std::set<std::vector<Int>> coordSet;
  for (const RestrictedRoot& rr : rrs.roots)
    coordSet.insert(std::vector<Int>(rr.coords.data(), rr.coords.data() + r));

  auto isRestrictedRoot = [&](const IntVec& v) {
    return coordSet.count(std::vector<Int>(v.data(), v.data() + r)) > 0;
  };

  // Reflection generators from the indivisible restricted roots.
  std::vector<IntMat> gens;
  for (const RestrictedRoot& rr : rrs.roots) {
    bool halfIsRoot = true;
    IntVec half(r);
    for (int k = 0; k < r; ++k) {
      if (rr.coords(k) % 2 != 0) { halfIsRoot = false; break; }
      half(k) = rr.coords(k) / 2;
    }
    if (halfIsRoot && isRestrictedRoot(half)) continue;  // divisible

    RatVec a = toRational(rr.coords);
    Rational norm = (a.transpose() * rrs.gram * a)(0, 0);
    IntMat refl(r, r);
    for (int j = 0; j < r; ++j) {
      RatVec e = RatVec::Constant(r, Rational(0));
      e(j) = Rational(1);
      Rational coefficient = Rational(2) * (a.transpose() * rrs.gram * e)(0, 0) / norm;
      for (int i = 0; i < r; ++i) {
        Rational entry = (i == j ? Rational(1) : Rational(0)) - coefficient * a(i);
        if (!entry.is_integer())
          throw InvariantViolation("little_weyl_group: non-integral reflection matrix");
        refl(i, j) = entry.num();
      }
    }
    // The reflection must permute the restricted root set.
    for (const RestrictedRoot& other : rrs.roots)
      if (!isRestrictedRoot(refl * other.coords))
        throw InvariantViolation("little_weyl_group: reflection does not preserve the root set");
    gens.push_back(refl);
  }

  std::set<std::vector<Int>> seen;
  auto keyOf = [r](const IntMat& m) {
    std::vector<Int> key;
    key.reserve(static_cast<std::size_t>(r) * static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) key.push_back(m(i, j));
    return key;
  };

  std::vector<IntMat> elems{IntMat::Identity(r, r)};
  seen.insert(keyOf(elems[0]));
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const IntMat& g : gens) {
      IntMat prod = elems[head] * g;
      if (seen.insert(keyOf(prod)).second) {
        if (elems.size() + 1 > cap)
          throw ValidationError("little Weyl enumeration exceeded cap " + std::to_string(cap));
        elems.push_back(prod);
      }
    }
  }

  std::sort(elems.begin() + 1, elems.end(), [&](const IntMat& a, const IntMat& b) {
    return keyOf(a) < keyOf(b);
  });
  LittleWeylGroup g;
  g.elements = std::move(elems);
  return g;
}

SymmetricOrbits symmetric_orbit_count(const RestrictedRootSystem& rrs,
                                      const LittleWeylGroup& littleWeyl) {
  SymmetricOrbits out;
  out.splitRank = rrs.splitRank;
  out.orbitCount = Int(1) << rrs.splitRank;

  const int r = rrs.splitRank;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    out.subsets.push_back(std::move(s));
  }
  std::sort(out.subsets.begin(), out.subsets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::map<std::vector<int>, int> indexOf;
  for (std::size_t k = 0; k < out.subsets.size(); ++k)
    indexOf[out.subsets[k]] = static_cast<int>(k);
  for (const auto& s : out.subsets)
    for (int j = 1; j <= r; ++j) {
      if (std::binary_search(s.begin(), s.end(), j)) continue;
      std::vector<int> t = s;
      t.insert(std::upper_bound(t.begin(), t.end(), j), j);
      out.hasse.emplace_back(indexOf[s], indexOf[t]);
    }
  std::sort(out.hasse.begin(), out.hasse.end());

  out.restrictedFan = build_chamber_fan(littleWeyl.elements);
  return out;
}

SymmetricOrbits symmetric_orbit_count(const RestrictedRootSystem& rrs) {
  return symmetric_orbit_count(rrs, little_weyl_group(rrs));
}

}  // namespace wonderful
