#include "wonderful/weyl.hpp"

#include <algorithm>

#include "wonderful/errors.hpp"
#include "wonderful/exact.hpp"

namespace wonderful {

namespace {

std::uint64_t hash_ints(const std::int32_t* data, std::size_t n) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t k = 0; k < n; ++k) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(data[k]));
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::uint64_t WeylGroup::keyOf(const WeylElement& w) const {
  const int l = rs_->rank();
  std::vector<std::int32_t> img(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i)
    img[static_cast<std::size_t>(i)] = w.perm[static_cast<std::size_t>(rs_->simpleRootIndex(i))];
  return hash_ints(img.data(), img.size());
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::size_t cap) {
  WeylGroup g;
  g.rs_ = &rs;
  const int l = rs.rank();
  const int m = rs.rootCount();
  const Int n = rs.positiveCount();

  // Permutations induced by the simple reflections.
  std::vector<std::vector<std::int32_t>> gen(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    gen[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
      int img = rs.rootIndex(rs.simpleReflect(i, rs.root(r)));
      if (img < 0) throw InvariantViolation("Weyl enumeration: reflection left the root set");
      gen[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = img;
    }
  }

  auto stats = [&](WeylElement& w) {
    w.length = 0;
    for (Int k = 0; k < n; ++k)
      if (w.perm[static_cast<std::size_t>(k)] >= n) ++w.length;
    w.descents = 0;
    for (int i = 0; i < l; ++i)
      if (w.perm[static_cast<std::size_t>(rs.simpleRootIndex(i))] >= n) ++w.descents;
  };

  WeylElement id;
  id.perm.resize(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) id.perm[static_cast<std::size_t>(r)] = r;
  stats(id);
  g.elems_.push_back(std::move(id));

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  seen[g.keyOf(g.elems_[0])].push_back(0);

  auto samePerm = [](const WeylElement& a, const std::vector<std::int32_t>& p) {
    return a.perm == p;
  };

  for (std::size_t head = 0; head < g.elems_.size(); ++head) {
    for (int i = 0; i < l; ++i) {
      std::vector<std::int32_t> np(static_cast<std::size_t>(m));
      const auto& cur = g.elems_[head].perm;
      const auto& si = gen[static_cast<std::size_t>(i)];
      for (int r = 0; r < m; ++r)
        np[static_cast<std::size_t>(r)] = cur[static_cast<std::size_t>(si[static_cast<std::size_t>(r)])];

      WeylElement cand;
      cand.perm = std::move(np);
      std::uint64_t key = g.keyOf(cand);
      auto it = seen.find(key);
      bool exists = false;
      if (it != seen.end())
        for (std::size_t idx : it->second)
          if (samePerm(g.elems_[idx], cand.perm)) { exists = true; break; }
      if (exists) continue;

      if (g.elems_.size() + 1 > cap)
        throw ValidationError("Weyl enumeration exceeded cap " + std::to_string(cap) +
                              " (partial count " + std::to_string(g.elems_.size()) + ")");
      cand.word = g.elems_[head].word;
      cand.word.push_back(static_cast<std::int8_t>(i));
      stats(cand);
      seen[key].push_back(g.elems_.size());
      g.elems_.push_back(std::move(cand));
    }
  }

  std::sort(g.elems_.begin(), g.elems_.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });

  g.lookup_.clear();
  for (std::size_t idx = 0; idx < g.elems_.size(); ++idx)
    g.lookup_[g.keyOf(g.elems_[idx])].push_back(idx);

  std::size_t longestCount = 0;
  for (std::size_t idx = 0; idx < g.elems_.size(); ++idx) {
    if (g.elems_[idx].length == static_cast<int>(n)) {
      g.longest_ = idx;
      ++longestCount;
    }
  }
  if (longestCount != 1)
    throw InvariantViolation("Weyl enumeration: expected exactly one element of maximal length, found " +
                             std::to_string(longestCount));
  return g;
}

std::size_t WeylGroup::findByPerm(const std::vector<std::int32_t>& perm) const {
  WeylElement probe;
  probe.perm = perm;
  auto it = lookup_.find(keyOf(probe));
  if (it != lookup_.end())
    for (std::size_t idx : it->second)
      if (elems_[idx].perm == perm) return idx;
  throw InvariantViolation("Weyl lookup: element not in the enumerated group");
}

std::size_t WeylGroup::inverseIndex(std::size_t i) const {
  const auto& p = elems_[i].perm;
  std::vector<std::int32_t> inv(p.size());
  for (std::size_t k = 0; k < p.size(); ++k)
    inv[static_cast<std::size_t>(p[k])] = static_cast<std::int32_t>(k);
  return findByPerm(inv);
}

std::size_t WeylGroup::composeIndex(std::size_t i, std::size_t j) const {
  const auto& a = elems_[i].perm;
  const auto& b = elems_[j].perm;
  std::vector<std::int32_t> prod(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    prod[k] = a[static_cast<std::size_t>(b[k])];
  return findByPerm(prod);
}

IntMat WeylGroup::matrix(const WeylElement& w) const {
  const int l = rs_->rank();
  IntMat m(l, l);
  for (int j = 0; j < l; ++j)
    m.col(j) = rs_->root(w.perm[static_cast<std::size_t>(rs_->simpleRootIndex(j))]).c;
  return m;
}

IntMat WeylGroup::coweightMatrix(const WeylElement& w) const {
  IntMat mt = matrix(w).transpose();
  return invert_unimodular(mt);
}

Polynomial WeylGroup::poincare() const {
  Polynomial p;
  for (const auto& w : elems_) p.add_term(static_cast<std::size_t>(w.length), 1);
  return p;
}

RootVector act_on_root(const RootSystem& rs, const WeylElement& w, const RootVector& v) {
  int idx = rs.rootIndex(v);
  if (idx >= 0) return rs.root(w.perm[static_cast<std::size_t>(idx)]);
  // General lattice vector: act through the matrix.
  const int l = rs.rank();
  IntVec out = IntVec::Zero(l);
  for (int j = 0; j < l; ++j)
    out += v.c(j) * rs.root(w.perm[static_cast<std::size_t>(rs.simpleRootIndex(j))]).c;
  return RootVector(out);
}

}  // namespace wonderful
