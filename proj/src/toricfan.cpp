#include "wonderful/toricfan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "wonderful/errors.hpp"
#include "wonderful/exact.hpp"

namespace wonderful {

namespace {

IntVec primitive(IntVec v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, std::abs(v(i)));
  if (g > 1)
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
  return v;
}

bool lexLess(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace

Fan build_chamber_fan(const std::vector<IntMat>& characterMatrices) {
  if (characterMatrices.empty()) throw ValidationError("build_chamber_fan: no group elements");
  Fan fan;
  fan.dim = static_cast<int>(characterMatrices[0].rows());

  std::map<std::vector<Int>, int> rayIndex;
  std::vector<IntVec> rays;
  for (std::size_t k = 0; k < characterMatrices.size(); ++k) {
    const IntMat& m = characterMatrices[k];
    Cone cone;
    cone.wIndex = static_cast<int>(k);
    cone.halfspaces = m.transpose();
    cone.generators = invert_unimodular(cone.halfspaces);
    for (int j = 0; j < fan.dim; ++j) {
      IntVec ray = primitive(cone.generators.col(j));
      std::vector<Int> key(ray.data(), ray.data() + ray.size());
      auto it = rayIndex.find(key);
      int idx;
      if (it == rayIndex.end()) {
        idx = static_cast<int>(rays.size());
        rayIndex.emplace(std::move(key), idx);
        rays.push_back(ray);
      } else {
        idx = it->second;
      }
      cone.rayIndices.push_back(idx);
    }
    std::sort(cone.rayIndices.begin(), cone.rayIndices.end());
    fan.cones.push_back(std::move(cone));
  }

  // Canonical ray order: lexicographic.  Remap the per-cone indices.
  std::vector<int> order(rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lexLess(rays[static_cast<std::size_t>(a)], rays[static_cast<std::size_t>(b)]); });
  std::vector<int> newIndex(rays.size());
  fan.rays.resize(rays.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    newIndex[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
    fan.rays[pos] = rays[static_cast<std::size_t>(order[pos])];
  }
  for (Cone& cone : fan.cones) {
    for (int& r : cone.rayIndices) r = newIndex[static_cast<std::size_t>(r)];
    std::sort(cone.rayIndices.begin(), cone.rayIndices.end());
  }
  return fan;
}

Fan build_fan(const RootSystem&, const WeylGroup& W) {
  std::vector<IntMat> ms;
  ms.reserve(W.size());
  for (std::size_t k = 0; k < W.size(); ++k) ms.push_back(W.matrix(W[k]));
  return build_chamber_fan(ms);
}

bool check_smooth(const Fan& fan) {
  for (const Cone& cone : fan.cones) {
    Int d = det_integer(cone.generators);
    if (d != 1 && d != -1) return false;
  }
  return true;
}

bool check_complete(const Fan& fan, int samples, std::uint64_t seed) {
  if (samples < 1) throw ValidationError("check_complete: samples must be >= 1");
  std::mt19937_64 rng(seed);
  const int dim = fan.dim;
  constexpr Int kRange = 1000000;
  constexpr int kRetryCap = 100;

  for (int s = 0; s < samples; ++s) {
    int retry = 0;
    for (;;) {
      if (++retry > kRetryCap)
        throw ValidationError("check_complete: retry cap exhausted while redrawing wall points");
      // Rational sample point; membership only depends on the direction, so
      // for cone tests the numerator vector suffices.
      IntVec x(dim);
      bool allZero = true;
      for (int i = 0; i < dim; ++i) {
        x(i) = static_cast<Int>(rng() % (2 * kRange + 1)) - kRange;
        if (x(i) != 0) allZero = false;
      }
      if (allZero) continue;

      int weak = 0, strict = 0;
      bool onWall = false;
      for (const Cone& cone : fan.cones) {
        IntVec dots = cone.halfspaces * x;
        bool nonneg = true, positive = true;
        for (int i = 0; i < dim; ++i) {
          if (dots(i) < 0) { nonneg = false; positive = false; break; }
          if (dots(i) == 0) positive = false;
        }
        if (!nonneg) continue;
        ++weak;
        if (positive) ++strict;
        else onWall = true;
      }
      if (onWall) continue;  // degenerate: redraw
      if (weak < 1 || strict != 1 || weak != 1) return false;
      break;
    }
  }
  return true;
}

bool check_walls_paired(const Fan& fan) {
  // A facet of a chamber cone is the span of all generators pairing to zero
  // with one dropped halfspace; identify facets by their global ray set.
  std::map<std::vector<int>, int> count;
  for (const Cone& cone : fan.cones) {
    const int dim = fan.dim;
    for (int drop = 0; drop < dim; ++drop) {
      std::vector<int> facet;
      for (int j = 0; j < dim; ++j) {
        Int dot = cone.halfspaces.row(drop).dot(cone.generators.col(j));
        if (dot != 0) continue;
        IntVec ray = primitive(cone.generators.col(j));
        for (std::size_t r = 0; r < fan.rays.size(); ++r)
          if (exact_eq(fan.rays[r], ray)) { facet.push_back(static_cast<int>(r)); break; }
      }
      std::sort(facet.begin(), facet.end());
      ++count[facet];
    }
  }
  for (const auto& [facet, c] : count)
    if (c != 2) return false;
  return true;
}

}  // namespace wonderful
