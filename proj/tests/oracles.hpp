// Test-only oracles, kept independent of the library's own computation paths:
// plain-vector reflection closures, matrix-based group enumeration, and
// closed-form counts.  Expected values in the test files are frozen from
// these.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracles {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;  // row-major

// Reflection s_i on simple-root coordinates given a Cartan matrix.
inline Vec reflect(const Mat& cartan, int i, const Vec& v) {
  Vec w = v;
  long long p = 0;
  for (std::size_t j = 0; j < v.size(); ++j) p += cartan[static_cast<std::size_t>(i)][j] * v[j];
  w[static_cast<std::size_t>(i)] -= p;
  return w;
}

// Full root set as the closure of +-simple roots under all simple reflections.
inline std::set<Vec> closure_roots(const Mat& cartan) {
  const int l = static_cast<int>(cartan.size());
  std::set<Vec> roots;
  std::vector<Vec> queue;
  for (int i = 0; i < l; ++i) {
    Vec e(static_cast<std::size_t>(l), 0);
    e[static_cast<std::size_t>(i)] = 1;
    Vec f = e;
    f[static_cast<std::size_t>(i)] = -1;
    for (const Vec& v : {e, f})
      if (roots.insert(v).second) queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vec v = queue[head];
    for (int i = 0; i < l; ++i) {
      Vec w = reflect(cartan, i, v);
      if (roots.insert(w).second) queue.push_back(w);
    }
  }
  return roots;
}

// Weyl group enumerated as lattice matrices (column j = image of alpha_j),
// with the multiset of lengths computed by counting sign changes on the
// positive roots.  Deliberately does not share code with the library's
// permutation-based enumeration.
struct MatrixWeyl {
  std::size_t order = 0;
  std::map<int, long long> lengthCensus;
};

inline MatrixWeyl matrix_weyl(const Mat& cartan) {
  const int l = static_cast<int>(cartan.size());
  std::set<Vec> roots = closure_roots(cartan);
  std::vector<Vec> positives;
  for (const Vec& v : roots) {
    bool pos = true;
    for (long long c : v)
      if (c < 0) pos = false;
    if (pos) positives.push_back(v);
  }

  auto applyMat = [l](const Mat& m, const Vec& v) {
    Vec out(static_cast<std::size_t>(l), 0);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        out[static_cast<std::size_t>(i)] +=
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
    return out;
  };

  std::vector<Mat> gens;
  for (int i = 0; i < l; ++i) {
    Mat g(static_cast<std::size_t>(l), Vec(static_cast<std::size_t>(l), 0));
    for (int j = 0; j < l; ++j) {
      Vec e(static_cast<std::size_t>(l), 0);
      e[static_cast<std::size_t>(j)] = 1;
      Vec img = reflect(cartan, i, e);
      for (int k = 0; k < l; ++k) g[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = img[static_cast<std::size_t>(k)];
    }
    gens.push_back(g);
  }

  Mat id(static_cast<std::size_t>(l), Vec(static_cast<std::size_t>(l), 0));
  for (int i = 0; i < l; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;

  auto mul = [l](const Mat& a, const Mat& b) {
    Mat c(static_cast<std::size_t>(l), Vec(static_cast<std::size_t>(l), 0));
    for (int i = 0; i < l; ++i)
      for (int k = 0; k < l; ++k)
        for (int j = 0; j < l; ++j)
          c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
              b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    return c;
  };

  std::set<Mat> seen{id};
  std::vector<Mat> queue{id};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Mat& g : gens) {
      Mat prod = mul(queue[head], g);
      if (seen.insert(prod).second) queue.push_back(prod);
    }
  }

  MatrixWeyl out;
  out.order = queue.size();
  for (const Mat& m : queue) {
    int len = 0;
    for (const Vec& p : positives) {
      Vec img = applyMat(m, p);
      bool neg = true;
      for (long long c : img)
        if (c > 0) neg = false;
      if (neg) ++len;
    }
    ++out.lengthCensus[len];
  }
  return out;
}

inline std::size_t weyl_order_formula(char family, int rank) {
  auto fact = [](int n) {
    std::size_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
    return f;
  };
  switch (family) {
    case 'A': return fact(rank + 1);
    case 'B':
    case 'C': return (std::size_t{1} << rank) * fact(rank);
    case 'D': return (std::size_t{1} << (rank - 1)) * fact(rank);
    case 'E': return rank == 6 ? 51840u : (rank == 7 ? 2903040u : 696729600u);
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

inline long long positive_count_formula(char family, int rank) {
  switch (family) {
    case 'A': return static_cast<long long>(rank) * (rank + 1) / 2;
    case 'B':
    case 'C': return static_cast<long long>(rank) * rank;
    case 'D': return static_cast<long long>(rank) * (rank - 1);
    case 'E': return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

// Brute-force restriction census: doubled image (v - sigma v) per root.
inline std::map<Vec, int> restriction_census(const Mat& sigma, const std::set<Vec>& roots) {
  std::map<Vec, int> fibers;
  const int l = static_cast<int>(sigma.size());
  for (const Vec& v : roots) {
    Vec d(static_cast<std::size_t>(l), 0);
    bool zero = true;
    for (int i = 0; i < l; ++i) {
      long long s = 0;
      for (int j = 0; j < l; ++j)
        s += sigma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
      d[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] - s;
      if (d[static_cast<std::size_t>(i)] != 0) zero = false;
    }
    if (!zero) ++fibers[d];
  }
  return fibers;
}

}  // namespace oracles
