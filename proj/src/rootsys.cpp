#include "wonderful/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "wonderful/errors.hpp"

namespace wonderful {

std::string CartanType::name() const {
  std::string s;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) s += 'x';
    s += factors[k].family;
    s += std::to_string(factors[k].rank);
  }
  return s;
}

namespace {

void validate_factor(const CartanFactor& f, const std::string& token) {
  auto fail = [&](const std::string& why) {
    throw ValidationError("invalid Cartan factor \"" + token + "\": " + why);
  };
  switch (f.family) {
    case 'A':
      if (f.rank < 1) fail("type A requires rank >= 1");
      break;
    case 'B':
      if (f.rank < 2) fail("type B requires rank >= 2");
      break;
    case 'C':
      if (f.rank < 3) fail("type C requires rank >= 3");
      break;
    case 'D':
      if (f.rank < 4) fail("type D requires rank >= 4");
      break;
    case 'E':
      if (f.rank < 6 || f.rank > 8) fail("type E requires rank in {6,7,8}");
      break;
    case 'F':
      if (f.rank != 4) fail("type F requires rank 4");
      break;
    case 'G':
      if (f.rank != 2) fail("type G requires rank 2");
      break;
    default:
      fail("family must be one of A,B,C,D,E,F,G");
  }
}

// Cartan matrix of one simple factor, C(i,j) = <alpha_j, alpha_i^vee>,
// Bourbaki numbering.
IntMat simple_cartan(const CartanFactor& f) {
  const int n = f.rank;
  IntMat c = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](int a, int b) { c(a, b) = -1; c(b, a) = -1; };
  switch (f.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':  // node 2 hangs off node 4 (1-based)
      link(0, 2);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      link(0, 1);
      link(2, 3);
      c(1, 2) = -1;
      c(2, 1) = -2;
      break;
    case 'G':  // alpha_1 short
      c(0, 1) = -3;
      c(1, 0) = -1;
      break;
  }
  return c;
}

}  // namespace

CartanType parse_cartan_type(std::string_view text) {
  CartanType ct;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) throw ValidationError("empty Cartan factor in \"" + std::string(text) + "\"");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    std::string digits = token.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError("invalid Cartan factor \"" + token + "\": expected <family><rank>");
    if (digits.size() > 3)
      throw ValidationError("invalid Cartan factor \"" + token + "\": rank too large");
    CartanFactor f{fam, std::stoi(digits)};
    validate_factor(f, token);
    ct.factors.push_back(f);
    token.clear();
  };
  for (char ch : text) {
    if (ch == 'x' || ch == 'X') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      token += ch;
    }
  }
  flush();
  return ct;
}

RootSystem RootSystem::build(const CartanType& ctype) {
  for (const auto& f : ctype.factors) validate_factor(f, std::string(1, f.family) + std::to_string(f.rank));
  if (ctype.factors.empty()) throw ValidationError("Cartan type must have at least one factor");

  RootSystem rs;
  rs.ctype_ = ctype;
  rs.rank_ = ctype.rank();
  const int l = rs.rank_;

  rs.cartan_ = IntMat::Zero(l, l);
  rs.factorOf_.assign(static_cast<std::size_t>(l), 0);
  int off = 0;
  for (std::size_t fi = 0; fi < ctype.factors.size(); ++fi) {
    IntMat block = simple_cartan(ctype.factors[fi]);
    const int n = ctype.factors[fi].rank;
    rs.cartan_.block(off, off, n, n) = block;
    for (int i = 0; i < n; ++i) rs.factorOf_[static_cast<std::size_t>(off + i)] = static_cast<int>(fi);
    off += n;
  }

  // Positive roots: closure of the simple roots under simple reflections,
  // keeping only vectors with all coordinates >= 0.
  std::set<std::vector<Int>> seen;
  std::vector<IntVec> positives;
  for (int i = 0; i < l; ++i) {
    IntVec e = IntVec::Zero(l);
    e(i) = 1;
    positives.push_back(e);
    seen.insert(std::vector<Int>(e.data(), e.data() + l));
  }
  for (std::size_t head = 0; head < positives.size(); ++head) {
    IntVec v = positives[head];
    for (int i = 0; i < l; ++i) {
      IntVec w = v;
      Int p = rs.cartan_.row(i).dot(v);
      w(i) -= p;
      bool nonneg = true;
      for (int j = 0; j < l; ++j)
        if (w(j) < 0) { nonneg = false; break; }
      if (!nonneg) continue;
      std::vector<Int> key(w.data(), w.data() + l);
      if (seen.insert(key).second) positives.push_back(w);
    }
  }

  std::sort(positives.begin(), positives.end(), [](const IntVec& a, const IntVec& b) {
    Int ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  });

  rs.n_ = static_cast<Int>(positives.size());
  rs.roots_.reserve(positives.size() * 2);
  for (const IntVec& v : positives) rs.roots_.emplace_back(v);
  for (const IntVec& v : positives) rs.roots_.emplace_back(IntVec(-v));

  for (int idx = 0; idx < rs.rootCount(); ++idx) {
    const IntVec& v = rs.roots_[static_cast<std::size_t>(idx)].c;
    rs.index_[std::vector<Int>(v.data(), v.data() + l)] = idx;
  }

  rs.simpleIdx_.assign(static_cast<std::size_t>(l), -1);
  for (int i = 0; i < l; ++i) {
    IntVec e = IntVec::Zero(l);
    e(i) = 1;
    rs.simpleIdx_[static_cast<std::size_t>(i)] = rs.rootIndex(RootVector(e));
  }

  // Highest root per irreducible factor: the unique maximal-height positive
  // root supported on that factor's coordinates.
  rs.highest_.resize(ctype.factors.size());
  std::vector<Int> best(ctype.factors.size(), -1);
  for (Int k = 0; k < rs.n_; ++k) {
    const RootVector& v = rs.roots_[static_cast<std::size_t>(k)];
    int fac = -1;
    for (int j = 0; j < l; ++j)
      if (v.c(j) != 0) { fac = rs.factorOf_[static_cast<std::size_t>(j)]; break; }
    Int h = height(v);
    if (h > best[static_cast<std::size_t>(fac)]) {
      best[static_cast<std::size_t>(fac)] = h;
      rs.highest_[static_cast<std::size_t>(fac)] = v;
    }
  }
  rs.maxHeight_ = *std::max_element(best.begin(), best.end());
  return rs;
}

int RootSystem::rootIndex(const RootVector& v) const {
  if (v.c.size() != rank_) return -1;
  auto it = index_.find(std::vector<Int>(v.c.data(), v.c.data() + rank_));
  return it == index_.end() ? -1 : it->second;
}

RootVector RootSystem::simpleRoot(int i) const {
  IntVec e = IntVec::Zero(rank_);
  e(i) = 1;
  return RootVector(e);
}

RootVector RootSystem::simpleReflect(int i, const RootVector& v) const {
  IntVec w = v.c;
  w(i) -= cartan_.row(i).dot(v.c);
  return RootVector(w);
}

Coweight RootSystem::fundamentalCoweight(int i) const {
  RatVec e = RatVec::Constant(rank_, Rational(0));
  e(i) = Rational(1);
  return Coweight(e);
}

RatMat RootSystem::invariantGram() const {
  // Solve d_i * C(i,j) = d_j * C(j,i) along the Dynkin graph of each factor,
  // then scale so min d per factor is 1 (short roots get squared length 2).
  const int l = rank_;
  std::vector<Rational> d(static_cast<std::size_t>(l), Rational(0));
  for (int start = 0; start < l; ++start) {
    if (!d[static_cast<std::size_t>(start)].is_zero()) continue;
    d[static_cast<std::size_t>(start)] = Rational(1);
    std::vector<int> stack{start};
    std::vector<int> comp{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < l; ++j) {
        if (i == j || cartan_(i, j) == 0 || !d[static_cast<std::size_t>(j)].is_zero()) continue;
        d[static_cast<std::size_t>(j)] =
            d[static_cast<std::size_t>(i)] * Rational(cartan_(i, j), cartan_(j, i));
        stack.push_back(j);
        comp.push_back(j);
      }
    }
    Rational mn = d[static_cast<std::size_t>(comp[0])];
    for (int j : comp)
      if (d[static_cast<std::size_t>(j)] < mn) mn = d[static_cast<std::size_t>(j)];
    for (int j : comp) d[static_cast<std::size_t>(j)] /= mn;
  }
  RatMat g(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) g(i, j) = d[static_cast<std::size_t>(i)] * Rational(cartan_(i, j));
  return g;
}

}  // namespace wonderful
