#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "wonderful/errors.hpp"
#include "wonderful/symmetric.hpp"

using namespace wonderful;

namespace {

oracles::Mat plain(const IntMat& m) {
  oracles::Mat out(static_cast<std::size_t>(m.rows()),
                   oracles::Vec(static_cast<std::size_t>(m.cols()), 0));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  return out;
}

std::set<oracles::Vec> plain_roots(const RootSystem& rs) {
  std::set<oracles::Vec> roots;
  for (int r = 0; r < rs.rootCount(); ++r)
    roots.insert(oracles::Vec(rs.root(r).c.data(), rs.root(r).c.data() + rs.rank()));
  return roots;
}

// Multiset {coords -> multiplicity} of the positive restricted roots.
std::map<std::vector<Int>, int> positive_mults(const RestrictedRootSystem& rrs) {
  std::map<std::vector<Int>, int> out;
  for (const RestrictedRoot& rr : rrs.roots) {
    bool positive = false;
    for (Eigen::Index k = 0; k < rr.coords.size(); ++k)
      if (rr.coords(k) > 0) positive = true;
    if (positive)
      out[std::vector<Int>(rr.coords.data(), rr.coords.data() + rr.coords.size())] =
          rr.multiplicity;
  }
  return out;
}

}  // namespace

TEST_CASE("satake grammar") {
  SatakeDiagram sd = parse_satake("A2;black=;arrows=(1,2)");
  CHECK(sd.ctype.name() == "A2");
  CHECK(sd.black.empty());
  CHECK(sd.arrows == std::vector<std::pair<int, int>>{{1, 2}});

  SatakeDiagram sd2 = parse_satake("A3;black=1,3;arrows=");
  CHECK(sd2.black == std::vector<int>{1, 3});
  CHECK(sd2.arrows.empty());

  SatakeDiagram sd3 = parse_satake("A1xA1;black=;arrows=(1,2)");
  CHECK(sd3.ctype.name() == "A1xA1");

  CHECK(parse_satake("A2").black.empty());

  CHECK_THROWS_AS(parse_satake("A2;black=5"), ValidationError);          // out of range
  CHECK_THROWS_AS(parse_satake("A3;black=1;arrows=(1,2)"), ValidationError);  // touches black
  CHECK_THROWS_AS(parse_satake("A3;arrows=(1,2)(2,3)"), ValidationError);     // repeated node
  CHECK_THROWS_AS(parse_satake("A3;arrows=(2,2)"), ValidationError);          // self-arrow
  CHECK_THROWS_AS(parse_satake("A2;arrows=(1"), ValidationError);
  CHECK_THROWS_AS(parse_satake(";black="), ValidationError);
}

TEST_CASE("split involution is minus the identity") {
  RootSystem a2 = build_root_system(parse_cartan_type("A2"));
  Involution inv = build_involution(a2, parse_satake("A2"));
  CHECK(exact_eq(inv.matrix, IntMat(-IntMat::Identity(2, 2))));
  CHECK(imaginary_roots(a2, inv).empty());
}

TEST_CASE("su(2,1)-type involution on A2") {
  RootSystem a2 = build_root_system(parse_cartan_type("A2"));
  Involution inv = build_involution(a2, parse_satake("A2;black=;arrows=(1,2)"));
  IntVec s1 = inv.matrix.col(0);
  CHECK(s1(0) == 0);
  CHECK(s1(1) == -1);  // sigma(alpha_1) = -alpha_2
  CHECK(imaginary_roots(a2, inv).empty());
}

TEST_CASE("su*(4)-type involution on A3") {
  RootSystem a3 = build_root_system(parse_cartan_type("A3"));
  Involution inv = build_involution(a3, parse_satake("A3;black=1,3"));
  IntVec e1 = IntVec::Zero(3), e3 = IntVec::Zero(3);
  e1(0) = 1;
  e3(2) = 1;
  CHECK(exact_eq(IntVec(inv.matrix.col(0)), e1));  // sigma fixes alpha_1
  CHECK(exact_eq(IntVec(inv.matrix.col(2)), e3));  // sigma fixes alpha_3
  IntVec s2 = inv.matrix.col(1);
  CHECK(s2(0) == -1);
  CHECK(s2(1) == -1);
  CHECK(s2(2) == -1);  // sigma(alpha_2) = -(alpha_1+alpha_2+alpha_3)

  auto imag = imaginary_roots(a3, inv);
  CHECK(imag.size() == 4);  // +-alpha_1, +-alpha_3
}

TEST_CASE("group-case involution on A1xA1") {
  RootSystem g = build_root_system(parse_cartan_type("A1xA1"));
  Involution inv = build_involution(g, parse_satake("A1xA1;black=;arrows=(1,2)"));
  CHECK(imaginary_roots(g, inv).empty());
  CHECK(inv.matrix(1, 0) == -1);
  CHECK(inv.matrix(0, 1) == -1);
}

TEST_CASE("involution invariants hold exhaustively") {
  for (const char* text : {"A2", "A2;black=;arrows=(1,2)", "A3;black=1,3",
                           "A1xA1;black=;arrows=(1,2)", "A3;black=;arrows=(1,3)", "B3",
                           "A2xA2;black=;arrows=(1,3)(2,4)"}) {
    CAPTURE(text);
    SatakeDiagram sd = parse_satake(text);
    RootSystem rs = build_root_system(sd.ctype);
    Involution inv = build_involution(rs, sd);

    CHECK(exact_eq(IntMat(inv.matrix * inv.matrix), IntMat(IntMat::Identity(rs.rank(), rs.rank()))));
    for (int r = 0; r < rs.rootCount(); ++r)
      CHECK(rs.isRoot(RootVector(IntVec(inv.matrix * rs.root(r).c))));

    // Positivity compatibility: positive image of a positive root only for
    // fixed roots.
    for (Int r = 0; r < rs.positiveCount(); ++r) {
      IntVec img = inv.matrix * rs.root(static_cast<int>(r)).c;
      int idx = rs.rootIndex(RootVector(img));
      REQUIRE(idx >= 0);
      if (idx < rs.positiveCount())
        CHECK(exact_eq(img, rs.root(static_cast<int>(r)).c));
    }
  }
}

TEST_CASE("inconsistent diagrams are rejected with named checks") {
  RootSystem a2 = build_root_system(parse_cartan_type("A2"));
  // All-black A2 would force sigma = id on everything, which has no split part.
  SatakeDiagram allBlack = parse_satake("A2;black=1,2");
  CHECK_THROWS_AS(restricted_roots(a2, build_involution(a2, allBlack)), ValidationError);

  // A raw matrix that is not an involution.
  IntMat notInv(2, 2);
  notInv << 0, 1, 1, 1;
  CHECK_THROWS_AS(make_involution(a2, notInv), ValidationError);

  // The plain swap fixes no adapted positive system: reject.
  RootSystem g = build_root_system(parse_cartan_type("A1xA1"));
  IntMat swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK_THROWS_AS(make_involution(g, swap), ValidationError);
}

TEST_CASE("raw-matrix entry point accepts the synthesized involutions") {
  for (const char* text : {"A2", "A2;black=;arrows=(1,2)", "A3;black=1,3"}) {
    SatakeDiagram sd = parse_satake(text);
    RootSystem rs = build_root_system(sd.ctype);
    Involution built = build_involution(rs, sd);
    Involution raw = make_involution(rs, built.matrix);
    CHECK(raw.black == built.black);
    CHECK(raw.tau == built.tau);
  }
}

TEST_CASE("restricted systems of the four classical reductions") {
  // Oracle: brute-force restriction census over all roots with the
  // constructed sigma (doubled coordinates).
  auto checkAgainstCensus = [](const RootSystem& rs, const Involution& inv,
                               const RestrictedRootSystem& rrs) {
    auto census = oracles::restriction_census(plain(inv.matrix), plain_roots(rs));
    Int total = 0;
    for (const auto& [vec, mult] : census) total += mult;
    Int fromModule = 0;
    for (const RestrictedRoot& rr : rrs.roots) fromModule += rr.multiplicity;
    CHECK(total == fromModule);
    CHECK(census.size() == rrs.roots.size());
  };

  SUBCASE("split A2: the full system, multiplicity one") {
    RootSystem a2 = build_root_system(parse_cartan_type("A2"));
    Involution inv = build_involution(a2, parse_satake("A2"));
    RestrictedRootSystem rrs = restricted_roots(a2, inv);
    CHECK(rrs.splitRank == 2);
    CHECK(rrs.reduced);
    CHECK(rrs.roots.size() == 6);
    for (const RestrictedRoot& rr : rrs.roots) CHECK(rr.multiplicity == 1);
    CHECK(little_weyl_group(rrs).order() == 6);
    checkAgainstCensus(a2, inv, rrs);
  }

  SUBCASE("su(2,1): BC1 with multiplicities (2,1)") {
    RootSystem a2 = build_root_system(parse_cartan_type("A2"));
    Involution inv = build_involution(a2, parse_satake("A2;black=;arrows=(1,2)"));
    RestrictedRootSystem rrs = restricted_roots(a2, inv);
    CHECK(rrs.splitRank == 1);
    CHECK_FALSE(rrs.reduced);
    std::map<std::vector<Int>, int> expected{{{1}, 2}, {{2}, 1}};
    CHECK(positive_mults(rrs) == expected);
    CHECK(little_weyl_group(rrs).order() == 2);
    checkAgainstCensus(a2, inv, rrs);
    // lambda-bar = (alpha_1 + alpha_2)/2 in ambient coordinates.
    CHECK(rrs.simplesAmbient[0](0) == Rational(1, 2));
    CHECK(rrs.simplesAmbient[0](1) == Rational(1, 2));
  }

  SUBCASE("su*(4): A1 with multiplicity 4") {
    RootSystem a3 = build_root_system(parse_cartan_type("A3"));
    Involution inv = build_involution(a3, parse_satake("A3;black=1,3"));
    RestrictedRootSystem rrs = restricted_roots(a3, inv);
    CHECK(rrs.splitRank == 1);
    CHECK(rrs.reduced);
    std::map<std::vector<Int>, int> expected{{{1}, 4}};
    CHECK(positive_mults(rrs) == expected);
    CHECK(little_weyl_group(rrs).order() == 2);
    checkAgainstCensus(a3, inv, rrs);
  }

  SUBCASE("group case A1xA1: A1 with multiplicity 2") {
    RootSystem g = build_root_system(parse_cartan_type("A1xA1"));
    Involution inv = build_involution(g, parse_satake("A1xA1;black=;arrows=(1,2)"));
    RestrictedRootSystem rrs = restricted_roots(g, inv);
    CHECK(rrs.splitRank == 1);
    CHECK(rrs.reduced);
    std::map<std::vector<Int>, int> expected{{{1}, 2}};
    CHECK(positive_mults(rrs) == expected);
    CHECK(little_weyl_group(rrs).order() == 2);
    checkAgainstCensus(g, inv, rrs);
  }
}

TEST_CASE("group-case reduction for a rank-2 factor") {
  RootSystem g = build_root_system(parse_cartan_type("A2xA2"));
  Involution inv = build_involution(g, parse_satake("A2xA2;black=;arrows=(1,3)(2,4)"));
  RestrictedRootSystem rrs = restricted_roots(g, inv);
  CHECK(rrs.splitRank == 2);
  CHECK(rrs.reduced);
  CHECK(rrs.roots.size() == 6);  // isomorphic to the A2 root set
  for (const RestrictedRoot& rr : rrs.roots) CHECK(rr.multiplicity == 2);
  CHECK(little_weyl_group(rrs).order() == 6);
}

TEST_CASE("split-case reduction equals the ordinary data") {
  for (const char* name : {"A2", "B3", "G2"}) {
    CAPTURE(name);
    RootSystem rs = build_root_system(parse_cartan_type(name));
    Involution inv = build_involution(rs, parse_satake(name));
    RestrictedRootSystem rrs = restricted_roots(rs, inv);
    CHECK(rrs.splitRank == rs.rank());
    CHECK(static_cast<int>(rrs.roots.size()) == rs.rootCount());
    for (const RestrictedRoot& rr : rrs.roots) CHECK(rr.multiplicity == 1);
    WeylGroup W = WeylGroup::enumerate(rs);
    CHECK(little_weyl_group(rrs).order() == W.size());
  }
}

TEST_CASE("multiplicity sum equals the non-imaginary root count") {
  for (const char* text :
       {"A2", "A2;black=;arrows=(1,2)", "A3;black=1,3", "A1xA1;black=;arrows=(1,2)", "B3"}) {
    SatakeDiagram sd = parse_satake(text);
    RootSystem rs = build_root_system(sd.ctype);
    Involution inv = build_involution(rs, sd);
    RestrictedRootSystem rrs = restricted_roots(rs, inv);
    Int total = 0;
    for (const RestrictedRoot& rr : rrs.roots) total += rr.multiplicity;
    CHECK(total == rs.rootCount() - static_cast<Int>(imaginary_roots(rs, inv).size()));
  }
}

TEST_CASE("orbit counts and restricted fans") {
  SUBCASE("group case: 2 orbits") {
    RootSystem g = build_root_system(parse_cartan_type("A1xA1"));
    Involution inv = build_involution(g, parse_satake("A1xA1;black=;arrows=(1,2)"));
    SymmetricOrbits so = symmetric_orbit_count(restricted_roots(g, inv));
    CHECK(so.orbitCount == 2);
    CHECK(so.restrictedFan.cones.size() == 2);
  }
  SUBCASE("split A2: 4 orbits, hexagonal restricted fan") {
    RootSystem a2 = build_root_system(parse_cartan_type("A2"));
    Involution inv = build_involution(a2, parse_satake("A2"));
    SymmetricOrbits so = symmetric_orbit_count(restricted_roots(a2, inv));
    CHECK(so.orbitCount == 4);
    CHECK(so.restrictedFan.cones.size() == 6);
    CHECK(check_smooth(so.restrictedFan));
    CHECK(check_complete(so.restrictedFan, 500, 11));
    CHECK(so.hasse.size() == 4);
  }
  SUBCASE("su(2,1): 2 orbits") {
    RootSystem a2 = build_root_system(parse_cartan_type("A2"));
    Involution inv = build_involution(a2, parse_satake("A2;black=;arrows=(1,2)"));
    SymmetricOrbits so = symmetric_orbit_count(restricted_roots(a2, inv));
    CHECK(so.orbitCount == 2);
    CHECK(so.subsets.size() == 2);
  }
}

TEST_CASE("little Weyl closure respects the cap") {
  RootSystem a2 = build_root_system(parse_cartan_type("A2"));
  Involution inv = build_involution(a2, parse_satake("A2"));
  RestrictedRootSystem rrs = restricted_roots(a2, inv);
  CHECK_THROWS_AS(little_weyl_group(rrs, 3), ValidationError);
}

TEST_CASE("further classical real forms against hand-derived tables") {
  auto positiveMults = [](const RestrictedRootSystem& rrs) {
    std::map<std::vector<Int>, int> out;
    for (const RestrictedRoot& rr : rrs.roots) {
      bool pos = false;
      for (Eigen::Index k = 0; k < rr.coords.size(); ++k)
        if (rr.coords(k) > 0) pos = true;
      if (pos)
        out[std::vector<Int>(rr.coords.data(), rr.coords.data() + rr.coords.size())] =
            rr.multiplicity;
    }
    return out;
  };

  SUBCASE("so(1,4): B2 with the short end black, restricted A1 of multiplicity 3") {
    RootSystem rs = build_root_system(parse_cartan_type("B2"));
    Involution inv = build_involution(rs, parse_satake("B2;black=2"));
    RestrictedRootSystem rrs = restricted_roots(rs, inv);
    CHECK(rrs.splitRank == 1);
    CHECK(rrs.reduced);
    std::map<std::vector<Int>, int> expect{{{1}, 3}};
    CHECK(positiveMults(rrs) == expect);
    CHECK(little_weyl_group(rrs).order() == 2);
    // lambda-bar = alpha_1 + alpha_2 in ambient coordinates.
    CHECK(rrs.simplesAmbient[0](0) == Rational(1));
    CHECK(rrs.simplesAmbient[0](1) == Rational(1));
  }

  SUBCASE("so(2,5): B3 with the short end black, restricted B2 with short mult 3") {
    RootSystem rs = build_root_system(parse_cartan_type("B3"));
    Involution inv = build_involution(rs, parse_satake("B3;black=3"));
    RestrictedRootSystem rrs = restricted_roots(rs, inv);
    CHECK(rrs.splitRank == 2);
    CHECK(rrs.reduced);
    std::map<std::vector<Int>, int> expect{{{1, 0}, 1}, {{0, 1}, 3}, {{1, 1}, 3}, {{1, 2}, 1}};
    CHECK(positiveMults(rrs) == expect);
    CHECK(little_weyl_group(rrs).order() == 8);
    SymmetricOrbits so = symmetric_orbit_count(rrs);
    CHECK(so.orbitCount == 4);
    CHECK(so.restrictedFan.cones.size() == 8);
    CHECK(check_complete(so.restrictedFan, 300, 5));
  }

  SUBCASE("su(2,4): A5 with arrows (1,5)(2,4) and black core, restricted BC2") {
    RootSystem rs = build_root_system(parse_cartan_type("A5"));
    Involution inv = build_involution(rs, parse_satake("A5;black=3;arrows=(1,5)(2,4)"));
    RestrictedRootSystem rrs = restricted_roots(rs, inv);
    CHECK(rrs.splitRank == 2);
    CHECK_FALSE(rrs.reduced);
    std::map<std::vector<Int>, int> expect{{{1, 0}, 2}, {{0, 1}, 4}, {{1, 1}, 4},
                                           {{1, 2}, 2}, {{0, 2}, 1}, {{2, 2}, 1}};
    CHECK(positiveMults(rrs) == expect);
    CHECK(little_weyl_group(rrs).order() == 8);
    CHECK(imaginary_roots(rs, inv).size() == 2);
  }
}
