#include <set>

#include "doctest.h"
#include "wonderful/errors.hpp"
#include "wonderful/exact.hpp"
#include "wonderful/toricfan.hpp"

using namespace wonderful;

namespace {

Fan fan_of(const char* name) {
  RootSystem rs = build_root_system(parse_cartan_type(name));
  WeylGroup W = WeylGroup::enumerate(rs);
  return build_fan(rs, W);
}

// Independent ray-count oracle: orbit of the fundamental coweights under the
// contragredient action.
std::size_t ray_orbit_count(const char* name) {
  RootSystem rs = build_root_system(parse_cartan_type(name));
  WeylGroup W = WeylGroup::enumerate(rs);
  std::set<std::vector<Int>> orbit;
  for (std::size_t k = 0; k < W.size(); ++k) {
    IntMat n = W.coweightMatrix(W[k]);
    for (int j = 0; j < rs.rank(); ++j) {
      IntVec col = n.col(j);
      orbit.insert(std::vector<Int>(col.data(), col.data() + rs.rank()));
    }
  }
  return orbit.size();
}

}  // namespace

TEST_CASE("chamber counts and ray counts") {
  Fan a1 = fan_of("A1");
  CHECK(a1.cones.size() == 2);
  CHECK(a1.rays.size() == 2);

  Fan a2 = fan_of("A2");
  CHECK(a2.cones.size() == 6);
  CHECK(a2.rays.size() == 6);

  Fan b2 = fan_of("B2");
  CHECK(b2.cones.size() == 8);
  CHECK(b2.rays.size() == 8);
}

TEST_CASE("ray sets equal the coweight orbit") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "G2", "A1xA1"}) {
    CAPTURE(name);
    Fan fan = fan_of(name);
    CHECK(fan.rays.size() == ray_orbit_count(name));
  }
}

TEST_CASE("identity chamber carries the simple-root halfspaces") {
  RootSystem a2 = build_root_system(parse_cartan_type("A2"));
  WeylGroup W = WeylGroup::enumerate(a2);
  Fan fan = build_fan(a2, W);
  const Cone& idCone = fan.cones[0];
  CHECK(idCone.wIndex == 0);
  CHECK(exact_eq(idCone.halfspaces, IntMat(IntMat::Identity(2, 2))));
  CHECK(exact_eq(idCone.generators, IntMat(IntMat::Identity(2, 2))));
}

TEST_CASE("smoothness certificate, positive and negative") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"}) {
    CAPTURE(name);
    Fan fan = fan_of(name);
    CHECK(check_smooth(fan));
  }

  Fan corrupted = fan_of("A2");
  corrupted.cones[2].generators.col(0) *= 2;  // no longer a lattice basis
  CHECK_FALSE(check_smooth(corrupted));
}

TEST_CASE("completeness sampling, positive and negative") {
  for (const char* name : {"A1", "A2", "B2", "B3", "G2", "A1xA1"}) {
    CAPTURE(name);
    Fan fan = fan_of(name);
    CHECK(check_complete(fan, 1000, 7));
  }

  Fan broken = fan_of("A2");
  broken.cones.erase(broken.cones.begin() + 3);
  CHECK_FALSE(check_complete(broken, 1000, 7));

  CHECK_THROWS(check_complete(fan_of("A1"), 0, 7));
}

TEST_CASE("completeness sampling is deterministic in the seed") {
  Fan fan = fan_of("B2");
  CHECK(check_complete(fan, 200, 42) == check_complete(fan, 200, 42));
}

TEST_CASE("a dominant point lies in the identity chamber only") {
  RootSystem a2 = build_root_system(parse_cartan_type("A2"));
  WeylGroup W = WeylGroup::enumerate(a2);
  Fan fan = build_fan(a2, W);
  IntVec x(2);
  x << 1, 1;  // omega_1 + omega_2 in coweight coordinates
  int strictly = 0;
  int strictlyIdentity = -1;
  for (const Cone& cone : fan.cones) {
    IntVec dots = cone.halfspaces * x;
    bool positive = true;
    for (int i = 0; i < 2; ++i)
      if (dots(i) <= 0) positive = false;
    if (positive) {
      ++strictly;
      strictlyIdentity = cone.wIndex;
    }
  }
  CHECK(strictly == 1);
  CHECK(strictlyIdentity == 0);
}

TEST_CASE("every wall is shared by exactly two chambers (rank <= 3)") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1"}) {
    CAPTURE(name);
    CHECK(check_walls_paired(fan_of(name)));
  }
  Fan broken = fan_of("B2");
  broken.cones.pop_back();
  CHECK_FALSE(check_walls_paired(broken));
}

TEST_CASE("degenerate halfspaces exhaust the wall retry cap") {
  Fan fan = fan_of("A2");
  // With every halfspace zeroed each draw lies weakly on a wall of every
  // cone, so the redraw loop can never accept a sample.
  for (Cone& cone : fan.cones) cone.halfspaces.setZero();
  CHECK_THROWS_AS(check_complete(fan, 1, 7), ValidationError);
}
