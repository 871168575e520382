#include <random>
#include <stdexcept>

#include "doctest.h"
#include "wonderful/errors.hpp"
#include "wonderful/exact.hpp"

using namespace wonderful;

TEST_CASE("rational arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b) == Rational(5, 6));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(1, 6));
  CHECK((a / b) == Rational(3, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(7).is_integer());
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(b < a);
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  // Narrowing overflow is detected, not wrapped.
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("integer determinants") {
  IntMat m(3, 3);
  m << 2, 0, 1, 1, 1, 0, 0, 3, 1;
  CHECK(det_integer(m) == 5);
  IntMat sing(2, 2);
  sing << 1, 2, 2, 4;
  CHECK(det_integer(sing) == 0);
  CHECK(det_integer(IntMat::Identity(4, 4)) == 1);
  IntMat swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(det_integer(swap) == -1);
}

TEST_CASE("rank, kernel and solve") {
  RatMat a = toRational(IntMat(IntMat::Zero(2, 3)));
  a(0, 0) = Rational(1);
  a(0, 1) = Rational(1);
  a(1, 2) = Rational(1);
  CHECK(rank_rational(a) == 2);
  RatMat k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  // Kernel vector satisfies a k = 0.
  RatMat prod = a * k;
  for (Eigen::Index i = 0; i < prod.rows(); ++i) CHECK(prod(i, 0).is_zero());

  RatVec b(2);
  b(0) = Rational(3);
  b(1) = Rational(5);
  RatVec x;
  REQUIRE(solve_exact(a, b, x));
  RatVec ax = a * x;
  CHECK(ax(0) == Rational(3));
  CHECK(ax(1) == Rational(5));

  // Inconsistent system.
  RatMat c = toRational(IntMat(IntMat::Zero(2, 1)));
  c(0, 0) = Rational(1);
  c(1, 0) = Rational(1);
  RatVec rhs(2);
  rhs(0) = Rational(1);
  rhs(1) = Rational(2);
  CHECK_FALSE(solve_exact(c, rhs, x));
}

TEST_CASE("unimodular inverse") {
  IntMat u(2, 2);
  u << 1, 1, 0, 1;
  IntMat inv = invert_unimodular(u);
  CHECK(exact_eq(IntMat(u * inv), IntMat(IntMat::Identity(2, 2))));

  IntMat bad(2, 2);
  bad << 2, 0, 0, 1;
  CHECK_THROWS_AS(invert_unimodular(bad), InvariantViolation);
  IntMat sing(2, 2);
  sing << 1, 1, 1, 1;
  CHECK_THROWS_AS(invert_unimodular(sing), InvariantViolation);
}

TEST_CASE("span membership") {
  RatMat cols = toRational(IntMat(IntMat::Zero(3, 2)));
  cols(0, 0) = Rational(1);
  cols(1, 0) = Rational(1);
  cols(1, 1) = Rational(1);
  cols(2, 1) = Rational(2);
  SpanChecker span(cols);
  CHECK(span.rank() == 2);
  RatVec in(3);
  in(0) = Rational(2);
  in(1) = Rational(5);
  in(2) = Rational(6);  // 2*c0 + 3*c1
  CHECK(span.contains(in));
  RatVec out(3);
  out(0) = Rational(1);
  out(1) = Rational(0);
  out(2) = Rational(0);
  CHECK_FALSE(span.contains(out));
}

TEST_CASE("rational field laws on random values") {
  std::mt19937_64 rng(77);
  auto randomRat = [&]() {
    Int n = static_cast<Int>(rng() % 2001) - 1000;
    Int d = static_cast<Int>(rng() % 1000) + 1;
    return Rational(n, d);
  };
  for (int trial = 0; trial < 1000; ++trial) {
    Rational a = randomRat(), b = randomRat(), c = randomRat();
    CHECK((a + b) == (b + a));
    CHECK((a * b) == (b * a));
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK((a - a).is_zero());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK((a < b) == !(a >= b));
  }
}

TEST_CASE("random unimodular matrices invert exactly") {
  // Products of elementary shears and swaps stay in GL_n(Z).
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    IntMat u = IntMat::Identity(n, n);
    for (int step = 0; step < 12; ++step) {
      int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
      if (i == j) continue;
      IntMat e = IntMat::Identity(n, n);
      e(i, j) = static_cast<Int>(rng() % 5) - 2;
      u = u * e;
    }
    Int d = det_integer(u);
    CHECK((d == 1 || d == -1));
    IntMat inv = invert_unimodular(u);
    CHECK(exact_eq(IntMat(u * inv), IntMat(IntMat::Identity(n, n))));
    CHECK(exact_eq(IntMat(inv * u), IntMat(IntMat::Identity(n, n))));
    CHECK(det_integer(inv) == d);
  }
}
