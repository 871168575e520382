#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace wonderful {

using Int = std::int64_t;

/// Exact rational scalar over 64-bit integers, usable as an Eigen scalar.
/// Every product or sum is formed in 128-bit arithmetic and reduced before
/// narrowing; narrowing overflow throws instead of wrapping silently.
class Rational {
public:
  Rational() = default;
  Rational(Int n) : num_(n) {}  // NOLINT: implicit by design, mirrors int
  Rational(Int n, Int d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    assign(n, d);
  }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return fromWide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_,
                    wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return fromWide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_,
                    wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return fromWide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return fromWide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return wide(a.num_) * b.den_ < wide(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  using Wide = __int128;

  static Wide wide(Int v) { return static_cast<Wide>(v); }

  static Int narrow(Wide v) {
    if (v > static_cast<Wide>(INT64_MAX) || v < static_cast<Wide>(INT64_MIN))
      throw std::overflow_error("Rational: 64-bit overflow");
    return static_cast<Int>(v);
  }

  static Wide gcdWide(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational fromWide(Wide n, Wide d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      Rational r;
      return r;
    }
    Wide g = gcdWide(n, d);
    Rational r;
    r.num_ = narrow(n / g);
    r.den_ = narrow(d / g);
    return r;
  }

  void assign(Int n, Int d) { *this = fromWide(wide(n), wide(d)); }

  Int num_ = 0;
  Int den_ = 1;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace wonderful

namespace Eigen {

template <>
struct NumTraits<wonderful::Rational> : GenericNumTraits<wonderful::Rational> {
  using Real = wonderful::Rational;
  using NonInteger = wonderful::Rational;
  using Nested = wonderful::Rational;
  using Literal = wonderful::Int;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace wonderful {

using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline RatVec toRational(const IntVec& v) {
  RatVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rational(v(i));
  return r;
}

inline RatMat toRational(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

/// Exact entrywise equality for dense Eigen expressions.
template <typename DerivedA, typename DerivedB>
bool exact_eq(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace wonderful
