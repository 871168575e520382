#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wonderful/rational.hpp"

namespace wonderful {

/// Dense integer polynomial in one variable t with 64-bit coefficients.
class Polynomial {
public:
  Polynomial() = default;

  void add_term(std::size_t degree, Int coeff) {
    if (degree >= c_.size()) c_.resize(degree + 1, 0);
    c_[degree] += coeff;
    trim();
  }

  Int coeff(std::size_t degree) const { return degree < c_.size() ? c_[degree] : 0; }

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Int evaluate_at_one() const {
    Int s = 0;
    for (Int v : c_) s += v;
    return s;
  }

  /// Substitute t -> t^m.
  Polynomial stretch(int m) const {
    Polynomial out;
    if (c_.empty()) return out;
    out.c_.assign((c_.size() - 1) * static_cast<std::size_t>(m) + 1, 0);
    for (std::size_t k = 0; k < c_.size(); ++k)
      out.c_[k * static_cast<std::size_t>(m)] = c_[k];
    out.trim();
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < out.c_.size(); ++k)
      out.c_[k] = a.coeff(k) + b.coeff(k);
    out.trim();
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    if (a.c_.empty() || b.c_.empty()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    out.trim();
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  const std::vector<Int>& coeffs() const { return c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      if (!s.empty()) s += " + ";
      if (k == 0) {
        s += std::to_string(c_[k]);
      } else {
        if (c_[k] != 1) s += std::to_string(c_[k]) + "*";
        s += (k == 1) ? "t" : "t^" + std::to_string(k);
      }
    }
    return s.empty() ? "0" : s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

}  // namespace wonderful
