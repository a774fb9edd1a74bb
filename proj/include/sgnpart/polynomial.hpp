#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sgnpart/bigint.hpp"

namespace sgnpart {

// Dense univariate polynomial with exact integer coefficients.
// coeff(i) is the coefficient of x^i. The zero polynomial stores no
// coefficients and has degree() == -1; every constructor strips trailing
// zero coefficients so equal polynomials compare equal member-wise.
class polynomial {
 public:
  polynomial() = default;

  explicit polynomial(std::vector<bigint> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static polynomial constant(bigint c) {
    return polynomial(std::vector<bigint>{std::move(c)});
  }

  static polynomial monomial(int degree, bigint coeff = 1) {
    std::vector<bigint> cs(static_cast<std::size_t>(degree) + 1);
    cs[static_cast<std::size_t>(degree)] = std::move(coeff);
    return polynomial(std::move(cs));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const bigint& coeff(int i) const {
    static const bigint zero;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const std::vector<bigint>& coeffs() const { return coeffs_; }

  bigint eval(const bigint& x) const {
    bigint acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  friend polynomial operator+(const polynomial& a, const polynomial& b) {
    std::vector<bigint> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i < a.coeffs_.size()) cs[i] += a.coeffs_[i];
      if (i < b.coeffs_.size()) cs[i] += b.coeffs_[i];
    }
    return polynomial(std::move(cs));
  }

  friend polynomial operator-(const polynomial& a, const polynomial& b) {
    std::vector<bigint> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i < a.coeffs_.size()) cs[i] += a.coeffs_[i];
      if (i < b.coeffs_.size()) cs[i] -= b.coeffs_[i];
    }
    return polynomial(std::move(cs));
  }

  friend polynomial operator*(const polynomial& a, const polynomial& b) {
    if (a.is_zero() || b.is_zero()) return polynomial();
    std::vector<bigint> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return polynomial(std::move(cs));
  }

  friend polynomial operator*(const bigint& c, const polynomial& p) {
    if (c.is_zero()) return polynomial();
    std::vector<bigint> cs = p.coeffs_;
    for (auto& x : cs) x *= c;
    return polynomial(std::move(cs));
  }

  polynomial& operator+=(const polynomial& o) { return *this = *this + o; }
  polynomial& operator-=(const polynomial& o) { return *this = *this - o; }
  polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

  friend bool operator==(const polynomial& a, const polynomial& b) = default;

  // "x^3 - 4x + 1" style rendering, constant "0" for the zero polynomial.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const bigint& c = coeffs_[i];
      if (c.is_zero()) continue;
      bigint mag = c.signum() < 0 ? -c : c;
      if (out.empty()) {
        if (c.signum() < 0) out += '-';
      } else {
        out += c.signum() < 0 ? " - " : " + ";
      }
      bool unit = mag == bigint(1);
      if (i == 0 || !unit) out += mag.to_string();
      if (i > 0) {
        out += 'x';
        if (i > 1) out += '^' + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<bigint> coeffs_;
};

}  // namespace sgnpart
