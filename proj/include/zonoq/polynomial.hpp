#pragma once

/*
 * IntPolynomial: dense univariate polynomial with arbitrary-precision
 * integer coefficients.
 *
 * Coefficients are stored ascending by power with no trailing zeros, so
 * structural equality is value equality.  The variable letter ('q' or 'd')
 * is carried for printing only; arithmetic ignores it and results inherit
 * the left operand's letter.
 */

#include <string>
#include <utility>
#include <vector>

#include "zonoq/bigint.hpp"

namespace zonoq {

class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial

  explicit IntPolynomial(std::vector<Int> coeffs, char var = 'q')
      : coeffs_(std::move(coeffs)), var_(var) {
    trim();
  }

  static IntPolynomial constant(Int c, char var = 'q') {
    return IntPolynomial({std::move(c)}, var);
  }

  static IntPolynomial monomial(Int c, int power, char var = 'q') {
    std::vector<Int> cs(static_cast<size_t>(power) + 1);
    cs.back() = std::move(c);
    return IntPolynomial(std::move(cs), var);
  }

  static IntPolynomial variable(char var = 'q') { return monomial(1, 1, var); }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Int coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(power)];
  }

  const std::vector<Int>& coeffs() const { return coeffs_; }

  char var() const { return var_; }

  IntPolynomial with_var(char var) const {
    IntPolynomial r = *this;
    r.var_ = var;
    return r;
  }

  void add_term(int power, const Int& c) {
    if (c == 0) return;
    if (power >= static_cast<int>(coeffs_.size()))
      coeffs_.resize(static_cast<size_t>(power) + 1);
    coeffs_[static_cast<size_t>(power)] += c;
    trim();
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator*=(const IntPolynomial& o) {
    *this = *this * o;
    return *this;
  }

  IntPolynomial& operator*=(const Int& s) {
    if (s == 0) {
      coeffs_.clear();
    } else {
      for (auto& c : coeffs_) c *= s;
    }
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    a += b;
    return a;
  }

  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    a -= b;
    return a;
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    r.var_ = a.var_;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
  }

  friend IntPolynomial operator*(IntPolynomial a, const Int& s) {
    a *= s;
    return a;
  }

  friend IntPolynomial operator*(const Int& s, IntPolynomial a) {
    a *= s;
    return a;
  }

  IntPolynomial operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  // Value equality; the variable letter does not participate.
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
    return !(a == b);
  }

  // Horner evaluation at an integer point.
  Int operator()(const Int& x) const {
    Int r = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
  }

  // Exact composition: returns this(s(.)).  Substitutions such as q -> -q
  // and q -> q+1 go through here.
  IntPolynomial compose(const IntPolynomial& s) const {
    IntPolynomial r;
    r.var_ = s.var_;
    for (size_t i = coeffs_.size(); i-- > 0;) {
      r = r * s;
      r.add_term(0, coeffs_[i]);
    }
    r.var_ = s.var_;
    return r;
  }

  IntPolynomial pow(int k) const {
    IntPolynomial r = constant(1, var_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  // Ascending display, e.g. "12 + 18q + 8q^2 + q^3"; compact drops the
  // spaces around the signs ("12+18q+8q^2+q^3").
  std::string str(bool compact = false) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      const Int& c = coeffs_[i];
      if (c == 0) continue;
      const bool neg = c < 0;
      if (out.empty()) {
        if (neg) out += '-';
      } else {
        out += compact ? (neg ? "-" : "+") : (neg ? " - " : " + ");
      }
      Int mag = neg ? Int(-c) : c;
      if (i == 0) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str();
        out += var_;
        if (i > 1) out += '^' + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
  char var_ = 'q';
};

}  // namespace zonoq
