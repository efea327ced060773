// Copyright 2026 The finq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "finq/integer.hpp"

namespace finq {

/// Dense univariate polynomial; coefficient i multiplies X^i. The highest
/// stored coefficient is never zero, so the zero polynomial is empty.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { normalize(); }
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Polynomial constant(const Coeff& value) { return Polynomial(std::vector<Coeff>{value}); }

  static Polynomial monomial(const Coeff& value, std::size_t degree) {
    std::vector<Coeff> c(degree + 1, Coeff(0));
    c[degree] = value;
    return Polynomial(std::move(c));
  }

  /// X^n - 1
  static Polynomial x_pow_minus_one(std::size_t n) {
    std::vector<Coeff> c(n + 1, Coeff(0));
    c[0] = -1;
    c[n] = 1;
    return Polynomial(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Coeff& lead() const { return c_.back(); }
  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const std::vector<Coeff>& coefficients() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Coeff operator()(const Coeff& x) const {
    Coeff acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    normalize();
    return *this;
  }

  Polynomial& operator*=(const Coeff& s) {
    for (auto& v : c_) v *= s;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Coeff& s) { return lhs *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial rhs) { return rhs *= s; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Coeff> out(lhs.c_.size() + rhs.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
      if (lhs.c_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.c_ == rhs.c_; }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

/// Scales by the positive lcm of the denominators.
IntPolynomial clear_denominators(const RatPolynomial& p);

/// Converts when every coefficient is integral; throws InvalidArgument otherwise.
IntPolynomial to_integer(const RatPolynomial& p);

IntPolynomial derivative(const IntPolynomial& p);

/// Euclidean division over Q; throws InvalidArgument on a zero divisor.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

/// Quotient of a by b in Z[X]; throws InvalidArgument unless b divides a exactly.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

RatPolynomial make_monic(const RatPolynomial& p);

/// Monic gcd over Q (zero when both inputs are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

struct ExtendedGcd {
  RatPolynomial gcd;  // monic
  RatPolynomial s;    // s*a + t*b = gcd
  RatPolynomial t;
};

ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b);

/// Human-readable form, highest degree first, e.g. "X^2 - X + 1".
std::string to_string(const IntPolynomial& p, char var = 'X');
std::string to_string(const RatPolynomial& p, char var = 'X');

}  // namespace finq
