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

#include "finq/polynomial.hpp"

#include <sstream>

#include "finq/error.hpp"

namespace finq {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

IntPolynomial clear_denominators(const RatPolynomial& p) {
  Integer scale = 1;
  for (const auto& v : p.coefficients()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v.get_num() * (scale / v.get_den()));
  return IntPolynomial(std::move(c));
}

IntPolynomial to_integer(const RatPolynomial& p) {
  std::vector<Integer> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) {
    if (v.get_den() != 1) fail(ErrorKind::InvalidArgument, "polynomial has non-integral coefficient " + to_string(v));
    c.emplace_back(v.get_num());
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial derivative(const IntPolynomial& p) {
  std::vector<Integer> c;
  for (std::size_t i = 1; i < p.coefficients().size(); ++i) c.emplace_back(p.coefficients()[i] * i);
  return IntPolynomial(std::move(c));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPolynomial{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational& lb = b.lead();
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] / lb;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
  }
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    fail(ErrorKind::InvalidArgument, "inexact polynomial division");
  }
  std::vector<Integer> rem = a.coefficients();
  const int db = b.degree();
  std::vector<Integer> quo(static_cast<std::size_t>(a.degree() - db + 1), Integer(0));
  const Integer& lb = b.lead();
  for (int i = a.degree(); i >= db; --i) {
    const Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()) == 0)
      fail(ErrorKind::InvalidArgument, "inexact polynomial division");
    const Integer q = top / lb;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem) {
    if (r != 0) fail(ErrorKind::InvalidArgument, "inexact polynomial division");
  }
  return IntPolynomial(std::move(quo));
}

RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.lead();
  return p * inv;
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0 = RatPolynomial::constant(1), s1;
  RatPolynomial t0, t1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    RatPolynomial s2 = s0 - q * s1;
    RatPolynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

namespace {

template <class Coeff>
std::string render(const Polynomial<Coeff>& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Coeff c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || c != 1) {
      os << to_string(c);
      if (i > 0) os << '*';
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, char var) { return render(p, var); }
std::string to_string(const RatPolynomial& p, char var) { return render(p, var); }

}  // namespace finq
