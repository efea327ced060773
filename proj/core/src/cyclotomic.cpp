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

#include "finq/cyclotomic.hpp"

#include <map>
#include <string>

#include "finq/error.hpp"

namespace finq {

IntPolynomial cyclotomic(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "cyclotomic polynomial needs n >= 1");
  std::map<std::uint64_t, IntPolynomial> phi;
  for (std::uint64_t d : divisors(n)) {
    IntPolynomial acc = IntPolynomial::x_pow_minus_one(d);
    for (const auto& [e, phi_e] : phi) {
      if (d % e == 0) acc = exact_quotient(acc, phi_e);
    }
    phi.emplace(d, std::move(acc));
  }
  return phi.at(n);
}

IntPolynomial real_cyclotomic(std::uint64_t m) {
  if (m <= 2) fail(ErrorKind::InvalidArgument, "real cyclotomic polynomial needs m > 2");
  const IntPolynomial phi = cyclotomic(2 * m);
  const std::size_t half = static_cast<std::size_t>(phi.degree()) / 2;
  // X^j + X^-j = D_j(Y) with Y = X + 1/X, D_0 = 2, D_1 = Y, D_j = Y D_{j-1} - D_{j-2}.
  const IntPolynomial y{Integer(0), Integer(1)};
  IntPolynomial prev = IntPolynomial::constant(2);
  IntPolynomial cur = y;
  IntPolynomial out = IntPolynomial::constant(phi.coeff(half));
  for (std::size_t j = 1; j <= half; ++j) {
    if (j > 1) {
      IntPolynomial next = y * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    out += cur * phi.coeff(half + j);
  }
  return out;
}

Rational resultant(const RatPolynomial& p, const RatPolynomial& q) {
  if (p.is_zero() || q.is_zero()) fail(ErrorKind::InvalidArgument, "resultant of a zero polynomial");
  RatPolynomial a = p, b = q;
  Rational acc = 1;
  for (;;) {
    const int da = a.degree();
    const int db = b.degree();
    if (db == 0) {
      Rational c = 1;
      for (int i = 0; i < da; ++i) c *= b.lead();
      return acc * c;
    }
    if (da == 0) {
      Rational c = 1;
      for (int i = 0; i < db; ++i) c *= a.lead();
      return acc * c;
    }
    if (da < db) {
      if ((da * db) % 2 != 0) acc = -acc;
      std::swap(a, b);
      continue;
    }
    RatPolynomial r = divmod(a, b).second;
    if (r.is_zero()) return 0;
    if ((da * db) % 2 != 0) acc = -acc;
    for (int i = 0; i < da - r.degree(); ++i) acc *= b.lead();
    a = std::move(b);
    b = std::move(r);
  }
}

Integer resultant(const IntPolynomial& p, const IntPolynomial& q) {
  const Rational r = resultant(to_rational(p), to_rational(q));
  if (r.get_den() != 1) fail(ErrorKind::InvalidArgument, "non-integral resultant of integer polynomials");
  return r.get_num();
}

BezoutEntry bezout_reduction(std::uint64_t n, std::uint64_t d) {
  if (n <= 1) fail(ErrorKind::InvalidArgument, "Bezout reduction needs n > 1");
  if (d == 0 || d >= n || n % d != 0)
    fail(ErrorKind::InvalidArgument, std::to_string(d) + " is not a proper divisor of " + std::to_string(n));
  const IntPolynomial phi = cyclotomic(n);
  const IntPolynomial xd = IntPolynomial::x_pow_minus_one(d);
  const Integer n_d = resultant(phi, xd);
  if (n_d == 0) fail(ErrorKind::InvalidArgument, "Phi_n shares a root with X^d - 1");
  // s*Phi + t*(X^d - 1) = 1 over Q; scaling by the resultant makes both integral.
  const ExtendedGcd eg = extended_gcd(to_rational(phi), to_rational(xd));
  if (eg.gcd.degree() != 0) fail(ErrorKind::InvalidArgument, "Phi_n and X^d - 1 are not coprime");
  BezoutEntry entry;
  entry.d = d;
  entry.a = to_integer(eg.s * Rational(n_d));
  entry.b = to_integer(eg.t * Rational(n_d));
  entry.n_d = n_d;
  return entry;
}

CyclotomicBezout modulus_bound(std::uint64_t n) {
  if (n <= 1) fail(ErrorKind::InvalidArgument, "modulus bound needs n > 1");
  CyclotomicBezout out;
  out.n = n;
  out.modulus = 1;
  for (std::uint64_t d : divisors(n)) {
    if (d == n) continue;
    BezoutEntry e = bezout_reduction(n, d);
    mpz_lcm(out.modulus.get_mpz_t(), out.modulus.get_mpz_t(), e.n_d.get_mpz_t());
    out.entries.push_back(std::move(e));
  }
  return out;
}

Integer modulus_bound_value(std::uint64_t n) {
  if (n <= 1) fail(ErrorKind::InvalidArgument, "modulus bound needs n > 1");
  const IntPolynomial phi = cyclotomic(n);
  Integer modulus = 1;
  for (std::uint64_t d : divisors(n)) {
    if (d == n) continue;
    const Integer r = resultant(phi, IntPolynomial::x_pow_minus_one(d));
    mpz_lcm(modulus.get_mpz_t(), modulus.get_mpz_t(), r.get_mpz_t());
  }
  return modulus;
}

}  // namespace finq
