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

#include <cstdint>
#include <vector>

#include "finq/integer.hpp"
#include "finq/polynomial.hpp"

namespace finq {

/// Phi_n, built by dividing X^n - 1 by Phi_d for every proper divisor d.
IntPolynomial cyclotomic(std::uint64_t n);

/// Minimal polynomial of 2cos(pi/m) = w + 1/w for w a primitive 2m-th root of
/// unity. Monic of degree phi(2m)/2, and
///   Phi_2m(X) = X^(phi(2m)/2) * real_cyclotomic(m)(X + 1/X).
/// Requires m > 2.
IntPolynomial real_cyclotomic(std::uint64_t m);

/// Sylvester resultant: Res(P, Q) = lc(P)^deg Q * lc(Q)^deg P * prod (a_i - b_j)
/// over roots a_i of P and b_j of Q. In particular Res(X - a, X - b) = a - b and
/// Res(P, c) = c^deg P for a constant c. Zero inputs are rejected.
Integer resultant(const IntPolynomial& p, const IntPolynomial& q);
Rational resultant(const RatPolynomial& p, const RatPolynomial& q);

/// A * Phi_n + B * (X^d - 1) = N_d with integral A, B.
struct BezoutEntry {
  std::uint64_t d = 0;
  IntPolynomial a;
  IntPolynomial b;
  Integer n_d;  // Res(Phi_n, X^d - 1), never zero
};

struct CyclotomicBezout {
  std::uint64_t n = 0;
  std::vector<BezoutEntry> entries;  // one per proper divisor, increasing d
  Integer modulus;                   // lcm of |N_d|
};

BezoutEntry bezout_reduction(std::uint64_t n, std::uint64_t d);
CyclotomicBezout modulus_bound(std::uint64_t n);

/// Same modulus as modulus_bound(n).modulus, without the Bezout polynomials.
Integer modulus_bound_value(std::uint64_t n);

}  // namespace finq
