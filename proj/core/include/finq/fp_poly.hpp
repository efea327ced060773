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
#include <utility>
#include <vector>

#include "finq/integer.hpp"
#include "finq/polynomial.hpp"

/// Dense polynomial arithmetic over a prime field F_p, p < 2^64.
/// Coefficients are stored low-to-high in [0, p) with no trailing zeros.
namespace finq::fp {

using Coeffs = std::vector<std::uint64_t>;

Coeffs from_int(const IntPolynomial& poly, std::uint64_t p);
IntPolynomial to_int(const Coeffs& poly);

void trim(Coeffs& poly);
inline int degree(const Coeffs& poly) { return static_cast<int>(poly.size()) - 1; }
inline bool is_one(const Coeffs& poly) { return poly.size() == 1 && poly[0] == 1; }
inline Coeffs x() { return {0, 1}; }

Coeffs add(const Coeffs& a, const Coeffs& b, std::uint64_t p);
Coeffs sub(const Coeffs& a, const Coeffs& b, std::uint64_t p);
Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint64_t p);
Coeffs scale(const Coeffs& a, std::uint64_t s, std::uint64_t p);
std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b, std::uint64_t p);
Coeffs mod(const Coeffs& a, const Coeffs& b, std::uint64_t p);
Coeffs monic(const Coeffs& a, std::uint64_t p);
Coeffs gcd(const Coeffs& a, const Coeffs& b, std::uint64_t p);
Coeffs derivative(const Coeffs& a, std::uint64_t p);
Coeffs pow_mod(const Coeffs& base, const Integer& exp, const Coeffs& modulus, std::uint64_t p);

/// Rabin's test: x^(p^n) = x mod f, and gcd(x^(p^(n/r)) - x, f) = 1 for primes r | n.
bool is_irreducible(const Coeffs& f, std::uint64_t p);

/// Complete factorization of a nonzero polynomial into monic irreducibles with
/// multiplicities (leading unit dropped). Output is sorted by degree, then
/// coefficients. Equal-degree splitting uses a fixed-seed generator.
std::vector<std::pair<Coeffs, unsigned>> factor(const Coeffs& f, std::uint64_t p);

}  // namespace finq::fp
