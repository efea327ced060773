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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace finq {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& value);
/// "a" for integers, "a/b" otherwise; always canonical.
std::string to_string(const Rational& value);

Integer parse_integer(std::string_view text);
/// Accepts "a", "a/b" and "-a/b"; the result is canonicalized.
Rational parse_rational(std::string_view text);

bool fits_u64(const Integer& value);
std::uint64_t to_u64(const Integer& value);
Integer from_u64(std::uint64_t value);

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  if ((a | b) >> 32 == 0) return a * b % mod;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
/// Inverse modulo a prime (or any modulus coprime to a). Requires a != 0 mod m.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t mod);
/// Reduces an arbitrary integer into [0, mod).
std::uint64_t reduce_mod(const Integer& value, std::uint64_t mod);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);
/// Exact below 2^64; strong probable-prime test (40 rounds) above.
bool is_prime(const Integer& n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
std::uint64_t next_prime(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

using U64Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Trial division up to `trial_bound`. A leftover cofactor is accepted when it
/// is provably prime; otherwise FactorBoundExceeded is thrown.
U64Factorization factor_u64(std::uint64_t n, std::uint64_t trial_bound);

struct IntegerFactorization {
  std::vector<std::pair<Integer, unsigned>> factors;  // increasing primes
  Integer cofactor = 1;  // unfactored part (1 when complete)
  bool complete = true;
};

/// Factors |n| (n != 0) by trial division up to `trial_bound`. Primes below the
/// bound are always found. The remaining cofactor is classified as prime when
/// possible, otherwise `complete` is false.
IntegerFactorization factor_integer(const Integer& n, std::uint64_t trial_bound);

/// True when every prime factor of |n| lies in `primes` (n != 0).
bool is_supported_on(const Integer& n, const std::vector<std::uint64_t>& primes);

/// Trial-division bound used when none is passed explicitly. Reads
/// FINQ_FACTOR_BOUND once; defaults to 1000000.
std::uint64_t default_factor_bound();
/// Process-wide override of default_factor_bound(); 0 restores the default.
void set_default_factor_bound(std::uint64_t bound);

}  // namespace finq
